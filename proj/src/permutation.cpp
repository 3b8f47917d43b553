#include "orbitmorse/permutation.hpp"

#include "orbitmorse/error.hpp"

namespace orbitmorse {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
    std::vector<bool> hit(images_.size(), false);
    for (Point x : images_)
    {
        if (x >= images_.size() || hit[x])
            throw Error(ErrorKind::InvalidPermutation, "image array is not a bijection");
        hit[x] = true;
    }
}

Permutation Permutation::identity(std::size_t degree)
{
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
        images[i] = static_cast<Point>(i);
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::span<const std::vector<Point>> cycles)
{
    std::vector<Point> images = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles)
    {
        for (std::size_t i = 0; i < cycle.size(); ++i)
        {
            Point x = cycle[i];
            if (x >= degree)
                throw Error(ErrorKind::InvalidPermutation,
                            "cycle point " + std::to_string(x + 1) + " exceeds degree");
            if (used[x])
                throw Error(ErrorKind::InvalidPermutation,
                            "point " + std::to_string(x + 1) + " appears in more than one cycle");
            used[x] = true;
            images[x] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i]] = static_cast<Point>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

std::string Permutation::to_cycle_string() const
{
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start)
    {
        if (seen[start] || images_[start] == start)
            continue;
        out += '(';
        Point x = static_cast<Point>(start);
        bool first = true;
        while (!seen[x])
        {
            seen[x] = true;
            if (!first)
                out += ' ';
            out += std::to_string(x + 1);
            first = false;
            x = images_[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.degree() != b.degree())
        throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of different degree");
    std::vector<Point> images(a.degree());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = a.images_[b.images_[i]];
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
    // FNV-1a over the image array
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images())
    {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace orbitmorse
