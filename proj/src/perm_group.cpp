#include "orbitmorse/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "orbitmorse/error.hpp"

namespace orbitmorse {

namespace {

constexpr std::size_t kTableLimit = 2048;

} // namespace

PermGroup PermGroup::generate(std::vector<Permutation> generators, std::size_t degree,
                              const GroupLimits& limits)
{
    if (!generators.empty())
        degree = generators.front().degree();
    if (degree == 0)
        throw Error(ErrorKind::InvalidPermutation, "degree must be at least 1");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw Error(ErrorKind::DegreeMismatch, "generators act on different point counts");

    // Breadth-first closure under right multiplication by generators.
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> frontier{Permutation::identity(degree)};
    seen.insert(frontier.front());
    while (!frontier.empty())
    {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
        {
            for (const auto& g : generators)
            {
                Permutation y = x * g;
                if (seen.insert(y).second)
                {
                    if (seen.size() > limits.max_order)
                        throw Error(ErrorKind::SizeLimit,
                                    "group order exceeds cap of " + std::to_string(limits.max_order));
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }

    PermGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(generators);
    G.elements_.assign(seen.begin(), seen.end());
    std::sort(G.elements_.begin(), G.elements_.end());
    G.index_.reserve(G.elements_.size());
    for (std::size_t i = 0; i < G.elements_.size(); ++i)
        G.index_.emplace(G.elements_[i], static_cast<ElementId>(i));
    G.large_ = G.elements_.size() > limits.warn_order;

    const std::size_t n = G.elements_.size();
    if (n <= kTableLimit)
    {
        G.table_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                G.table_[a * n + b] = G.index_.at(G.elements_[a] * G.elements_[b]);
    }

    G.inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        G.inverse_[a] = G.index_.at(G.elements_[a].inverse());

    G.element_order_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
    {
        std::size_t k = 1;
        ElementId x = static_cast<ElementId>(a);
        while (x != identity_id)
        {
            x = G.mul(x, static_cast<ElementId>(a));
            ++k;
        }
        G.element_order_[a] = k;
    }
    return G;
}

std::optional<ElementId> PermGroup::index_of(const Permutation& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

ElementId PermGroup::mul(ElementId a, ElementId b) const
{
    if (!table_.empty())
        return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return index_.at(elements_[a] * elements_[b]);
}

} // namespace orbitmorse
