#include "orbitmorse/subgroup.hpp"

#include <algorithm>

#include "orbitmorse/error.hpp"

namespace orbitmorse {

Subgroup::Subgroup(std::size_t ambient_order, std::vector<ElementId> members)
    : ambient_order_(ambient_order), bits_((ambient_order + 63) / 64, 0), key_(std::move(members))
{
    std::sort(key_.begin(), key_.end());
    key_.erase(std::unique(key_.begin(), key_.end()), key_.end());
    for (ElementId x : key_)
    {
        if (x >= ambient_order)
            throw Error(ErrorKind::NotSubgroup, "element index outside the ambient group");
        bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept
{
    if (order() > other.order() || ambient_order_ != other.ambient_order_)
        return false;
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w])
            return false;
    return true;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

unsigned p_valuation(std::uint64_t n, std::uint64_t p)
{
    unsigned k = 0;
    while (n != 0 && n % p == 0)
    {
        n /= p;
        ++k;
    }
    return k;
}

bool is_p_power(std::uint64_t n, std::uint64_t p)
{
    if (n == 0)
        return false;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

Subgroup trivial_subgroup(const PermGroup& G)
{
    return Subgroup(G.order(), {PermGroup::identity_id});
}

Subgroup whole_group(const PermGroup& G)
{
    std::vector<ElementId> all(G.order());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<ElementId>(i);
    return Subgroup(G.order(), std::move(all));
}

Subgroup generate_subgroup(const PermGroup& G, std::span<const ElementId> generators)
{
    std::vector<bool> in(G.order(), false);
    std::vector<ElementId> members{PermGroup::identity_id};
    in[PermGroup::identity_id] = true;
    // In a finite group right multiplication by the generators reaches every
    // element of the generated subgroup.
    for (std::size_t i = 0; i < members.size(); ++i)
    {
        for (ElementId g : generators)
        {
            ElementId y = G.mul(members[i], g);
            if (!in[y])
            {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    return Subgroup(G.order(), std::move(members));
}

Subgroup join(const PermGroup& G, const Subgroup& H, ElementId x)
{
    if (H.contains(x))
        return H;
    std::vector<ElementId> gens = H.members();
    gens.push_back(x);
    return generate_subgroup(G, gens);
}

bool is_closed(const PermGroup& G, const Subgroup& H)
{
    if (H.ambient_order() != G.order() || !H.contains(PermGroup::identity_id))
        return false;
    for (ElementId a : H.members())
    {
        if (!H.contains(G.inv(a)))
            return false;
        for (ElementId b : H.members())
            if (!H.contains(G.mul(a, b)))
                return false;
    }
    return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b)
{
    std::vector<ElementId> common;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(common));
    return Subgroup(a.ambient_order(), std::move(common));
}

Subgroup conjugate_subgroup(const PermGroup& G, ElementId g, const Subgroup& H)
{
    std::vector<ElementId> image;
    image.reserve(H.order());
    for (ElementId h : H.members())
        image.push_back(G.conj(g, h));
    return Subgroup(G.order(), std::move(image));
}

bool normalizes(const PermGroup& G, ElementId g, const Subgroup& H)
{
    for (ElementId h : H.members())
        if (!H.contains(G.conj(g, h)))
            return false;
    return true;
}

Subgroup normalizer(const PermGroup& G, const Subgroup& H)
{
    std::vector<ElementId> members;
    for (std::size_t g = 0; g < G.order(); ++g)
        if (normalizes(G, static_cast<ElementId>(g), H))
            members.push_back(static_cast<ElementId>(g));
    return Subgroup(G.order(), std::move(members));
}

Subgroup normalizer_in(const PermGroup& G, const Subgroup& K, const Subgroup& H)
{
    std::vector<ElementId> members;
    for (ElementId g : K.members())
        if (normalizes(G, g, H))
            members.push_back(g);
    return Subgroup(G.order(), std::move(members));
}

Subgroup chain_normalizer(const PermGroup& G, std::span<const Subgroup> chain)
{
    if (chain.empty())
        throw Error(ErrorKind::EmptyChain, "chain normalizer of an empty chain");
    std::vector<ElementId> members;
    for (std::size_t g = 0; g < G.order(); ++g)
    {
        bool all = std::all_of(chain.begin(), chain.end(), [&](const Subgroup& H) {
            return normalizes(G, static_cast<ElementId>(g), H);
        });
        if (all)
            members.push_back(static_cast<ElementId>(g));
    }
    return Subgroup(G.order(), std::move(members));
}

bool is_normal_in(const PermGroup& G, const Subgroup& H, const Subgroup& K)
{
    if (!H.is_subset_of(K))
        return false;
    for (ElementId k : K.members())
        if (!normalizes(G, k, H))
            return false;
    return true;
}

bool is_sylow_in(const Subgroup& P, const Subgroup& N, std::uint64_t p)
{
    if (!P.is_subset_of(N))
        throw Error(ErrorKind::NotSubgroup, "P is not contained in N");
    return (N.order() / P.order()) % p != 0;
}

Subgroup sylow_extension(const PermGroup& G, const Subgroup& N, const Subgroup& P,
                         std::uint64_t p, std::mt19937_64* rng)
{
    if (is_sylow_in(P, N, p))
        throw Error(ErrorKind::AlreadySylow, "P is already a Sylow subgroup of N");

    Subgroup current = P;
    std::vector<ElementId> candidates;
    while (!is_sylow_in(current, N, p))
    {
        // Any p-element of N_N(current) outside current gives a larger
        // p-group; one exists because current is subnormal in a Sylow
        // subgroup of N containing it.
        candidates.clear();
        for (ElementId x : N.members())
        {
            if (current.contains(x) || !is_p_power(G.element_order(x), p) ||
                !normalizes(G, x, current))
                continue;
            candidates.push_back(x);
            if (rng == nullptr)
                break;
        }
        if (candidates.empty())
            throw Error(ErrorKind::NotSubgroup, "no p-element normalizes a non-Sylow p-subgroup");
        ElementId pick = candidates.front();
        if (rng != nullptr)
        {
            std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
            pick = candidates[dist(*rng)];
        }
        current = join(G, current, pick);
    }
    return current;
}

} // namespace orbitmorse
