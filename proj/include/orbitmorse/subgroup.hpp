#ifndef ORBITMORSE_SUBGROUP_HPP
#define ORBITMORSE_SUBGROUP_HPP

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "orbitmorse/perm_group.hpp"

namespace orbitmorse {

/**
 * A subgroup of an ambient PermGroup, stored as a membership bit set over
 * element indices together with its sorted element list.
 *
 * The sorted element list is the canonical key: equality and ordering of
 * subgroups are defined by it.
 */
class Subgroup
{
  public:
    Subgroup() = default;
    /// `members` need not be sorted; duplicates are removed. No closure
    /// check is done here (see is_closed()).
    Subgroup(std::size_t ambient_order, std::vector<ElementId> members);

    std::size_t order() const noexcept { return key_.size(); }
    bool contains(ElementId x) const noexcept
    {
        return x < ambient_order_ && ((bits_[x >> 6] >> (x & 63)) & 1u);
    }
    const std::vector<ElementId>& canonical_key() const noexcept { return key_; }
    const std::vector<ElementId>& members() const noexcept { return key_; }
    std::size_t ambient_order() const noexcept { return ambient_order_; }

    bool is_subset_of(const Subgroup& other) const noexcept;
    bool is_proper_subgroup_of(const Subgroup& other) const noexcept
    {
        return order() < other.order() && is_subset_of(other);
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.key_ == b.key_; }
    friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b)
    {
        return a.key_ <=> b.key_;
    }

  private:
    std::size_t ambient_order_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<ElementId> key_;
};

bool is_prime(std::uint64_t n);
/// Exponent of p in n (n > 0).
unsigned p_valuation(std::uint64_t n, std::uint64_t p);
/// True iff n = p^k for some k >= 0.
bool is_p_power(std::uint64_t n, std::uint64_t p);

Subgroup trivial_subgroup(const PermGroup& G);
Subgroup whole_group(const PermGroup& G);

/// Smallest subgroup containing `generators`.
Subgroup generate_subgroup(const PermGroup& G, std::span<const ElementId> generators);
/// Smallest subgroup containing H and x.
Subgroup join(const PermGroup& G, const Subgroup& H, ElementId x);

/// Closure check: identity present and closed under products and inverses.
bool is_closed(const PermGroup& G, const Subgroup& H);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// g H g^-1.
Subgroup conjugate_subgroup(const PermGroup& G, ElementId g, const Subgroup& H);
bool normalizes(const PermGroup& G, ElementId g, const Subgroup& H);

/// N_G(H) = { g in G : g H g^-1 = H }.
Subgroup normalizer(const PermGroup& G, const Subgroup& H);
/// N_K(H) = K ∩ N_G(H).
Subgroup normalizer_in(const PermGroup& G, const Subgroup& K, const Subgroup& H);

/// Intersection of the normalizers of every chain member. Throws EmptyChain.
Subgroup chain_normalizer(const PermGroup& G, std::span<const Subgroup> chain);

/// H ⊴ K (requires H ⊆ K; returns false otherwise).
bool is_normal_in(const PermGroup& G, const Subgroup& H, const Subgroup& K);

/// True iff p does not divide |N| / |P|. Throws NotSubgroup if P ⊄ N.
bool is_sylow_in(const Subgroup& P, const Subgroup& N, std::uint64_t p);

/**
 * A Sylow p-subgroup S of N with P < S.
 *
 * Grows P one element at a time by adjoining a p-element of N that
 * normalizes the current subgroup. Without `rng` the smallest such element
 * index is taken, which makes the result deterministic; with `rng` a
 * uniformly random candidate is taken instead.
 *
 * Throws NotSubgroup if P ⊄ N, AlreadySylow if P is Sylow in N.
 */
Subgroup sylow_extension(const PermGroup& G, const Subgroup& N, const Subgroup& P,
                         std::uint64_t p, std::mt19937_64* rng = nullptr);

} // namespace orbitmorse

#endif
