#ifndef ORBITMORSE_PERM_GROUP_HPP
#define ORBITMORSE_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "orbitmorse/permutation.hpp"

namespace orbitmorse {

/// Index of an element in PermGroup::elements(); 0 is always the identity.
using ElementId = std::uint32_t;

struct GroupLimits
{
    std::size_t max_order = 10000;
    std::size_t warn_order = 1000;
};

/**
 * A finite permutation group with all of its elements enumerated.
 *
 * Elements are indexed in lexicographic order of their image arrays, so the
 * identity has index 0 and indexing is independent of the generating set.
 * Immutable after construction; safe to share across threads.
 */
class PermGroup
{
  public:
    /// Closes `generators` under composition. An empty list gives the
    /// trivial group on `degree` points. Throws DegreeMismatch or SizeLimit.
    static PermGroup generate(std::vector<Permutation> generators, std::size_t degree = 1,
                              const GroupLimits& limits = {});

    std::size_t degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const Permutation& element(ElementId id) const { return elements_[id]; }

    std::optional<ElementId> index_of(const Permutation& p) const;

    /// Index of element(a) * element(b).
    ElementId mul(ElementId a, ElementId b) const;
    ElementId inv(ElementId a) const { return inverse_[a]; }
    /// Index of g * h * g^-1.
    ElementId conj(ElementId g, ElementId h) const { return mul(mul(g, h), inverse_[g]); }
    std::size_t element_order(ElementId a) const { return element_order_[a]; }

    /// True when the order is above the configured warning threshold.
    bool large() const noexcept { return large_; }

    static constexpr ElementId identity_id = 0;

  private:
    PermGroup() = default;

    std::size_t degree_ = 1;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, ElementId, PermutationHash> index_;
    std::vector<ElementId> inverse_;
    std::vector<std::size_t> element_order_;
    // Full Cayley table, only populated for small groups.
    std::vector<ElementId> table_;
    bool large_ = false;
};

/// Convenience wrapper matching the group enumeration entry point.
inline PermGroup enumerate_group(std::vector<Permutation> generators, std::size_t degree = 1,
                                 const GroupLimits& limits = {})
{
    return PermGroup::generate(std::move(generators), degree, limits);
}

} // namespace orbitmorse

#endif
