#ifndef ORBITMORSE_P_SUBGROUPS_HPP
#define ORBITMORSE_P_SUBGROUPS_HPP

#include <cstdint>
#include <vector>

#include "orbitmorse/subgroup.hpp"

namespace orbitmorse {

/**
 * Every nontrivial p-subgroup of G, sorted by canonical key.
 *
 * Finds one Sylow p-subgroup S, enumerates all subgroups of S by adjoining
 * elements bottom-up, then closes the result under conjugation by G. Every
 * p-subgroup lies in a conjugate of S, so nothing is missed. Empty when p
 * does not divide |G|. Throws NotPrime.
 */
std::vector<Subgroup> all_p_subgroups(const PermGroup& G, std::uint64_t p);

/// All nontrivial subgroups of a p-group S (given as a subgroup of G).
std::vector<Subgroup> subgroups_of_p_group(const PermGroup& G, const Subgroup& S);

} // namespace orbitmorse

#endif
