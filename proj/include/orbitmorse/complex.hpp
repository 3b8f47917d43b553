#ifndef ORBITMORSE_COMPLEX_HPP
#define ORBITMORSE_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitmorse/subgroup.hpp"

namespace orbitmorse {

using SubgroupId = std::uint32_t;
using CellId = std::uint32_t;

/**
 * The nontrivial p-subgroups of G, indexed by canonical key, together with
 * the conjugation action and the containment / normality relations among
 * them.
 */
class PSubgroupTable
{
  public:
    /// Throws NotPrime, or EmptyComplex when p does not divide |G|.
    PSubgroupTable(std::shared_ptr<const PermGroup> group, std::uint64_t p);

    const PermGroup& group() const noexcept { return *group_; }
    const std::shared_ptr<const PermGroup>& group_ptr() const noexcept { return group_; }
    std::uint64_t prime() const noexcept { return p_; }
    /// t = ν_p(|G|).
    unsigned sylow_exponent() const noexcept { return t_; }

    std::size_t size() const noexcept { return subgroups_.size(); }
    const Subgroup& subgroup(SubgroupId id) const { return subgroups_[id]; }
    const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
    std::optional<SubgroupId> index_of(const Subgroup& H) const;

    /// Index of g P_h g^-1.
    SubgroupId conjugate(ElementId g, SubgroupId h) const
    {
        return conj_[static_cast<std::size_t>(g) * subgroups_.size() + h];
    }
    /// P_a < P_b.
    bool below(SubgroupId a, SubgroupId b) const { return below_[a * subgroups_.size() + b]; }
    /// P_a < P_b and P_a ⊴ P_b.
    bool normal_below(SubgroupId a, SubgroupId b) const
    {
        return normal_below_[a * subgroups_.size() + b];
    }
    /// log_p |P_h|.
    unsigned log_order(SubgroupId h) const { return log_order_[h]; }
    bool is_sylow(SubgroupId h) const { return log_order_[h] == t_; }

  private:
    std::shared_ptr<const PermGroup> group_;
    std::uint64_t p_;
    unsigned t_;
    std::vector<Subgroup> subgroups_;
    std::map<std::vector<ElementId>, SubgroupId> index_;
    std::vector<SubgroupId> conj_;
    std::vector<bool> below_;
    std::vector<bool> normal_below_;
    std::vector<unsigned> log_order_;
};

/// A strict chain P_0 < ... < P_n of p-subgroups, bottom first.
struct ChainCell
{
    std::vector<SubgroupId> subgroup_ids;

    std::size_t dim() const noexcept { return subgroup_ids.size() - 1; }
    SubgroupId top() const { return subgroup_ids.back(); }

    friend auto operator<=>(const ChainCell&, const ChainCell&) = default;
};

bool is_strict_chain(const PSubgroupTable& table, const ChainCell& chain);
/// Strict, and every member normal in the top group.
bool is_robinson_chain(const PSubgroupTable& table, const ChainCell& chain);

ChainCell conjugate_chain(const PSubgroupTable& table, ElementId g, const ChainCell& chain);

/// Lexicographic minimum of the G-orbit of `chain`. Subgroup ids follow
/// canonical-key order, so this is the minimum under key comparison.
ChainCell canonical_orbit_rep(const ChainCell& chain, const PSubgroupTable& table);

/// Strict Robinson chains by dimension, each exactly once (not quotiented).
std::vector<std::vector<ChainCell>> build_robinson_cells(const PSubgroupTable& table);
/// All strict chains of the p-subgroup poset by dimension.
std::vector<std::vector<ChainCell>> build_brown_cells(const PSubgroupTable& table);

enum class MorseClass : std::uint8_t
{
    Unassigned,
    Critical,
    Redundant,
    Collapsible,
};

std::string_view to_string(MorseClass c);

struct OrbitCell
{
    ChainCell rep;
    CellId cell_id = 0;
    MorseClass morse_class = MorseClass::Unassigned;

    std::size_t dim() const noexcept { return rep.dim(); }
};

/**
 * Cells plus face table of a Δ-complex style structure. faces[c][i] is the
 * cell id of d_i(c). Cells are identified by id only, never by vertex sets.
 */
struct FaceTable
{
    std::vector<std::size_t> dims;
    std::vector<std::vector<CellId>> faces;

    std::size_t size() const noexcept { return dims.size(); }
    std::vector<std::size_t> dim_counts() const;
};

enum class ComplexKind
{
    Robinson,
    Brown,
};

/**
 * The orbit quotient R_p(G)/G (or the Brown order complex quotient), one
 * cell per G-orbit of nondegenerate chains. Cells are ordered by dimension,
 * then by representative.
 */
class QuotientComplex
{
  public:
    const PSubgroupTable& table() const noexcept { return *table_; }
    const std::shared_ptr<const PSubgroupTable>& table_ptr() const noexcept { return table_; }
    ComplexKind kind() const noexcept { return kind_; }

    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<OrbitCell>& cells() const noexcept { return cells_; }
    const OrbitCell& cell(CellId id) const { return cells_.at(id); }
    std::span<const CellId> faces(CellId id) const { return faces_.faces.at(id); }
    const FaceTable& face_table() const noexcept { return faces_; }

    std::vector<std::size_t> dim_counts() const { return faces_.dim_counts(); }
    std::size_t max_dim() const noexcept { return cells_.empty() ? 0 : cells_.back().dim(); }

    /// Cell of the orbit containing `chain` (any representative).
    std::optional<CellId> find(const ChainCell& chain) const;
    /// Lookup of an already canonical representative.
    std::optional<CellId> find_canonical(const ChainCell& rep) const;

    void set_morse_class(CellId id, MorseClass c) { cells_.at(id).morse_class = c; }

  private:
    friend QuotientComplex build_quotient_of(std::shared_ptr<const PSubgroupTable>, ComplexKind);

    std::shared_ptr<const PSubgroupTable> table_;
    ComplexKind kind_ = ComplexKind::Robinson;
    std::vector<OrbitCell> cells_;
    FaceTable faces_;
    std::map<std::vector<SubgroupId>, CellId> index_;
};

QuotientComplex build_quotient_of(std::shared_ptr<const PSubgroupTable> table, ComplexKind kind);

/// R_p(G)/G.
inline QuotientComplex build_quotient(std::shared_ptr<const PSubgroupTable> table)
{
    return build_quotient_of(std::move(table), ComplexKind::Robinson);
}

/// |S_p(G)|/G, all strict chains without the normality condition.
inline QuotientComplex build_brown_quotient(std::shared_ptr<const PSubgroupTable> table)
{
    return build_quotient_of(std::move(table), ComplexKind::Brown);
}

/// d_i of a cell. Throws IndexOutOfRange unless dim >= 1 and i <= dim.
CellId face(const QuotientComplex& X, CellId cell, std::size_t i);

long long euler_characteristic(std::span<const std::size_t> dim_counts);
inline long long euler_characteristic(const QuotientComplex& X)
{
    auto counts = X.dim_counts();
    return euler_characteristic(counts);
}

/// Violations of d_i d_j = d_{j-1} d_i (i < j) and of face-dimension
/// consistency; empty when the table is a valid Δ-complex.
std::vector<std::string> check_simplicial_identities(const FaceTable& faces);

/// Conjugates `trials` random cells by random elements and checks that the
/// canonical representative is unchanged.
bool check_orbit_soundness(const QuotientComplex& X, std::size_t trials, std::uint64_t seed);

} // namespace orbitmorse

#endif
