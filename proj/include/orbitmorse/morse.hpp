#ifndef ORBITMORSE_MORSE_HPP
#define ORBITMORSE_MORSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitmorse/complex.hpp"

namespace orbitmorse {

/**
 * Morse class of a chain, computed on any representative:
 * the Sylow vertex is Critical; a chain whose top group is not Sylow in
 * the chain normalizer N_G(P_0, ..., P_n) is Redundant; otherwise the chain
 * has dimension >= 1 and is Collapsible.
 */
MorseClass classify_chain(const PSubgroupTable& table, const ChainCell& chain);
MorseClass classify(const QuotientComplex& X, CellId cell);

/// Classifies every cell of X in place.
void assign_morse_classes(QuotientComplex& X);

struct MorseClassCounts
{
    std::vector<std::size_t> critical;
    std::vector<std::size_t> redundant;
    std::vector<std::size_t> collapsible;
};

MorseClassCounts count_classes(const QuotientComplex& X);

struct MatchTarget
{
    CellId collapsible = 0;
    /// Face position of the redundant cell inside its partner.
    std::size_t iota = 0;
};

/// Critical cells plus the pairing redundant -> (collapsible, ι).
struct MorseMatching
{
    std::vector<CellId> critical;
    std::map<CellId, MatchTarget> pairs;

    std::map<CellId, CellId> inverse() const;
};

/**
 * The matching c(τ) = [P_0, ..., P_n, P] with P a Sylow subgroup of the
 * chain normalizer containing P_n, and ι(τ) = n + 1. Classes must be
 * assigned. Throws MatchingFailure if an image is not collapsible or the
 * pairing is not a bijection onto the collapsible cells.
 */
MorseMatching build_matching(const QuotientComplex& X);

/**
 * Structural checks of a matching against X and the assigned classes:
 * partition, dimension and face-index locality, bijectivity, and
 * d_j(c(τ)) != τ for j != ι(τ). Empty result means valid.
 */
std::vector<std::string> validate_matching(const QuotientComplex& X, const MorseMatching& M);

/// The unique critical cell must be the vertex of the Sylow class.
std::vector<std::string> check_critical_cells(const QuotientComplex& X, const MorseMatching& M);

enum class EdgeKind
{
    MatchUp,
    FaceDown,
};

struct DigraphEdge
{
    CellId from;
    CellId to;
    EdgeKind kind;
};

/**
 * Vertices are the matched cells; edges are τ -> c(τ) and σ -> d_j(σ) for
 * j != ι(c^-1(σ)). Face edges landing outside the vertex set (on critical
 * cells) are dropped.
 */
class MorseDigraph
{
  public:
    MorseDigraph() = default;
    MorseDigraph(std::vector<CellId> vertices, std::vector<DigraphEdge> edges);

    const std::vector<CellId>& vertices() const noexcept { return vertices_; }
    const std::vector<DigraphEdge>& edges() const noexcept { return edges_; }
    bool contains(CellId c) const { return local_.contains(c); }
    /// Indices into edges() of edges leaving `c`.
    const std::vector<std::size_t>& out_edges(CellId c) const { return out_[local_.at(c)]; }

  private:
    std::vector<CellId> vertices_;
    std::vector<DigraphEdge> edges_;
    std::map<CellId, std::size_t> local_;
    std::vector<std::vector<std::size_t>> out_;
};

MorseDigraph build_digraph(const QuotientComplex& X, const MorseMatching& M);

/// Either a topological order of all vertices or a directed cycle.
struct AcyclicityCertificate
{
    bool acyclic = true;
    std::vector<CellId> order;
    std::vector<CellId> cycle;
};

AcyclicityCertificate check_acyclic(const MorseDigraph& D);

/// Independent check that `order` is a topological order of D (or that
/// `cycle` is a directed cycle in D).
bool verify_certificate(const MorseDigraph& D, const AcyclicityCertificate& cert);

/// log_p |P_n| for the top group of the cell.
unsigned height(const QuotientComplex& X, CellId cell);

/// Edge count of the longest path from a redundant cell whose edges alternate
/// redundant -> collapsible -> redundant. D must be acyclic.
std::size_t longest_alternating_path(const MorseDigraph& D, const MorseMatching& M);

/// Throws BoundViolated when length > 2(t - 1).
void enforce_alternating_bound(std::size_t length, unsigned t);

/// Height strictly increases along MatchUp edges and is constant along
/// FaceDown edges.
std::vector<std::string> check_height_discipline(const QuotientComplex& X, const MorseDigraph& D);

/**
 * For every directed path between consecutive redundant cells τ ->...-> τ',
 * dim τ' <= dim τ with equality exactly when the path is alternating.
 */
std::vector<std::string> check_dimension_discipline(const QuotientComplex& X,
                                                    const MorseDigraph& D,
                                                    const MorseMatching& M);

struct CollapseStep
{
    CellId collapsible;
    CellId free_face;
};

struct CollapseSchedule
{
    std::vector<CollapseStep> steps;
    CellId terminal_cell = 0;
};

/**
 * Executes the matched pairs as elementary collapses against a live
 * coface-count table, preferring pairs whose collapsible cell comes first in
 * the topological order of D. Free-face status is re-verified before every
 * step. Throws StuckCollapse if no pair is collapsible before completion, or
 * if anything other than a single vertex survives.
 */
CollapseSchedule collapse_schedule(const QuotientComplex& X, const MorseMatching& M,
                                   const AcyclicityCertificate& cert);

/// Replays a schedule on a face table; empty result means every step was an
/// elementary collapse and only the terminal cell survives.
std::vector<std::string> verify_collapse_schedule(const FaceTable& faces,
                                                  const CollapseSchedule& schedule);

struct IndependenceReport
{
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> details;

    bool passed() const noexcept { return failures == 0; }
};

/**
 * Randomized check that classification and c do not depend on the orbit
 * representative or on which Sylow extension is chosen. Each trial
 * conjugates a random cell and a random redundant cell by random elements,
 * reclassifies, and recomputes c with a randomly chosen Sylow extension.
 */
IndependenceReport representative_independence_test(const QuotientComplex& X,
                                                     const MorseMatching& M, std::size_t trials,
                                                     std::uint64_t seed);

} // namespace orbitmorse

#endif
