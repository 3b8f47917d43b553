#ifndef ORBITMORSE_HOMOLOGY_HPP
#define ORBITMORSE_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbitmorse/complex.hpp"

namespace orbitmorse {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix
{
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// boundary(n) is ∂_n : C_n -> C_{n-1}, shape (#cells_{n-1} x #cells_n).
struct IntegerChainComplex
{
    std::vector<std::size_t> dim_counts;
    std::vector<IntegerMatrix> boundaries; // index 0 unused

    std::size_t top_dim() const noexcept { return dim_counts.empty() ? 0 : dim_counts.size() - 1; }
    const IntegerMatrix& boundary(std::size_t n) const { return boundaries.at(n); }
};

/**
 * Boundary matrices of the normalized chain complex: the column of a cell σ
 * is Σ_i (-1)^i e(d_i σ). Rows and columns follow cell-id order within each
 * dimension. Throws BoundaryCheckFailed unless ∂_n ∂_{n+1} = 0 for all n.
 */
IntegerChainComplex boundary_matrices(const FaceTable& faces);

struct SmithForm
{
    /// Nonzero diagonal entries d_1 | d_2 | ..., all positive.
    std::vector<Integer> invariants;
    std::size_t rank = 0;
};

SmithForm smith_normal_form(IntegerMatrix M);

struct HomologyGroup
{
    std::size_t betti = 0;
    /// Torsion coefficients, each >= 2 and dividing the next.
    std::vector<Integer> torsion;

    bool trivial() const noexcept { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyProfile
{
    std::vector<HomologyGroup> groups;
    bool reduced = true;

    bool trivial() const;
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Integral homology in every dimension; with `reduced`, H_0 drops one
/// free summand when the complex is nonempty.
HomologyProfile homology(const IntegerChainComplex& C, bool reduced);

inline HomologyProfile reduced_homology(const IntegerChainComplex& C) { return homology(C, true); }

struct CrossCheckResult
{
    HomologyProfile robinson;
    HomologyProfile brown;

    /// Profiles agree in every dimension.
    bool agree() const { return robinson == brown; }
    bool passed() const { return agree() && robinson.trivial() && brown.trivial(); }
};

/// Reduced homology of R_p(G)/G against |S_p(G)|/G.
CrossCheckResult cross_check_brown_vs_robinson(const QuotientComplex& robinson,
                                               const QuotientComplex& brown);
CrossCheckResult cross_check_brown_vs_robinson(std::shared_ptr<const PSubgroupTable> table);

} // namespace orbitmorse

#endif
