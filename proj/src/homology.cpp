#include "orbitmorse/homology.hpp"

#include <algorithm>

#include "orbitmorse/error.hpp"

namespace orbitmorse {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows)
    {
        if (row.size() != cols_)
            throw Error(ErrorKind::IndexOutOfRange, "ragged matrix literal");
        for (long long x : row)
            data_.emplace_back(x);
    }
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::IndexOutOfRange, "matrix shapes do not compose");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntegerChainComplex boundary_matrices(const FaceTable& faces)
{
    IntegerChainComplex C;
    C.dim_counts = faces.dim_counts();
    std::vector<std::size_t> slot(faces.size());
    {
        std::vector<std::size_t> next(C.dim_counts.size(), 0);
        for (std::size_t c = 0; c < faces.size(); ++c)
            slot[c] = next[faces.dims[c]]++;
    }

    C.boundaries.resize(C.dim_counts.size());
    for (std::size_t n = 1; n < C.dim_counts.size(); ++n)
        C.boundaries[n] = IntegerMatrix(C.dim_counts[n - 1], C.dim_counts[n]);
    for (std::size_t c = 0; c < faces.size(); ++c)
    {
        const std::size_t n = faces.dims[c];
        if (n == 0)
            continue;
        if (faces.faces[c].size() != n + 1)
            throw Error(ErrorKind::BoundaryCheckFailed, "cell with wrong number of faces");
        for (std::size_t i = 0; i <= n; ++i)
        {
            CellId f = faces.faces[c][i];
            if (faces.dims[f] + 1 != n)
                throw Error(ErrorKind::BoundaryCheckFailed, "face of the wrong dimension");
            C.boundaries[n](slot[f], slot[c]) += (i % 2 == 0) ? 1 : -1;
        }
    }

    for (std::size_t n = 1; n + 1 < C.dim_counts.size(); ++n)
        if (!(C.boundaries[n] * C.boundaries[n + 1]).is_zero())
            throw Error(ErrorKind::BoundaryCheckFailed,
                        "boundary of boundary is nonzero in dimension " + std::to_string(n + 1));
    return C;
}

SmithForm smith_normal_form(IntegerMatrix M)
{
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    SmithForm out;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(M(a, j), M(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t i = 0; i < m; ++i)
                std::swap(M(i, a), M(i, b));
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t)
    {
        while (true)
        {
            // Pivot on the smallest nonzero magnitude in the trailing block.
            std::size_t pr = m, pc = n;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (M(i, j) != 0 && (pr == m || abs(M(i, j)) < best))
                    {
                        best = abs(M(i, j));
                        pr = i;
                        pc = j;
                    }
            if (pr == m)
                break;
            swap_rows(t, pr);
            swap_cols(t, pc);

            const Integer pivot = M(t, t);
            bool clean = true;
            std::vector<std::size_t> row_support;
            for (std::size_t j = t; j < n; ++j)
                if (M(t, j) != 0)
                    row_support.push_back(j);
            for (std::size_t i = t + 1; i < m; ++i)
            {
                if (M(i, t) == 0)
                    continue;
                Integer q = M(i, t) / pivot;
                for (std::size_t j : row_support)
                    M(i, j) -= q * M(t, j);
                clean = clean && M(i, t) == 0;
            }
            std::vector<std::size_t> col_support;
            for (std::size_t i = t; i < m; ++i)
                if (M(i, t) != 0)
                    col_support.push_back(i);
            for (std::size_t j = t + 1; j < n; ++j)
            {
                if (M(t, j) == 0)
                    continue;
                Integer q = M(t, j) / pivot;
                for (std::size_t i : col_support)
                    M(i, j) -= q * M(i, t);
                clean = clean && M(t, j) == 0;
            }
            if (!clean)
                continue;

            // Row t and column t are clear; enforce pivot | every entry below.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (M(i, j) % pivot != 0)
                    {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            for (std::size_t j = t; j < n; ++j)
                M(t, j) += M(bad, j);
        }
        if (M(t, t) == 0)
            break;
        out.invariants.push_back(abs(M(t, t)));
    }
    out.rank = out.invariants.size();
    return out;
}

bool HomologyProfile::trivial() const
{
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

HomologyProfile homology(const IntegerChainComplex& C, bool reduced)
{
    HomologyProfile profile;
    profile.reduced = reduced;
    const std::size_t dims = C.dim_counts.size();
    std::vector<SmithForm> snf(dims + 1);
    for (std::size_t n = 1; n < dims; ++n)
        snf[n] = smith_normal_form(C.boundary(n));

    for (std::size_t n = 0; n < dims; ++n)
    {
        HomologyGroup H;
        const std::size_t rank_out = n == 0 ? 0 : snf[n].rank;
        const std::size_t rank_in = n + 1 < dims ? snf[n + 1].rank : 0;
        H.betti = C.dim_counts[n] - rank_out - rank_in;
        if (n + 1 < dims)
            for (const Integer& d : snf[n + 1].invariants)
                if (d > 1)
                    H.torsion.push_back(d);
        profile.groups.push_back(std::move(H));
    }
    if (reduced && !profile.groups.empty() && C.dim_counts[0] > 0)
        --profile.groups[0].betti;
    return profile;
}

CrossCheckResult cross_check_brown_vs_robinson(const QuotientComplex& robinson,
                                               const QuotientComplex& brown)
{
    CrossCheckResult result;
    result.robinson = reduced_homology(boundary_matrices(robinson.face_table()));
    result.brown = reduced_homology(boundary_matrices(brown.face_table()));
    // Pad to equal length so profiles compare dimensionwise.
    const std::size_t len = std::max(result.robinson.groups.size(), result.brown.groups.size());
    result.robinson.groups.resize(len);
    result.brown.groups.resize(len);
    return result;
}

CrossCheckResult cross_check_brown_vs_robinson(std::shared_ptr<const PSubgroupTable> table)
{
    return cross_check_brown_vs_robinson(build_quotient(table), build_brown_quotient(table));
}

} // namespace orbitmorse
