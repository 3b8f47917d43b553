#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "orbitmorse/error.hpp"
#include "orbitmorse/homology.hpp"
#include "test_helpers.hpp"

using namespace orbitmorse;
using namespace testing_support;

namespace {

// Fraction-free Gaussian elimination.
Integer bareiss_det(IntegerMatrix A)
{
    const std::size_t n = A.rows();
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k)
    {
        if (A(k, k) == 0)
        {
            std::size_t r = k + 1;
            while (r < n && A(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(A(k, c), A(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntegerMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M(i, j) = d(rng);
    return M;
}

IntegerMatrix identity(std::size_t n)
{
    IntegerMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i)
        I(i, i) = 1;
    return I;
}

// Product of random elementary row operations and swaps.
IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n)
{
    IntegerMatrix U = identity(n);
    if (n < 2)
        return U;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> scale(-3, 3);
    for (int step = 0; step < 12; ++step)
    {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b)
            continue;
        IntegerMatrix E = identity(n);
        if (step % 4 == 3)
        {
            E(a, a) = 0;
            E(b, b) = 0;
            E(a, b) = 1;
            E(b, a) = 1;
        }
        else
        {
            E(a, b) = scale(rng);
        }
        U = E * U;
    }
    return U;
}

std::vector<Integer> ints(std::initializer_list<long long> xs)
{
    return {xs.begin(), xs.end()};
}

bool is_error_kind(ErrorKind k, auto&& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.kind() == k;
    }
    return false;
}

} // namespace

TEST_CASE("smith_normal_form examples")
{
    SECTION("zero matrix")
    {
        auto s = smith_normal_form(IntegerMatrix(3, 4));
        REQUIRE(s.rank == 0);
        REQUIRE(s.invariants.empty());
    }
    SECTION("empty matrix")
    {
        REQUIRE(smith_normal_form(IntegerMatrix(0, 5)).rank == 0);
    }
    SECTION("identity")
    {
        auto s = smith_normal_form(IntegerMatrix{{1, 0}, {0, 1}});
        REQUIRE(s.rank == 2);
        REQUIRE(s.invariants == ints({1, 1}));
    }
    SECTION("coprime diagonal entries combine")
    {
        auto s = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
        REQUIRE(s.invariants == ints({1, 6}));
    }
    SECTION("non-square with torsion")
    {
        auto s = smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
        REQUIRE(s.invariants == ints({2, 6, 12}));
    }
    SECTION("negative entries come out positive")
    {
        auto s = smith_normal_form(IntegerMatrix{{-4}});
        REQUIRE(s.invariants == ints({4}));
    }
}

TEST_CASE("smith_normal_form properties on random matrices")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial)
    {
        const std::size_t n = 1 + trial % 5;
        IntegerMatrix A = random_matrix(rng, n, n, -6, 6);
        auto s = smith_normal_form(A);
        INFO("trial " << trial);

        for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i)
            REQUIRE(s.invariants[i + 1] % s.invariants[i] == 0);
        for (const auto& d : s.invariants)
            REQUIRE(d > 0);

        Integer det = bareiss_det(A);
        if (det != 0)
        {
            Integer prod = 1;
            for (const auto& d : s.invariants)
                prod *= d;
            REQUIRE(s.rank == n);
            REQUIRE(prod == abs(det));
        }
        else
        {
            REQUIRE(s.rank < n);
        }

        // Invariant under left and right unimodular changes of basis.
        IntegerMatrix B = random_unimodular(rng, n) * A * random_unimodular(rng, n);
        auto t = smith_normal_form(B);
        REQUIRE(t.rank == s.rank);
        REQUIRE(t.invariants == s.invariants);
    }
    for (int trial = 0; trial < 30; ++trial)
    {
        IntegerMatrix A = random_matrix(rng, 2 + trial % 4, 3 + trial % 3, -3, 3);
        auto s = smith_normal_form(A);
        auto t = smith_normal_form(random_unimodular(rng, A.rows()) * A *
                                   random_unimodular(rng, A.cols()));
        REQUIRE(t.invariants == s.invariants);
    }
}

TEST_CASE("boundary matrices")
{
    SECTION("the edge of the alternating group on 5 points")
    {
        auto T = make_table("alternating:5", 2);
        auto X = build_quotient(T);
        auto C = boundary_matrices(X.face_table());
        REQUIRE(C.dim_counts == std::vector<std::size_t>{2, 1});
        const IntegerMatrix& d1 = C.boundary(1);
        REQUIRE(d1.rows() == 2);
        REQUIRE(d1.cols() == 1);
        CellId edge = X.cells()[2].cell_id;
        CellId d0 = face(X, edge, 0), d1_face = face(X, edge, 1);
        REQUIRE(X.table().is_sylow(X.cell(d0).rep.top()));
        REQUIRE(d1(d0, 0) == 1);
        REQUIRE(d1(d1_face, 0) == -1);
    }
    SECTION("boundary of boundary vanishes on the suite")
    {
        for (auto [spec, p] : std::vector<std::pair<std::string, std::uint64_t>>{
                 {"symmetric:4", 2}, {"symmetric:5", 2}, {"symmetric:5", 3}, {"sl23", 2},
                 {"dihedral:6", 2}, {"alternating:5", 5}})
        {
            INFO(spec << " p=" << p);
            auto T = make_table(spec, p);
            for (const auto& X : {build_quotient(T), build_brown_quotient(T)})
            {
                auto C = boundary_matrices(X.face_table());
                for (std::size_t n = 1; n + 1 <= C.top_dim(); ++n)
                    REQUIRE((C.boundary(n) * C.boundary(n + 1)).is_zero());
            }
        }
    }
    SECTION("inconsistent faces are rejected")
    {
        // A triangle whose faces do not close up.
        FaceTable F;
        F.dims = {0, 0, 0, 1, 1, 1, 2};
        F.faces = {{}, {}, {}, {1, 0}, {2, 0}, {2, 1}, {3, 3, 4}};
        REQUIRE(is_error_kind(ErrorKind::BoundaryCheckFailed, [&] { boundary_matrices(F); }));

        FaceTable G;
        G.dims = {0, 1};
        G.faces = {{}, {0}};
        REQUIRE(is_error_kind(ErrorKind::BoundaryCheckFailed, [&] { boundary_matrices(G); }));
    }
}

TEST_CASE("homology of small fixtures")
{
    SECTION("a point")
    {
        FaceTable F{{0}, {{}}};
        auto H = reduced_homology(boundary_matrices(F));
        REQUIRE(H.trivial());
    }
    SECTION("an interval")
    {
        FaceTable F{{0, 0, 1}, {{}, {}, {1, 0}}};
        REQUIRE(reduced_homology(boundary_matrices(F)).trivial());
        auto unreduced = homology(boundary_matrices(F), false);
        REQUIRE(unreduced.groups[0].betti == 1);
    }
    SECTION("two points")
    {
        FaceTable F{{0, 0}, {{}, {}}};
        auto H = reduced_homology(boundary_matrices(F));
        REQUIRE(H.groups[0].betti == 1);
    }
    SECTION("a circle made of one vertex and one loop")
    {
        FaceTable F{{0, 1}, {{}, {0, 0}}};
        auto H = reduced_homology(boundary_matrices(F));
        REQUIRE(H.groups.size() == 2);
        REQUIRE(H.groups[0].trivial());
        REQUIRE(H.groups[1].betti == 1);
        REQUIRE(H.groups[1].torsion.empty());
    }
    SECTION("torsion from a degree-two attaching map")
    {
        IntegerChainComplex C;
        C.dim_counts = {1, 1, 1};
        C.boundaries = {IntegerMatrix(), IntegerMatrix{{0}}, IntegerMatrix{{2}}};
        auto H = reduced_homology(C);
        REQUIRE(H.groups[0].trivial());
        REQUIRE(H.groups[1].betti == 0);
        REQUIRE(H.groups[1].torsion == ints({2}));
        REQUIRE(H.groups[2].trivial());
        REQUIRE_FALSE(H.trivial());
    }
}

TEST_CASE("Brown and Robinson quotients agree and are acyclic")
{
    for (auto [spec, p] : std::vector<std::pair<std::string, std::uint64_t>>{
             {"symmetric:3", 2}, {"symmetric:3", 3}, {"symmetric:4", 2}, {"symmetric:4", 3},
             {"alternating:5", 2}, {"alternating:5", 3}, {"alternating:5", 5}, {"quaternion8", 2},
             {"sl23", 2}, {"dihedral:6", 2}})
    {
        INFO(spec << " p=" << p);
        auto r = cross_check_brown_vs_robinson(make_table(spec, p));
        REQUIRE(r.agree());
        REQUIRE(r.robinson.trivial());
        REQUIRE(r.brown.trivial());
        REQUIRE(r.passed());
        REQUIRE(r.robinson.groups.size() == r.brown.groups.size());
    }
}
