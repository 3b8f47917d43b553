#include <algorithm>
#include <random>
#include <unordered_set>

#include <catch2/catch_amalgamated.hpp>

#include "orbitmorse/error.hpp"
#include "orbitmorse/permutation.hpp"

using namespace orbitmorse;

namespace {

Permutation random_permutation(std::size_t degree, std::mt19937_64& rng)
{
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
        images[i] = static_cast<Point>(i);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
}

} // namespace

TEST_CASE("permutation construction rejects non-bijections")
{
    REQUIRE_THROWS_AS(Permutation({0, 0, 1}), Error);
    REQUIRE_THROWS_AS(Permutation({0, 3}), Error);
    REQUIRE_NOTHROW(Permutation({2, 0, 1}));
}

TEST_CASE("composition applies the right factor first")
{
    // a = (0 1), b = (1 2); (a * b)(1) = a(2) = 2
    Permutation a({1, 0, 2});
    Permutation b({0, 2, 1});
    Permutation ab = a * b;
    REQUIRE(ab(0) == 1);
    REQUIRE(ab(1) == 2);
    REQUIRE(ab(2) == 0);
    REQUIRE_THROWS_AS(a * Permutation::identity(4), Error);
}

TEST_CASE("cycles round-trip through the 1-based cycle string")
{
    std::vector<std::vector<Point>> cycles{{0, 1, 2}, {3, 4}};
    Permutation p = Permutation::from_cycles(5, cycles);
    REQUIRE(p.to_cycle_string() == "(1 2 3)(4 5)");
    REQUIRE(Permutation::identity(3).to_cycle_string() == "()");

    std::vector<std::vector<Point>> overlapping{{0, 1}, {1, 2}};
    REQUIRE_THROWS_AS(Permutation::from_cycles(3, overlapping), Error);
    std::vector<std::vector<Point>> out_of_range{{0, 7}};
    REQUIRE_THROWS_AS(Permutation::from_cycles(3, out_of_range), Error);
}

TEST_CASE("group laws hold on random permutations")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial)
    {
        const std::size_t n = 1 + trial % 9;
        Permutation a = random_permutation(n, rng);
        Permutation b = random_permutation(n, rng);
        Permutation c = random_permutation(n, rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE((a.inverse() * a).is_identity());
        REQUIRE((a * a.inverse()).is_identity());
        REQUIRE((a * b).inverse() == b.inverse() * a.inverse());
    }
}

TEST_CASE("ordering is lexicographic on image arrays")
{
    REQUIRE(Permutation::identity(3) < Permutation({0, 2, 1}));
    REQUIRE(Permutation({0, 2, 1}) < Permutation({1, 0, 2}));
    std::unordered_set<Permutation, PermutationHash> set{Permutation({1, 0}), Permutation({1, 0}),
                                                         Permutation({0, 1})};
    REQUIRE(set.size() == 2);
}
