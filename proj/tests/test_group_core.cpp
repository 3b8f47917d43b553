#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "orbitmorse/error.hpp"
#include "orbitmorse/p_subgroups.hpp"
#include "test_helpers.hpp"

using namespace orbitmorse;
using namespace testing_support;

TEST_CASE("enumerate_group")
{
    SECTION("empty generating set gives the trivial group")
    {
        PermGroup G = enumerate_group({});
        REQUIRE(G.order() == 1);
        REQUIRE(G.element(0).is_identity());
    }
    SECTION("a 3-cycle generates a group of order 3")
    {
        PermGroup G = enumerate_group({perm(3, "(1 2 3)")});
        REQUIRE(G.order() == 3);
    }
    SECTION("a 4-cycle and a transposition generate the symmetric group")
    {
        PermGroup G = enumerate_group({perm(4, "(1 2 3 4)"), perm(4, "(1 2)")});
        REQUIRE(G.order() == 24);
        // brute-force oracle closure agrees on the element set
        auto ref = oracle::closure({perm(4, "(1 2 3 4)"), perm(4, "(1 2)")}, 4);
        REQUIRE(std::set<Permutation>(G.elements().begin(), G.elements().end()) == ref);
    }
    SECTION("elements are sorted and the group is closed")
    {
        auto G = make_group("symmetric:4");
        REQUIRE(std::is_sorted(G->elements().begin(), G->elements().end()));
        REQUIRE(G->element(PermGroup::identity_id).is_identity());
        for (ElementId a = 0; a < G->order(); ++a)
        {
            REQUIRE(G->mul(a, G->inv(a)) == PermGroup::identity_id);
            for (ElementId b = 0; b < G->order(); ++b)
                REQUIRE(G->element(G->mul(a, b)) == G->element(a) * G->element(b));
        }
        for (const auto& g : G->generators())
            REQUIRE(G->index_of(g).has_value());
    }
    SECTION("errors")
    {
        REQUIRE_THROWS_MATCHES(enumerate_group({perm(3, "(1 2)"), perm(4, "(1 2)")}), Error,
                               Catch::Matchers::Predicate<Error>(
                                   [](const Error& e) { return e.kind() == ErrorKind::DegreeMismatch; }));
        GroupLimits small{.max_order = 100, .warn_order = 50};
        REQUIRE_THROWS_MATCHES(enumerate_group({perm(5, "(1 2 3 4 5)"), perm(5, "(1 2)")}, 1, small),
                               Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.kind() == ErrorKind::SizeLimit;
                               }));
        REQUIRE(enumerate_group({perm(4, "(1 2 3 4)"), perm(4, "(1 2)")}, 1, small).large() == false);
    }
}

TEST_CASE("conjugate_subgroup")
{
    auto G = make_group("symmetric:3");
    Subgroup H = gen(*G, {"(1 2)"});
    REQUIRE(conjugate_subgroup(*G, PermGroup::identity_id, H) == H);
    REQUIRE(conjugate_subgroup(*G, elem(*G, "(1 3)"), H) == gen(*G, {"(2 3)"}));

    Subgroup A3 = gen(*G, {"(1 2 3)"});
    for (ElementId g = 0; g < G->order(); ++g)
    {
        REQUIRE(conjugate_subgroup(*G, g, A3) == A3);
        REQUIRE(conjugate_subgroup(*G, g, H).order() == H.order());
    }
}

TEST_CASE("normalizer")
{
    auto S3 = make_group("symmetric:3");
    REQUIRE(normalizer(*S3, whole_group(*S3)) == whole_group(*S3));
    Subgroup H = gen(*S3, {"(1 2)"});
    REQUIRE(normalizer(*S3, H) == H);

    auto A5 = make_group("alternating:5");
    Subgroup C2 = gen(*A5, {"(1 2)(3 4)"});
    Subgroup N = normalizer(*A5, C2);
    REQUIRE(N.order() == 4);
    REQUIRE(N == gen(*A5, {"(1 2)(3 4)", "(1 3)(2 4)"}));
}

TEST_CASE("chain_normalizer")
{
    auto C4 = make_group("cyclic:4");
    Subgroup whole = whole_group(*C4);
    std::vector<Subgroup> single{whole};
    REQUIRE(chain_normalizer(*C4, single) == whole);

    auto A5 = make_group("alternating:5");
    Subgroup C2 = gen(*A5, {"(1 2)(3 4)"});
    Subgroup V4 = gen(*A5, {"(1 2)(3 4)", "(1 3)(2 4)"});
    std::vector<Subgroup> one{C2};
    REQUIRE(chain_normalizer(*A5, one) == normalizer(*A5, C2));
    REQUIRE(normalizer(*A5, V4).order() == 12);
    std::vector<Subgroup> chain{C2, V4};
    REQUIRE(chain_normalizer(*A5, chain) == V4);

    std::vector<Subgroup> empty;
    REQUIRE_THROWS_AS(chain_normalizer(*A5, empty), Error);
}

TEST_CASE("is_sylow_in")
{
    auto S4 = make_group("symmetric:4");
    Subgroup C2 = gen(*S4, {"(1 2)(3 4)"});
    Subgroup V4 = gen(*S4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    Subgroup A4 = gen(*S4, {"(1 2 3)", "(2 3 4)"});
    REQUIRE(is_sylow_in(V4, V4, 2));
    REQUIRE_FALSE(is_sylow_in(C2, V4, 2));
    REQUIRE(is_sylow_in(V4, A4, 2));
    REQUIRE_THROWS_AS(is_sylow_in(gen(*S4, {"(1 2)"}), A4, 2), Error);
}

TEST_CASE("sylow_extension")
{
    SECTION("unique overgroup in a cyclic 2-group")
    {
        auto C4 = make_group("cyclic:4");
        Subgroup N = whole_group(*C4);
        Subgroup C2 = gen(*C4, {"(1 3)(2 4)"});
        REQUIRE(sylow_extension(*C4, N, C2, 2) == N);
        REQUIRE_THROWS_MATCHES(sylow_extension(*C4, N, N, 2), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.kind() == ErrorKind::AlreadySylow;
                               }));
    }
    SECTION("from the trivial start picks the canonical minimum")
    {
        auto S3 = make_group("symmetric:3");
        Subgroup S = sylow_extension(*S3, whole_group(*S3), trivial_subgroup(*S3), 2);
        REQUIRE(S.order() == 2);
        auto all = all_p_subgroups(*S3, 2);
        REQUIRE(all.size() == 3);
        REQUIRE(S == all.front());
    }
    SECTION("result is a Sylow overgroup reached in at most ν_p(|N|) steps")
    {
        auto S5 = make_group("symmetric:5");
        std::mt19937_64 rng(3);
        for (const Subgroup& P : all_p_subgroups(*S5, 2))
        {
            Subgroup N = normalizer(*S5, P);
            if (is_sylow_in(P, N, 2))
                continue;
            for (std::mt19937_64* r : {static_cast<std::mt19937_64*>(nullptr), &rng})
            {
                Subgroup S = sylow_extension(*S5, N, P, 2, r);
                REQUIRE(P.is_proper_subgroup_of(S));
                REQUIRE(S.is_subset_of(N));
                REQUIRE(is_sylow_in(S, N, 2));
                REQUIRE(is_closed(*S5, S));
                REQUIRE(p_valuation(S.order(), 2) - p_valuation(P.order(), 2) <=
                        p_valuation(N.order(), 2));
            }
        }
    }
    SECTION("deterministic without an rng")
    {
        auto S4 = make_group("symmetric:4");
        Subgroup a = sylow_extension(*S4, whole_group(*S4), trivial_subgroup(*S4), 2);
        Subgroup b = sylow_extension(*S4, whole_group(*S4), trivial_subgroup(*S4), 2);
        REQUIRE(a == b);
        REQUIRE(a.order() == 8);
    }
}

TEST_CASE("all_p_subgroups")
{
    SECTION("prime order cyclic group")
    {
        auto G = make_group("cyclic:5");
        auto subs = all_p_subgroups(*G, 5);
        REQUIRE(subs.size() == 1);
        REQUIRE(subs.front() == whole_group(*G));
    }
    SECTION("symmetric on 3 points, p = 2")
    {
        auto G = make_group("symmetric:3");
        REQUIRE(all_p_subgroups(*G, 2).size() == 3);
        REQUIRE(all_p_subgroups(*G, 5).empty());
        REQUIRE_THROWS_AS(all_p_subgroups(*G, 4), Error);
    }
    SECTION("symmetric on 4 points, p = 2: 9 + 7 + 3")
    {
        auto G = make_group("symmetric:4");
        auto subs = all_p_subgroups(*G, 2);
        std::map<std::size_t, std::size_t> by_order;
        for (const auto& H : subs)
            ++by_order[H.order()];
        REQUIRE(by_order == std::map<std::size_t, std::size_t>{{2, 9}, {4, 7}, {8, 3}});
    }
    SECTION("agrees with the naive closure search")
    {
        for (auto [spec, p] : std::vector<std::pair<std::string, std::uint64_t>>{
                 {"symmetric:4", 2}, {"symmetric:4", 3}, {"dihedral:6", 2}, {"quaternion8", 2},
                 {"sl23", 2}, {"alternating:5", 2}, {"alternating:5", 5}})
        {
            auto G = make_group(spec);
            auto subs = all_p_subgroups(*G, p);
            std::set<oracle::ElementSet> ours;
            for (const auto& H : subs)
            {
                oracle::ElementSet s;
                for (ElementId x : H.members())
                    s.insert(G->element(x));
                ours.insert(s);
            }
            oracle::ElementSet elements(G->elements().begin(), G->elements().end());
            INFO(spec << " p=" << p);
            REQUIRE(ours == oracle::p_subgroups(elements, p));
        }
    }
}

TEST_CASE("p-subgroup invariants across the suite")
{
    for (const std::string spec : {"cyclic:8", "dihedral:4", "dihedral:6", "quaternion8", "symmetric:4",
                                   "symmetric:5", "alternating:4", "alternating:5", "sl23"})
    {
        auto G = make_group(spec);
        for (std::uint64_t p : {2u, 3u, 5u})
        {
            if (G->order() % p != 0)
                continue;
            INFO(spec << " p=" << p);
            auto subs = all_p_subgroups(*G, p);
            REQUIRE(std::is_sorted(subs.begin(), subs.end()));
            std::set<Subgroup> listed(subs.begin(), subs.end());
            REQUIRE(listed.size() == subs.size());
            const unsigned t = p_valuation(G->order(), p);
            std::size_t sylow_count = 0;
            for (const auto& H : subs)
            {
                REQUIRE(is_closed(*G, H));
                REQUIRE(is_p_power(H.order(), p));
                REQUIRE(H.order() > 1);
                Subgroup N = normalizer(*G, H);
                REQUIRE(H.is_subset_of(N));
                for (ElementId g : N.members())
                    REQUIRE(conjugate_subgroup(*G, g, H) == H);
                for (ElementId g = 0; g < G->order(); ++g)
                    REQUIRE(listed.contains(conjugate_subgroup(*G, g, H)));
                if (p_valuation(H.order(), p) == t)
                    ++sylow_count;
            }
            REQUIRE(sylow_count % p == 1 % p);
            REQUIRE(G->order() % sylow_count == 0);
        }
    }
}

TEST_CASE("number theory helpers")
{
    REQUIRE(is_prime(2));
    REQUIRE(is_prime(97));
    REQUIRE_FALSE(is_prime(1));
    REQUIRE_FALSE(is_prime(91));
    REQUIRE(p_valuation(24, 2) == 3);
    REQUIRE(p_valuation(24, 5) == 0);
    REQUIRE(is_p_power(1, 3));
    REQUIRE(is_p_power(27, 3));
    REQUIRE_FALSE(is_p_power(12, 2));
}
