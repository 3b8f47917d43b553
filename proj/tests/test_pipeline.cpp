#include <catch2/catch_amalgamated.hpp>

#include "orbitmorse/error.hpp"
#include "orbitmorse/pipeline.hpp"

using namespace orbitmorse;

namespace {

PipelineOptions fixed_options(CheckSet checks = CheckSet::All)
{
    PipelineOptions o;
    o.checks = checks;
    o.timing = false;
    o.seed = 11;
    return o;
}

Report run(std::string_view spec, std::uint64_t p, CheckSet checks = CheckSet::All)
{
    return run_pipeline(parse_group_spec(spec), p, fixed_options(checks));
}

bool ran(const Report& r, std::string_view name)
{
    for (const auto& [n, ok] : r.checks)
        if (n == name)
            return true;
    return false;
}

} // namespace

TEST_CASE("cyclic of prime order is a single vertex")
{
    Report r = run("cyclic:5", 5);
    REQUIRE(r.verdict == Verdict::Pass);
    REQUIRE(r.robinson_cell_counts == std::vector<std::size_t>{1});
    REQUIRE(r.collapse_steps == 0u);
    REQUIRE(r.t == 1);
    REQUIRE(r.longest_alternating_path == 0u);
}

TEST_CASE("symmetric on 4 points at p = 3 has one vertex, the Sylow class")
{
    Report r = run("symmetric:4", 3);
    REQUIRE(r.verdict == Verdict::Pass);
    REQUIRE(r.robinson_cell_counts == std::vector<std::size_t>{1});
    REQUIRE(r.brown_cell_counts == std::vector<std::size_t>{1});
    REQUIRE(r.terminal_cell == 0u);
    REQUIRE(r.collapse_steps == 0u);
}

TEST_CASE("a prime not dividing the order is skipped")
{
    Report r = run("symmetric:3", 5);
    REQUIRE(r.verdict == Verdict::Skip);
    REQUIRE(r.skip_reason == "p does not divide |G|");
    REQUIRE(r.checks.empty());
    REQUIRE(to_json(r)["verdict"] == "SKIP");
}

TEST_CASE("non-prime p throws")
{
    auto spec = parse_group_spec("symmetric:4");
    for (std::uint64_t p : {0u, 1u, 4u, 6u})
    {
        try
        {
            run_pipeline(spec, p, fixed_options());
            FAIL("expected NotPrime");
        }
        catch (const Error& e)
        {
            REQUIRE(e.kind() == ErrorKind::NotPrime);
        }
    }
}

TEST_CASE("symmetric on 4 points at p = 2")
{
    Report r = run("symmetric:4", 2);
    REQUIRE(r.verdict == Verdict::Pass);
    REQUIRE(r.t == 3);
    REQUIRE(r.robinson_cell_counts == std::vector<std::size_t>{6, 8, 3});
    REQUIRE(r.euler_characteristic == 1);
    REQUIRE(r.collapse_steps == 8u);
    REQUIRE(*r.longest_alternating_path <= 4);
    REQUIRE(r.bound_2t_minus_2_ok == true);
    REQUIRE(r.problems.empty());
    for (const auto& [name, ok] : r.checks)
    {
        INFO(name);
        REQUIRE(ok);
    }
}

TEST_CASE("check subsets")
{
    Report m = run("alternating:5", 2, CheckSet::Matching);
    REQUIRE(ran(m, "matching_valid"));
    REQUIRE_FALSE(ran(m, "collapse_schedule"));
    REQUIRE_FALSE(ran(m, "homology_profiles_agree"));
    REQUIRE_FALSE(m.robinson_homology.has_value());
    REQUIRE(m.verdict == Verdict::Pass);

    Report h = run("alternating:5", 2, CheckSet::Homology);
    REQUIRE(ran(h, "homology_profiles_agree"));
    REQUIRE_FALSE(ran(h, "matching_valid"));
    REQUIRE(h.verdict == Verdict::Pass);

    Report c = run("alternating:5", 2, CheckSet::Collapse);
    REQUIRE(ran(c, "collapse_schedule"));
    REQUIRE(c.collapse_steps == 1u);
    REQUIRE(c.verdict == Verdict::Pass);

    Report all = run("alternating:5", 2);
    for (auto name : {"simplicial_identities", "matching_valid", "digraph_acyclic",
                      "bound_2t_minus_2", "representative_independence", "collapse_schedule",
                      "euler_characteristic", "homology_profiles_agree"})
        REQUIRE(ran(all, name));
}

TEST_CASE("JSON reports")
{
    Report r = run("dihedral:6", 2);
    auto j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    REQUIRE(keys == std::vector<std::string>{
                        "group", "order", "p", "t", "robinson_cell_counts", "brown_cell_counts",
                        "morse_class_counts", "matching_valid", "digraph_acyclic",
                        "longest_alternating_path", "bound_2t_minus_2_ok", "euler_characteristic",
                        "homology", "collapse_steps", "terminal_cell",
                        "representative_independence", "checks", "problems", "elapsed_ms",
                        "verdict"});
    REQUIRE(j["order"] == 12);
    REQUIRE(j["t"] == 2);
    REQUIRE(j["verdict"] == "PASS");
    REQUIRE(j["elapsed_ms"] == 0);
    REQUIRE(j["robinson_cell_counts"].is_array());
    REQUIRE(j["homology"]["robinson"].is_array());
    REQUIRE(j["homology"]["robinson"][0]["betti"] == 0);
    REQUIRE(j["morse_class_counts"]["critical"][0] == 1);

    SECTION("byte-identical across runs")
    {
        const std::string a = to_json(run("symmetric:4", 2)).dump(2);
        const std::string b = to_json(run("symmetric:4", 2)).dump(2);
        REQUIRE(a == b);
    }
    SECTION("text mirrors the verdict")
    {
        REQUIRE(to_text(r).find("PASS") != std::string::npos);
    }
}

TEST_CASE("complex dump")
{
    auto G = std::make_shared<const PermGroup>(build_group(parse_group_spec("alternating:5")));
    auto T = std::make_shared<const PSubgroupTable>(G, 2);
    QuotientComplex X = build_quotient(T);
    auto j = complex_to_json(X);
    REQUIRE(j["dims"] == nlohmann::ordered_json::array({2, 1}));
    REQUIRE(j["cells"].size() == 3);
    std::size_t prev_dim = 0;
    for (std::size_t i = 0; i < j["cells"].size(); ++i)
    {
        const auto& cell = j["cells"][i];
        REQUIRE(cell["id"] == i);
        REQUIRE(cell["dim"].get<std::size_t>() >= prev_dim);
        prev_dim = cell["dim"].get<std::size_t>();
        REQUIRE(cell["rep"].size() == prev_dim + 1);
        REQUIRE(cell["faces"].size() == (prev_dim == 0 ? 0 : prev_dim + 1));
        for (const auto& member : cell["rep"])
            REQUIRE(member[0] == 0); // every subgroup contains the identity
    }
}
