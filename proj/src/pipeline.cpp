#include "orbitmorse/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "orbitmorse/error.hpp"

namespace orbitmorse {

std::string_view to_string(Verdict v)
{
    switch (v)
    {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skip: return "SKIP";
    }
    return "FAIL";
}

namespace {

void record(Report& r, const std::string& name, bool ok, const std::vector<std::string>& problems = {})
{
    r.checks.emplace_back(name, ok);
    for (const auto& p : problems)
        r.problems.push_back(name + ": " + p);
}

void run_checks(Report& r, const std::shared_ptr<const PSubgroupTable>& table, const PipelineOptions& options)
{
    QuotientComplex X = build_quotient(table);
    QuotientComplex brown = build_brown_quotient(table);
    r.robinson_cell_counts = X.dim_counts();
    r.brown_cell_counts = brown.dim_counts();

    auto identities = check_simplicial_identities(X.face_table());
    for (const auto& problem : check_simplicial_identities(brown.face_table()))
        identities.push_back("brown: " + problem);
    record(r, "simplicial_identities", identities.empty(), identities);
    record(r, "orbit_soundness", check_orbit_soundness(X, 100, options.seed));

    const bool want_matching = options.checks != CheckSet::Homology;
    const bool want_homology = options.checks == CheckSet::All || options.checks == CheckSet::Homology;
    const bool want_collapse = options.checks == CheckSet::All || options.checks == CheckSet::Collapse;

    if (want_matching)
    {
        assign_morse_classes(X);
        r.morse_class_counts = count_classes(X);
        MorseMatching M = build_matching(X);

        auto problems = validate_matching(X, M);
        auto critical = check_critical_cells(X, M);
        problems.insert(problems.end(), critical.begin(), critical.end());
        const auto& counts = *r.morse_class_counts;
        for (std::size_t n = 0; n < counts.redundant.size(); ++n)
        {
            const std::size_t up = n + 1 < counts.collapsible.size() ? counts.collapsible[n + 1] : 0;
            if (counts.redundant[n] != up)
                problems.push_back("#redundant_" + std::to_string(n) + " != #collapsible_" +
                                   std::to_string(n + 1));
        }
        r.matching_valid = problems.empty();
        record(r, "matching_valid", *r.matching_valid, problems);

        MorseDigraph D = build_digraph(X, M);
        AcyclicityCertificate cert = check_acyclic(D);
        r.digraph_acyclic = cert.acyclic && verify_certificate(D, cert);
        record(r, "digraph_acyclic", *r.digraph_acyclic);

        if (cert.acyclic)
        {
            r.longest_alternating_path = longest_alternating_path(D, M);
            try
            {
                enforce_alternating_bound(*r.longest_alternating_path, r.t);
                r.bound_2t_minus_2_ok = true;
            }
            catch (const Error& e)
            {
                r.bound_2t_minus_2_ok = false;
                r.problems.push_back(e.what());
            }
            record(r, "bound_2t_minus_2", *r.bound_2t_minus_2_ok);
            auto heights = check_height_discipline(X, D);
            record(r, "height_discipline", heights.empty(), heights);
            auto dims = check_dimension_discipline(X, D, M);
            record(r, "dimension_discipline", dims.empty(), dims);
        }

        IndependenceReport indep = representative_independence_test(X, M, options.trials, options.seed);
        record(r, "representative_independence", indep.passed(), indep.details);
        r.representative_independence = std::move(indep);

        if (want_collapse && cert.acyclic)
        {
            try
            {
                CollapseSchedule schedule = collapse_schedule(X, M, cert);
                auto replay = verify_collapse_schedule(X.face_table(), schedule);
                const bool sylow_terminal =
                    X.cell(schedule.terminal_cell).dim() == 0 &&
                    table->is_sylow(X.cell(schedule.terminal_cell).rep.top());
                if (!sylow_terminal)
                    replay.push_back("terminal cell is not the Sylow vertex");
                if (schedule.steps.size() != M.pairs.size())
                    replay.push_back("schedule length differs from the number of pairs");
                r.collapse_steps = schedule.steps.size();
                r.terminal_cell = schedule.terminal_cell;
                record(r, "collapse_schedule", replay.empty(), replay);
            }
            catch (const Error& e)
            {
                record(r, "collapse_schedule", false, {e.what()});
            }
        }
        else if (want_collapse)
        {
            record(r, "collapse_schedule", false, {"digraph has a cycle"});
        }
    }

    if (want_homology)
    {
        r.euler_characteristic = euler_characteristic(X);
        record(r, "euler_characteristic", *r.euler_characteristic == 1);

        CrossCheckResult cross = cross_check_brown_vs_robinson(X, brown);
        long long betti_sum = 0;
        {
            IntegerChainComplex C = boundary_matrices(X.face_table());
            HomologyProfile unreduced = homology(C, false);
            for (std::size_t n = 0; n < unreduced.groups.size(); ++n)
                betti_sum += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(unreduced.groups[n].betti);
        }
        record(r, "euler_equals_betti_sum", betti_sum == *r.euler_characteristic);
        record(r, "robinson_homology_trivial", cross.robinson.trivial());
        record(r, "brown_homology_trivial", cross.brown.trivial());
        record(r, "homology_profiles_agree", cross.agree());
        r.robinson_homology = std::move(cross.robinson);
        r.brown_homology = std::move(cross.brown);
    }
}

} // namespace

Report run_pipeline(std::shared_ptr<const PermGroup> group, std::string description,
                    std::uint64_t p, const PipelineOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");

    Report r;
    r.group = std::move(description);
    r.order = group->order();
    r.p = p;
    r.t = p_valuation(group->order(), p);

    if (group->order() % p != 0)
    {
        r.verdict = Verdict::Skip;
        r.skip_reason = "p does not divide |G|";
    }
    else
    {
        try
        {
            auto table = std::make_shared<const PSubgroupTable>(group, p);
            run_checks(r, table, options);
        }
        catch (const Error& e)
        {
            record(r, "pipeline", false, {e.what()});
        }
        bool ok = !r.checks.empty();
        for (const auto& [name, passed] : r.checks)
            ok = ok && passed;
        r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    }

    if (options.timing)
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return r;
}

Report run_pipeline(const GroupSpec& spec, std::uint64_t p, const PipelineOptions& options)
{
    auto group = std::make_shared<const PermGroup>(build_group(spec, options.limits));
    return run_pipeline(std::move(group), spec.description, p, options);
}

namespace {

nlohmann::ordered_json profile_json(const HomologyProfile& profile)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& g : profile.groups)
    {
        auto torsion = nlohmann::ordered_json::array();
        for (const auto& d : g.torsion)
            torsion.push_back(d.str());
        out.push_back({{"betti", g.betti}, {"torsion", torsion}});
    }
    return out;
}

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v)
{
    if (!v)
        return nullptr;
    return *v;
}

} // namespace

nlohmann::ordered_json to_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["order"] = r.order;
    j["p"] = r.p;
    j["t"] = r.t;
    j["robinson_cell_counts"] = r.robinson_cell_counts;
    j["brown_cell_counts"] = r.brown_cell_counts;
    if (r.morse_class_counts)
        j["morse_class_counts"] = {{"critical", r.morse_class_counts->critical},
                                   {"redundant", r.morse_class_counts->redundant},
                                   {"collapsible", r.morse_class_counts->collapsible}};
    else
        j["morse_class_counts"] = nullptr;
    j["matching_valid"] = opt(r.matching_valid);
    j["digraph_acyclic"] = opt(r.digraph_acyclic);
    j["longest_alternating_path"] = opt(r.longest_alternating_path);
    j["bound_2t_minus_2_ok"] = opt(r.bound_2t_minus_2_ok);
    j["euler_characteristic"] = opt(r.euler_characteristic);
    if (r.robinson_homology || r.brown_homology)
        j["homology"] = {
            {"robinson", r.robinson_homology ? profile_json(*r.robinson_homology) : nullptr},
            {"brown", r.brown_homology ? profile_json(*r.brown_homology) : nullptr},
            {"reduced", true},
        };
    else
        j["homology"] = nullptr;
    j["collapse_steps"] = opt(r.collapse_steps);
    j["terminal_cell"] = opt(r.terminal_cell);
    if (r.representative_independence)
        j["representative_independence"] = {{"trials", r.representative_independence->trials},
                                            {"failures", r.representative_independence->failures}};
    else
        j["representative_independence"] = nullptr;
    auto checks = nlohmann::ordered_json::object();
    for (const auto& [name, ok] : r.checks)
        checks[name] = ok;
    j["checks"] = checks;
    j["problems"] = r.problems;
    if (r.verdict == Verdict::Skip)
        j["skip_reason"] = r.skip_reason;
    j["elapsed_ms"] = r.elapsed_ms;
    j["verdict"] = std::string(to_string(r.verdict));
    return j;
}

std::string to_text(const Report& r)
{
    std::ostringstream out;
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + std::to_string(v[i]);
        return s + "]";
    };
    out << "group: " << r.group << "  |G| = " << r.order << "  p = " << r.p << "  t = " << r.t << "\n";
    if (r.verdict == Verdict::Skip)
    {
        out << "verdict: SKIP (" << r.skip_reason << ")\n";
        return out.str();
    }
    out << "robinson quotient cells: " << list(r.robinson_cell_counts) << "\n";
    out << "brown quotient cells:    " << list(r.brown_cell_counts) << "\n";
    if (r.morse_class_counts)
    {
        out << "critical:    " << list(r.morse_class_counts->critical) << "\n";
        out << "redundant:   " << list(r.morse_class_counts->redundant) << "\n";
        out << "collapsible: " << list(r.morse_class_counts->collapsible) << "\n";
    }
    if (r.longest_alternating_path)
        out << "longest alternating path: " << *r.longest_alternating_path << " (bound "
            << (r.t == 0 ? 0 : 2 * (r.t - 1)) << ")\n";
    if (r.euler_characteristic)
        out << "euler characteristic: " << *r.euler_characteristic << "\n";
    if (r.collapse_steps)
        out << "collapse steps: " << *r.collapse_steps << ", terminal cell " << *r.terminal_cell << "\n";
    for (const auto& [name, ok] : r.checks)
        out << "  [" << (ok ? "ok" : "FAIL") << "] " << name << "\n";
    for (const auto& p : r.problems)
        out << "  problem: " << p << "\n";
    out << "elapsed: " << r.elapsed_ms << " ms\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    return out.str();
}

nlohmann::ordered_json complex_to_json(const QuotientComplex& X)
{
    nlohmann::ordered_json j;
    j["dims"] = X.dim_counts();
    auto cells = nlohmann::ordered_json::array();
    for (const OrbitCell& c : X.cells())
    {
        auto rep = nlohmann::ordered_json::array();
        for (SubgroupId id : c.rep.subgroup_ids)
            rep.push_back(X.table().subgroup(id).canonical_key());
        auto faces = X.faces(c.cell_id);
        cells.push_back({{"id", c.cell_id},
                         {"dim", c.dim()},
                         {"rep", rep},
                         {"faces", std::vector<CellId>(faces.begin(), faces.end())}});
    }
    j["cells"] = cells;
    return j;
}

} // namespace orbitmorse
