// Command-line front end: verifies that the Morse matching on R_p(G)/G
// collapses it to the Sylow vertex and that its integral homology vanishes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "orbitmorse/error.hpp"
#include "orbitmorse/pipeline.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return static_cast<bool>(out);
}

} // namespace

int main(int argc, char** argv)
{
    using namespace orbitmorse;

    CLI::App app{"Constructive contractibility check for orbit spaces of p-subgroup complexes"};
    std::string group_text;
    std::uint64_t prime = 0;
    std::string check = "all";
    std::string complex_path;
    std::string json_path;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t max_order = 10000;
    bool no_timing = false;

    app.add_option("--group", group_text,
                   "family:<name>[:<n>] (cyclic, dihedral, symmetric, alternating, quaternion8, sl23) "
                   "or perm:<cycles>;<cycles>...")
        ->required();
    app.add_option("--prime", prime, "prime p")->required();
    app.add_option("--check", check, "which checks to run")
        ->check(CLI::IsMember({"all", "matching", "homology", "collapse"}));
    app.add_option("--emit-complex", complex_path, "write the R_p(G)/G cell table as JSON");
    app.add_option("--json", json_path, "write the report as JSON");
    app.add_option("--trials", trials, "representative-independence trials");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--max-order", max_order, "largest group order accepted");
    app.add_flag("--no-timing", no_timing, "report elapsed_ms as 0 for reproducible output");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    PipelineOptions options;
    options.checks = check == "matching"   ? CheckSet::Matching
                     : check == "homology" ? CheckSet::Homology
                     : check == "collapse" ? CheckSet::Collapse
                                           : CheckSet::All;
    options.trials = trials;
    options.seed = seed;
    options.limits.max_order = max_order;
    options.timing = !no_timing;

    std::shared_ptr<const PermGroup> group;
    GroupSpec spec;
    try
    {
        if (!is_prime(prime))
            throw Error(ErrorKind::NotPrime, std::to_string(prime) + " is not prime");
        spec = parse_group_spec(group_text, max_order);
        group = std::make_shared<const PermGroup>(build_group(spec, options.limits));
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (group->large())
        std::cerr << "warning: |G| = " << group->order() << " is above " << options.limits.warn_order
                  << "; enumeration may be slow\n";

    Report report = run_pipeline(group, spec.description, prime, options);
    std::cout << to_text(report);

    if (!json_path.empty() && !write_file(json_path, to_json(report).dump(2) + "\n"))
    {
        std::cerr << "error: cannot write " << json_path << "\n";
        return kExitUsage;
    }
    if (!complex_path.empty() && report.verdict != Verdict::Skip)
    {
        auto table = std::make_shared<const PSubgroupTable>(group, prime);
        if (!write_file(complex_path, complex_to_json(build_quotient(table)).dump(2) + "\n"))
        {
            std::cerr << "error: cannot write " << complex_path << "\n";
            return kExitUsage;
        }
    }
    return report.verdict == Verdict::Fail ? kExitFail : kExitPass;
}
