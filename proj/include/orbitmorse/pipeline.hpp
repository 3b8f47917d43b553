#ifndef ORBITMORSE_PIPELINE_HPP
#define ORBITMORSE_PIPELINE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitmorse/group_spec.hpp"
#include "orbitmorse/homology.hpp"
#include "orbitmorse/morse.hpp"

namespace orbitmorse {

enum class CheckSet
{
    All,
    Matching,
    Homology,
    Collapse,
};

struct PipelineOptions
{
    CheckSet checks = CheckSet::All;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    GroupLimits limits;
    /// When false, elapsed_ms is reported as 0 so reports are byte-stable.
    bool timing = true;
};

enum class Verdict
{
    Pass,
    Fail,
    Skip,
};

std::string_view to_string(Verdict v);

struct Report
{
    std::string group;
    std::size_t order = 0;
    std::uint64_t p = 0;
    unsigned t = 0;

    std::vector<std::size_t> robinson_cell_counts;
    std::vector<std::size_t> brown_cell_counts;
    std::optional<MorseClassCounts> morse_class_counts;

    std::optional<bool> matching_valid;
    std::optional<bool> digraph_acyclic;
    std::optional<std::size_t> longest_alternating_path;
    std::optional<bool> bound_2t_minus_2_ok;
    std::optional<long long> euler_characteristic;
    std::optional<HomologyProfile> robinson_homology;
    std::optional<HomologyProfile> brown_homology;
    std::optional<std::size_t> collapse_steps;
    std::optional<CellId> terminal_cell;
    std::optional<IndependenceReport> representative_independence;

    /// Every sub-check that ran, in execution order.
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> problems;
    std::string skip_reason;

    long long elapsed_ms = 0;
    Verdict verdict = Verdict::Fail;
};

/// Runs group enumeration, quotient construction, the Morse checks and the
/// homology checks. p not dividing |G| gives a Skip verdict. Throws NotPrime
/// and the group-construction errors; failures of the checks themselves are
/// recorded in the report.
Report run_pipeline(const GroupSpec& spec, std::uint64_t p, const PipelineOptions& options = {});
Report run_pipeline(std::shared_ptr<const PermGroup> group, std::string description,
                    std::uint64_t p, const PipelineOptions& options = {});

nlohmann::ordered_json to_json(const Report& report);
std::string to_text(const Report& report);

/// {"dims": [...], "cells": [{"id", "dim", "rep", "faces"}...]} where rep
/// lists each chain member as its sorted element indices.
nlohmann::ordered_json complex_to_json(const QuotientComplex& X);

} // namespace orbitmorse

#endif
