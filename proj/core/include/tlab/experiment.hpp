#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlab/chromatic.hpp"
#include "tlab/packing_gen.hpp"

namespace tlab {

std::string generator_params_to_json(const GeneratorParams& params);
GeneratorParams generator_params_from_json(const std::string& text);

/// Contents of an experiment params file:
///   {"dimension": d, "n": target, "seed_base": s,
///    "radius_law": {"kind": "uniform", "lo": .., "hi": ..} |
///                  {"kind": "constant", "r": ..},
///    "max_rejections": m?, "tolerance": t?, "budget": b?}
struct ExperimentParams {
    GeneratorParams generator; // generator.seed is the seed base
    std::uint64_t node_budget = kDefaultNodeBudget;

    static ExperimentParams from_json(const std::string& text);
    std::string to_json() const; // compact canonical
};

/// Full analysis pipeline for one configuration: graph, degeneracy stats,
/// greedy and DSATUR palettes, clique and chromatic bounds.
struct InstanceAnalysis {
    std::string digest;
    int n = 0;
    std::size_t edges = 0;
    int max_back_degree = 0;
    int greedy_palette = 0;
    int dsatur_palette = 0;
    int clique_size = 0;
    bool clique_budget_exhausted = false;
    int chi_lower = 0;
    int chi_upper = 0;
    bool chi_exact = false;
    std::uint64_t node_expansions = 0;
    bool budget_exhausted = false;
};

InstanceAnalysis analyze_configuration(const Configuration& cfg, std::uint64_t budget);

/// One line of the JSONL experiment log. Either an analysis record or, when
/// a per-instance failure occurred, an error record (error set, analysis
/// fields absent).
struct ExperimentRecord {
    int record_version = 1;
    std::string timestamp; // ISO-8601 UTC
    std::uint64_t seed = 0;
    GeneratorParams params;
    std::optional<std::string> error;
    bool stalled = false;
    InstanceAnalysis analysis;
    std::int64_t wall_ms = 0;

    std::string to_json() const;
    static ExperimentRecord from_json(const std::string& line);

    /// clique <= chi_lower <= chi_upper <= dsatur <= greedy
    bool bound_chain_holds() const;
};

struct RunManifest {
    std::string command_line;
    std::string params_digest;
    std::string tool_version;
    std::size_t records_written = 0;

    std::string to_json() const;
};

/// Generates `count` instances with seeds seed_base + i, analyzes each, and
/// appends one record per line to the log. Instances run on a bounded worker
/// pool; appends are serialized, so an interrupted run leaves a valid prefix.
/// Records appear in completion order; the seed field identifies instances.
/// The manifest is written last, next to the log (<log>.manifest.json).
RunManifest run_experiment(const ExperimentParams& params, int count, int parallelism,
                           const std::filesystem::path& log_path,
                           const std::string& command_line);

struct ReportSummary {
    std::size_t records = 0;
    std::size_t error_records = 0;
    std::size_t stalled_records = 0;
    std::vector<std::size_t> corrupt_lines; // 1-based
    int max_clique_seen = 0;
    int max_exact_chromatic_seen = 0;
    int max_chi_upper_seen = 0;
    std::map<int, std::size_t> greedy_palette_histogram;
    std::map<int, std::size_t> dsatur_palette_histogram;
    double budget_exhaustion_rate = 0.0;
    std::string note;

    std::string to_json() const;
};

struct Report {
    ReportSummary summary;
    std::string csv; // columns: n,edges,clique,chi_lower,chi_upper,greedy,dsatur
};

Report report_log(std::istream& in);
Report report_log_file(const std::filesystem::path& log_path);

} // namespace tlab
