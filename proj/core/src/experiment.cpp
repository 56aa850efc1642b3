#include "tlab/experiment.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tlab/config_io.hpp"
#include "tlab/graph.hpp"
#include "tlab/version.hpp"

namespace tlab {

using nlohmann::json;

namespace {

json radius_law_to_json(const RadiusLaw& law) {
    json out;
    if (law.kind == RadiusLaw::Kind::Constant) {
        out["kind"] = "constant";
        out["r"] = law.lo;
    } else {
        out["kind"] = "uniform";
        out["lo"] = law.lo;
        out["hi"] = law.hi;
    }
    return out;
}

RadiusLaw radius_law_from_json(const json& in) {
    const std::string kind = in.at("kind").get<std::string>();
    if (kind == "constant") return RadiusLaw::constant(in.at("r").get<double>());
    if (kind == "uniform") {
        return RadiusLaw::uniform(in.at("lo").get<double>(), in.at("hi").get<double>());
    }
    throw UsageError("radius_law.kind must be \"uniform\" or \"constant\"");
}

json generator_params_to_json_obj(const GeneratorParams& params) {
    json out;
    out["dimension"] = params.dimension;
    out["n"] = params.target_count;
    out["seed"] = params.seed;
    out["radius_law"] = radius_law_to_json(params.radius_law);
    out["max_rejections"] = params.max_rejections;
    out["tolerance"] = params.tolerance;
    return out;
}

GeneratorParams generator_params_from_json_obj(const json& in) {
    GeneratorParams params;
    params.dimension = in.at("dimension").get<int>();
    params.target_count = in.at("n").get<int>();
    if (in.contains("seed")) params.seed = in.at("seed").get<std::uint64_t>();
    if (in.contains("seed_base")) params.seed = in.at("seed_base").get<std::uint64_t>();
    params.radius_law = radius_law_from_json(in.at("radius_law"));
    if (in.contains("max_rejections")) params.max_rejections = in.at("max_rejections").get<int>();
    if (in.contains("tolerance")) params.tolerance = in.at("tolerance").get<double>();
    params.validate();
    return params;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string generator_params_to_json(const GeneratorParams& params) {
    return generator_params_to_json_obj(params).dump();
}

GeneratorParams generator_params_from_json(const std::string& text) {
    try {
        return generator_params_from_json_obj(json::parse(text));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed generator params: ") + e.what());
    }
}

ExperimentParams ExperimentParams::from_json(const std::string& text) {
    try {
        const json in = json::parse(text);
        ExperimentParams params;
        params.generator = generator_params_from_json_obj(in);
        if (in.contains("budget")) params.node_budget = in.at("budget").get<std::uint64_t>();
        return params;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed experiment params: ") + e.what());
    }
}

std::string ExperimentParams::to_json() const {
    json out = generator_params_to_json_obj(generator);
    out.erase("seed");
    out["seed_base"] = generator.seed;
    out["budget"] = node_budget;
    return out.dump();
}

InstanceAnalysis analyze_configuration(const Configuration& cfg, std::uint64_t budget) {
    InstanceAnalysis out;
    out.digest = configuration_digest(cfg);
    const TangencyGraph g = build_graph(cfg);
    out.n = g.n;
    out.edges = g.edge_count();
    const EliminationOrder order = decreasing_radius_order(g);
    out.max_back_degree = order.max_back_degree();
    out.greedy_palette = greedy_colour(g, order).palette_size();
    out.dsatur_palette = dsatur(g).palette_size();

    const CliqueResult clique = max_clique(g, budget);
    out.clique_size = clique.size();
    out.clique_budget_exhausted = clique.budget_exhausted;

    const ChromaticResult chromatic = chromatic_number(g, budget, clique);
    out.chi_lower = chromatic.lower;
    out.chi_upper = chromatic.upper;
    out.chi_exact = chromatic.exact;
    out.node_expansions = chromatic.nodes_expanded;
    out.budget_exhausted = chromatic.budget_exhausted;
    return out;
}

std::string ExperimentRecord::to_json() const {
    json out;
    out["record_version"] = record_version;
    out["timestamp"] = timestamp;
    out["seed"] = seed;
    out["params"] = json::parse(generator_params_to_json(params));
    out["wall_ms"] = wall_ms;
    if (error) {
        out["error"] = *error;
        return out.dump();
    }
    out["stalled"] = stalled;
    out["digest"] = analysis.digest;
    out["n"] = analysis.n;
    out["edges"] = analysis.edges;
    out["max_back_degree"] = analysis.max_back_degree;
    out["greedy_palette"] = analysis.greedy_palette;
    out["dsatur_palette"] = analysis.dsatur_palette;
    out["clique_size"] = analysis.clique_size;
    out["clique_budget_exhausted"] = analysis.clique_budget_exhausted;
    out["chi_lower"] = analysis.chi_lower;
    out["chi_upper"] = analysis.chi_upper;
    out["chi_exact"] = analysis.chi_exact;
    out["node_expansions"] = analysis.node_expansions;
    out["budget_exhausted"] = analysis.budget_exhausted;
    return out.dump();
}

ExperimentRecord ExperimentRecord::from_json(const std::string& line) {
    try {
        const json in = json::parse(line);
        ExperimentRecord record;
        record.record_version = in.at("record_version").get<int>();
        record.timestamp = in.at("timestamp").get<std::string>();
        record.seed = in.at("seed").get<std::uint64_t>();
        record.params = generator_params_from_json_obj(in.at("params"));
        record.wall_ms = in.at("wall_ms").get<std::int64_t>();
        if (in.contains("error")) {
            record.error = in.at("error").get<std::string>();
            return record;
        }
        record.stalled = in.at("stalled").get<bool>();
        record.analysis.digest = in.at("digest").get<std::string>();
        record.analysis.n = in.at("n").get<int>();
        record.analysis.edges = in.at("edges").get<std::size_t>();
        record.analysis.max_back_degree = in.at("max_back_degree").get<int>();
        record.analysis.greedy_palette = in.at("greedy_palette").get<int>();
        record.analysis.dsatur_palette = in.at("dsatur_palette").get<int>();
        record.analysis.clique_size = in.at("clique_size").get<int>();
        record.analysis.clique_budget_exhausted = in.at("clique_budget_exhausted").get<bool>();
        record.analysis.chi_lower = in.at("chi_lower").get<int>();
        record.analysis.chi_upper = in.at("chi_upper").get<int>();
        record.analysis.chi_exact = in.at("chi_exact").get<bool>();
        record.analysis.node_expansions = in.at("node_expansions").get<std::uint64_t>();
        record.analysis.budget_exhausted = in.at("budget_exhausted").get<bool>();
        return record;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed experiment record: ") + e.what());
    }
}

bool ExperimentRecord::bound_chain_holds() const {
    if (error) return true;
    return analysis.clique_size <= analysis.chi_lower &&
           analysis.chi_lower <= analysis.chi_upper &&
           analysis.chi_upper <= analysis.dsatur_palette &&
           analysis.dsatur_palette <= analysis.greedy_palette;
}

std::string RunManifest::to_json() const {
    json out;
    out["command_line"] = command_line;
    out["params_digest"] = params_digest;
    out["tool_version"] = tool_version;
    out["records_written"] = records_written;
    return out.dump();
}

RunManifest run_experiment(const ExperimentParams& params, int count, int parallelism,
                           const std::filesystem::path& log_path,
                           const std::string& command_line) {
    if (count < 0) throw UsageError("instance count must be >= 0");
    if (parallelism < 1) throw UsageError("parallelism must be >= 1");
    params.generator.validate();

    std::ofstream log(log_path, std::ios::trunc);
    if (!log) throw UsageError("cannot open log for writing: " + log_path.string());

    std::atomic<int> next{0};
    std::mutex write_mutex;
    std::size_t written = 0;

    auto run_instance = [&](int index) {
        GeneratorParams gp = params.generator;
        gp.seed = params.generator.seed + static_cast<std::uint64_t>(index);

        ExperimentRecord record;
        record.seed = gp.seed;
        record.params = gp;

        const auto start = std::chrono::steady_clock::now();
        try {
            const PackingResult packing = random_tangent_packing(gp);
            record.stalled = packing.stalled;
            record.analysis = analyze_configuration(packing.configuration, params.node_budget);
        } catch (const std::exception& e) {
            record.error = e.what();
        }
        record.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        record.timestamp = iso8601_utc_now();

        const std::string line = record.to_json();
        std::lock_guard<std::mutex> lock(write_mutex);
        log << line << '\n';
        log.flush();
        ++written;
    };

    const int workers = std::max(1, std::min(parallelism, std::max(count, 1)));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int index = next.fetch_add(1);
                if (index >= count) return;
                run_instance(index);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    log.close();

    RunManifest manifest;
    manifest.command_line = command_line;
    manifest.params_digest = "sha256:" + sha256_hex(params.to_json());
    manifest.tool_version = kToolVersion;
    manifest.records_written = written;

    std::ofstream manifest_file(log_path.string() + ".manifest.json", std::ios::trunc);
    if (!manifest_file) {
        throw UsageError("cannot write manifest next to " + log_path.string());
    }
    manifest_file << manifest.to_json() << '\n';
    return manifest;
}

std::string ReportSummary::to_json() const {
    json out;
    out["records"] = records;
    out["error_records"] = error_records;
    out["stalled_records"] = stalled_records;
    out["corrupt_lines"] = corrupt_lines;
    out["max_clique_seen"] = max_clique_seen;
    out["max_exact_chromatic_seen"] = max_exact_chromatic_seen;
    out["max_chi_upper_seen"] = max_chi_upper_seen;
    json greedy_hist = json::object();
    for (const auto& [palette, count] : greedy_palette_histogram) {
        greedy_hist[std::to_string(palette)] = count;
    }
    out["greedy_palette_histogram"] = std::move(greedy_hist);
    json dsatur_hist = json::object();
    for (const auto& [palette, count] : dsatur_palette_histogram) {
        dsatur_hist[std::to_string(palette)] = count;
    }
    out["dsatur_palette_histogram"] = std::move(dsatur_hist);
    out["budget_exhaustion_rate"] = budget_exhaustion_rate;
    out["note"] = note;
    return out.dump();
}

Report report_log(std::istream& in) {
    Report report;
    report.summary.note =
        "instance distribution is an unvalidated proxy; palettes probe bounds, not chi(d)";
    std::ostringstream csv;
    csv << "n,edges,clique,chi_lower,chi_upper,greedy,dsatur\n";

    std::string line;
    std::size_t line_number = 0;
    std::size_t exhausted = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        ExperimentRecord record;
        try {
            record = ExperimentRecord::from_json(line);
        } catch (const UsageError&) {
            report.summary.corrupt_lines.push_back(line_number);
            continue;
        }
        ++report.summary.records;
        if (record.error) {
            ++report.summary.error_records;
            continue;
        }
        const InstanceAnalysis& a = record.analysis;
        if (record.stalled) ++report.summary.stalled_records;
        report.summary.max_clique_seen = std::max(report.summary.max_clique_seen, a.clique_size);
        if (a.chi_exact) {
            report.summary.max_exact_chromatic_seen =
                std::max(report.summary.max_exact_chromatic_seen, a.chi_upper);
        }
        report.summary.max_chi_upper_seen =
            std::max(report.summary.max_chi_upper_seen, a.chi_upper);
        ++report.summary.greedy_palette_histogram[a.greedy_palette];
        ++report.summary.dsatur_palette_histogram[a.dsatur_palette];
        if (a.budget_exhausted) ++exhausted;
        csv << a.n << ',' << a.edges << ',' << a.clique_size << ',' << a.chi_lower << ','
            << a.chi_upper << ',' << a.greedy_palette << ',' << a.dsatur_palette << '\n';
    }
    const std::size_t analysed = report.summary.records - report.summary.error_records;
    report.summary.budget_exhaustion_rate =
        analysed == 0 ? 0.0 : static_cast<double>(exhausted) / static_cast<double>(analysed);
    report.csv = csv.str();
    return report;
}

Report report_log_file(const std::filesystem::path& log_path) {
    std::ifstream in(log_path);
    if (!in) throw UsageError("cannot open log: " + log_path.string());
    return report_log(in);
}

} // namespace tlab
