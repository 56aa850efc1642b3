#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tlab/apollonian.hpp"
#include "tlab/chromatic.hpp"
#include "tlab/config_io.hpp"
#include "tlab/constructions.hpp"
#include "tlab/experiment.hpp"
#include "tlab/graph.hpp"
#include "tlab/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInvariant = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw tlab::UsageError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& output_path) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload.push_back('\n');
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(output_path, std::ios::trunc);
    if (!out) throw tlab::UsageError("cannot open output file: " + output_path);
    out << payload;
}

std::array<std::int64_t, 4> parse_root_curvatures(const std::string& text) {
    std::array<std::int64_t, 4> root{};
    std::stringstream stream(text);
    std::string item;
    std::size_t index = 0;
    while (std::getline(stream, item, ',')) {
        if (index >= 4) throw tlab::UsageError("root needs exactly four curvatures");
        try {
            root[index++] = std::stoll(item);
        } catch (const std::logic_error&) {
            throw tlab::UsageError("malformed curvature: " + item);
        }
    }
    if (index != 4) throw tlab::UsageError("root needs exactly four curvatures");
    return root;
}

std::string join_command_line(int argc, char** argv) {
    std::ostringstream out;
    for (int i = 0; i < argc; ++i) {
        if (i) out << ' ';
        out << argv[i];
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tangency-lab: non-overlapping ball configurations, tangency graphs, and "
                 "colouring bounds"};
    app.set_version_flag("--version", tlab::kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();

    // global flags
    std::string output_path;
    app.add_option("--output", output_path, "write the primary output to a file instead of stdout");
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for generators");
    std::uint64_t budget = tlab::kDefaultNodeBudget;
    CLI::Option* budget_option =
        app.add_option("--budget", budget, "search budget in node expansions");
    int parallel = 1;
    app.add_option("--parallel", parallel, "worker count for experiment batches");
    double tolerance = 1e-9;
    app.add_option("--tolerance", tolerance, "relative tolerance for approximate contacts");

    const auto resolve_budget = [&]() -> std::uint64_t {
        if (budget_option->count() > 0) return budget;
        if (const char* env = std::getenv("TANGENCY_LAB_BUDGET")) {
            try {
                return std::stoull(env);
            } catch (const std::logic_error&) {
                throw tlab::UsageError("TANGENCY_LAB_BUDGET is not a number");
            }
        }
        return tlab::kDefaultNodeBudget;
    };

    // construct <simplex|kissing> <d>
    auto* construct = app.add_subcommand("construct", "emit a named construction");
    std::string construct_kind;
    int construct_dimension = 0;
    construct->add_option("kind", construct_kind, "simplex | kissing")
        ->required()
        ->check(CLI::IsMember({"simplex", "kissing"}));
    construct->add_option("dimension", construct_dimension, "ambient dimension")->required();
    construct->callback([&] {
        const tlab::Configuration cfg = construct_kind == "simplex"
                                            ? tlab::simplex_clique(construct_dimension)
                                            : tlab::kissing_configuration(construct_dimension);
        write_output(tlab::configuration_to_json(cfg, 2), output_path);
    });

    // generate random | generate gasket
    auto* generate = app.add_subcommand("generate", "generate a test configuration");
    generate->require_subcommand(1);
    generate->fallthrough();

    auto* random = generate->add_subcommand("random", "seeded random tangent packing");
    random->fallthrough();
    int random_dimension = 2;
    int random_count = 1;
    std::string random_law = "uniform:0.5,2.0";
    int random_max_rejections = 10'000;
    random->add_option("--dimension,-d", random_dimension, "ambient dimension")->required();
    random->add_option("--count,-n", random_count, "target ball count")->required();
    random->add_option("--radius-law", random_law, "uniform:lo,hi | constant:r");
    random->add_option("--max-rejections", random_max_rejections,
                       "placement attempts per ball before giving up");
    random->callback([&] {
        tlab::GeneratorParams params;
        params.dimension = random_dimension;
        params.target_count = random_count;
        params.seed = seed;
        params.radius_law = tlab::RadiusLaw::parse(random_law);
        params.max_rejections = random_max_rejections;
        params.tolerance = tolerance;
        const tlab::PackingResult result = tlab::random_tangent_packing(params);
        if (result.stalled) {
            std::cerr << "generation stalled: placed " << result.configuration.size() << " of "
                      << params.target_count << " balls\n";
        }
        write_output(tlab::configuration_to_json(result.configuration, 2), output_path);
    });

    auto* gasket = generate->add_subcommand("gasket", "exact-rational Apollonian gasket");
    gasket->fallthrough();
    std::string gasket_root = "-1,2,2,3";
    int gasket_depth = 0;
    gasket->add_option("--root", gasket_root, "four integral curvatures, e.g. -1,2,2,3");
    gasket->add_option("--depth", gasket_depth, "reflection depth (>= 0)")->required();
    gasket->callback([&] {
        const tlab::GasketResult result =
            tlab::apollonian_gasket(parse_root_curvatures(gasket_root), gasket_depth);
        write_output(tlab::configuration_to_json(result.configuration, 2), output_path);
    });

    // colour
    auto* colour = app.add_subcommand("colour", "colour a configuration's tangency graph");
    colour->fallthrough();
    std::string colour_input;
    std::string colour_method = "greedy";
    std::string graph_json_path;
    std::string dimacs_path;
    colour->add_option("--input,-i", colour_input, "configuration JSON file, or - for stdin")
        ->required();
    colour->add_option("--method,-m", colour_method, "greedy | dsatur | exact")
        ->check(CLI::IsMember({"greedy", "dsatur", "exact"}));
    colour->add_option("--graph-json", graph_json_path, "also export the tangency graph as JSON");
    colour->add_option("--dimacs", dimacs_path, "also export the tangency graph in DIMACS-col");
    colour->callback([&] {
        const tlab::Configuration cfg = tlab::configuration_from_json(read_input(colour_input));
        const tlab::TangencyGraph graph = tlab::build_graph(cfg); // throws DomainViolation on overlap
        if (!graph_json_path.empty()) write_output(tlab::graph_to_json(graph), graph_json_path);
        if (!dimacs_path.empty()) write_output(tlab::graph_to_dimacs(graph), dimacs_path);

        if (colour_method == "exact") {
            const tlab::ChromaticResult result = tlab::chromatic_number(graph, resolve_budget());
            write_output(tlab::chromatic_result_to_json(graph, result), output_path);
            std::cerr << "n=" << graph.n << " edges=" << graph.edge_count();
            if (result.exact) {
                std::cerr << " chromatic " << result.upper << " exact\n";
            } else {
                std::cerr << " chromatic in [" << result.lower << "," << result.upper
                          << "] budget-exhausted\n";
            }
            return;
        }
        const tlab::Colouring colouring = colour_method == "greedy"
                                              ? tlab::greedy_colour(cfg)
                                              : tlab::dsatur(graph);
        if (!tlab::verify_colouring(graph, colouring)) {
            throw tlab::InvariantBreach("heuristic produced an improper colouring");
        }
        write_output(tlab::colouring_to_json(graph, colouring), output_path);
        std::cerr << "n=" << graph.n << " edges=" << graph.edge_count()
                  << " palette=" << colouring.palette_size() << " proper=true\n";
    });

    // verify-bounds
    auto* verify = app.add_subcommand("verify-bounds", "print the bound-chain table");
    verify->fallthrough();
    int bounds_min = 1;
    int bounds_max = 1;
    bool bounds_json = false;
    verify->add_option("d_min", bounds_min, "first dimension")->required();
    verify->add_option("d_max", bounds_max, "last dimension")->required();
    verify->add_flag("--json", bounds_json, "emit JSON rows instead of the text table");
    verify->callback([&] {
        const auto rows = tlab::bounds_table(bounds_min, bounds_max);
        write_output(bounds_json ? tlab::bounds_table_json(rows) : tlab::bounds_table_text(rows),
                     output_path);
        for (const tlab::BoundsRow& row : rows) {
            if (tlab::BigInt(row.lower) > row.upper ||
                (row.kappa && *row.kappa > row.kappa_crude)) {
                throw tlab::InvariantBreach("bound-chain row invariant failed");
            }
        }
    });

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a seeded instance batch");
    experiment->fallthrough();
    std::string params_path;
    int instance_count = 0;
    experiment->add_option("--params", params_path, "experiment params JSON file")->required();
    experiment->add_option("--count", instance_count, "number of instances")->required();
    experiment->callback([&] {
        if (output_path.empty()) throw tlab::UsageError("experiment requires --output <log.jsonl>");
        tlab::ExperimentParams params = tlab::ExperimentParams::from_json(read_input(params_path));
        if (budget_option->count() > 0 || std::getenv("TANGENCY_LAB_BUDGET") != nullptr) {
            params.node_budget = resolve_budget();
        }
        const tlab::RunManifest manifest = tlab::run_experiment(
            params, instance_count, parallel, output_path, join_command_line(argc, argv));
        std::cerr << "wrote " << manifest.records_written << " records to " << output_path << '\n';
    });

    // report
    auto* report = app.add_subcommand("report", "aggregate an experiment log");
    report->fallthrough();
    std::string log_path;
    std::string csv_path;
    report->add_option("--log", log_path, "experiment JSONL log")->required();
    report->add_option("--csv", csv_path, "plot-ready CSV path (default: <log>.csv)");
    report->callback([&] {
        const tlab::Report result = tlab::report_log_file(log_path);
        write_output(result.summary.to_json(), output_path);
        write_output(result.csv, csv_path.empty() ? log_path + ".csv" : csv_path);
        if (!result.summary.corrupt_lines.empty()) {
            std::cerr << "corrupt lines:";
            for (std::size_t line : result.summary.corrupt_lines) std::cerr << ' ' << line;
            std::cerr << '\n';
            throw tlab::UsageError("log contained corrupt lines");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const tlab::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tlab::DomainViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const tlab::InvariantBreach& e) {
        std::cerr << "invariant breach: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
