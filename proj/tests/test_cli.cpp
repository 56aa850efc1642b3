#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tlab/config_io.hpp"
#include "tlab/constructions.hpp"

using namespace tlab;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(TLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.stdout_text.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "tlab_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path path = temp_dir() / name;
    std::ofstream out(path, std::ios::trunc);
    out << content;
    return path;
}

} // namespace

TEST_CASE("construct simplex 3 emits a stable 5-ball configuration") {
    const CliResult first = run_cli("construct simplex 3");
    REQUIRE(first.exit_code == 0);
    const Configuration cfg = configuration_from_json(first.stdout_text);
    CHECK(cfg.size() == 5);
    CHECK(cfg.dimension() == 3);

    const CliResult second = run_cli("construct simplex 3");
    CHECK(second.stdout_text == first.stdout_text); // digest-stable across runs
    CHECK(configuration_digest(configuration_from_json(second.stdout_text)) ==
          configuration_digest(cfg));
}

TEST_CASE("construct kissing 8 emits 241 balls") {
    const CliResult result = run_cli("construct kissing 8");
    REQUIRE(result.exit_code == 0);
    CHECK(configuration_from_json(result.stdout_text).size() == 241);
}

TEST_CASE("construct kissing 24 exits 2 with a one-line reason") {
    const CliResult result = run_cli("construct kissing 24");
    CHECK(result.exit_code == 2);
}

TEST_CASE("construct rejects unknown kinds via usage error") {
    CHECK(run_cli("construct torus 3").exit_code == 2);
    CHECK(run_cli("construct simplex").exit_code == 2);
}

TEST_CASE("colour exact reports chromatic d+2 on the simplex clique") {
    const fs::path input =
        write_file("simplex4.json", configuration_to_json(simplex_clique(4), 2));
    const CliResult result = run_cli("colour --input " + input.string() + " --method exact");
    REQUIRE(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.stdout_text);
    CHECK(parsed.at("exact").get<bool>());
    CHECK(parsed.at("lower").get<int>() == 6);
    CHECK(parsed.at("upper").get<int>() == 6);
    CHECK(parsed.at("witness").at("proper").get<bool>());
}

TEST_CASE("colour greedy respects the planar palette bound") {
    const fs::path input =
        write_file("kissing2.json", configuration_to_json(kissing_configuration(2), 2));
    const CliResult result = run_cli("colour --input " + input.string() + " --method greedy");
    REQUIRE(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.stdout_text);
    CHECK(parsed.at("proper").get<bool>());
    CHECK(parsed.at("palette_size").get<int>() <= 7);
}

TEST_CASE("colour exports graph formats on request") {
    const fs::path input =
        write_file("simplex2.json", configuration_to_json(simplex_clique(2), 2));
    const fs::path graph_json = temp_dir() / "graph.json";
    const fs::path dimacs = temp_dir() / "graph.col";
    const CliResult result =
        run_cli("colour --input " + input.string() + " --method dsatur --graph-json " +
                graph_json.string() + " --dimacs " + dimacs.string());
    REQUIRE(result.exit_code == 0);
    std::ifstream graph_in(graph_json);
    std::stringstream graph_text;
    graph_text << graph_in.rdbuf();
    CHECK(nlohmann::json::parse(graph_text.str()).at("n").get<int>() == 4);
    std::ifstream dimacs_in(dimacs);
    std::string first_line;
    std::getline(dimacs_in, first_line);
    CHECK(first_line == "p edge 4 6");
}

TEST_CASE("colour exits 2 on malformed JSON") {
    const fs::path input = write_file("garbage.json", "{nope");
    CHECK(run_cli("colour --input " + input.string()).exit_code == 2);
}

TEST_CASE("colour exits 3 on an overlapping configuration") {
    const Configuration overlapping(
        2,
        {Ball(Point::f64({0, 0}), Scalar::f64(1.0)), Ball(Point::f64({1, 0}), Scalar::f64(1.0))},
        TolerancePolicy::approximate());
    const fs::path input = write_file("overlap.json", configuration_to_json(overlapping, 2));
    CHECK(run_cli("colour --input " + input.string()).exit_code == 3);
}

TEST_CASE("verify-bounds prints the d=3 bracket and exits 0") {
    const CliResult result = run_cli("verify-bounds 1 4 --json");
    REQUIRE(result.exit_code == 0);
    const auto rows = nlohmann::json::parse(result.stdout_text);
    REQUIRE(rows.size() == 4);
    CHECK(rows[2].at("dimension").get<int>() == 3);
    CHECK(rows[2].at("lower").get<int>() == 5);
    CHECK(rows[2].at("upper").get<int>() == 13);
    CHECK(run_cli("verify-bounds 0 4").exit_code == 2);
    CHECK(run_cli("verify-bounds 4 2").exit_code == 2);
}

TEST_CASE("generate gasket emits rational scalars") {
    const CliResult result = run_cli("generate gasket --root -1,2,2,3 --depth 1");
    REQUIRE(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.stdout_text);
    CHECK(parsed.at("scalar").get<std::string>() == "rational");
    CHECK(parsed.at("balls").size() == 7);
    CHECK(parsed.at("balls")[0].at("radius").is_string());
}

TEST_CASE("generate random is deterministic for a fixed seed") {
    const std::string args = "generate random --dimension 2 --count 15 --seed 9";
    const CliResult first = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(run_cli(args).stdout_text == first.stdout_text);
    CHECK(configuration_from_json(first.stdout_text).size() == 15);
}

TEST_CASE("experiment and report run end to end") {
    const fs::path params = write_file("params.json", R"({
        "dimension": 2, "n": 10, "seed_base": 7,
        "radius_law": {"kind": "uniform", "lo": 0.5, "hi": 2.0},
        "budget": 100000})");
    const fs::path log = temp_dir() / "batch.jsonl";
    const CliResult run = run_cli("experiment --params " + params.string() +
                                  " --count 4 --parallel 2 --output " + log.string());
    REQUIRE(run.exit_code == 0);

    std::ifstream log_in(log);
    std::size_t lines = 0;
    std::string line;
    while (std::getline(log_in, line)) {
        if (!line.empty()) ++lines;
    }
    CHECK(lines == 4);
    CHECK(fs::exists(log.string() + ".manifest.json"));

    const fs::path summary = temp_dir() / "summary.json";
    const fs::path csv = temp_dir() / "batch.csv";
    const CliResult report = run_cli("report --log " + log.string() + " --csv " + csv.string() +
                                     " --output " + summary.string());
    REQUIRE(report.exit_code == 0);
    std::ifstream csv_in(csv);
    std::string header;
    std::getline(csv_in, header);
    CHECK(header == "n,edges,clique,chi_lower,chi_upper,greedy,dsatur");

    std::ifstream summary_in(summary);
    std::stringstream summary_text;
    summary_text << summary_in.rdbuf();
    const auto parsed = nlohmann::json::parse(summary_text.str());
    CHECK(parsed.at("records").get<int>() == 4);
}

TEST_CASE("experiment with zero instances writes an empty log and manifest") {
    const fs::path params = write_file("params0.json", R"({
        "dimension": 2, "n": 5, "seed_base": 1,
        "radius_law": {"kind": "constant", "r": 1.0}})");
    const fs::path log = temp_dir() / "empty.jsonl";
    const CliResult run = run_cli("experiment --params " + params.string() +
                                  " --count 0 --output " + log.string());
    REQUIRE(run.exit_code == 0);
    CHECK(fs::file_size(log) == 0);
    std::ifstream manifest(log.string() + ".manifest.json");
    std::stringstream manifest_text;
    manifest_text << manifest.rdbuf();
    CHECK(nlohmann::json::parse(manifest_text.str()).at("records_written").get<int>() == 0);
}

TEST_CASE("report exits 2 on corrupt lines but still processes the rest") {
    const fs::path log = temp_dir() / "corrupt.jsonl";
    {
        const fs::path params = write_file("params_c.json", R"({
            "dimension": 2, "n": 8, "seed_base": 3,
            "radius_law": {"kind": "uniform", "lo": 0.5, "hi": 1.5}})");
        REQUIRE(run_cli("experiment --params " + params.string() + " --count 2 --output " +
                        log.string())
                    .exit_code == 0);
        std::ofstream append(log, std::ios::app);
        append << "{broken\n";
    }
    const fs::path summary = temp_dir() / "corrupt_summary.json";
    const CliResult report =
        run_cli("report --log " + log.string() + " --output " + summary.string());
    CHECK(report.exit_code == 2);
    std::ifstream summary_in(summary);
    std::stringstream summary_text;
    summary_text << summary_in.rdbuf();
    const auto parsed = nlohmann::json::parse(summary_text.str());
    CHECK(parsed.at("records").get<int>() == 2);
    CHECK(parsed.at("corrupt_lines").size() == 1);
}

TEST_CASE("unknown subcommands exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("TANGENCY_LAB_BUDGET caps the exact search") {
    const fs::path input =
        write_file("simplex5.json", configuration_to_json(simplex_clique(5), 2));
    const std::string command = "TANGENCY_LAB_BUDGET=1 " + std::string(TLAB_CLI_PATH) +
                                " colour --input " + input.string() + " --method exact 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) text.append(buffer.data(), got);
    REQUIRE(pclose(pipe) == 0);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.at("budget_exhausted").get<bool>());
    CHECK(parsed.at("node_expansions").get<int>() <= 1);
    CHECK_FALSE(parsed.at("exact").get<bool>());
}

TEST_CASE("colour reads a configuration from stdin") {
    const fs::path input =
        write_file("stdin_cfg.json", configuration_to_json(simplex_clique(2), 2));
    const std::string command = "cat " + input.string() + " | " + std::string(TLAB_CLI_PATH) +
                                " colour --input - --method exact 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) text.append(buffer.data(), got);
    REQUIRE(pclose(pipe) == 0);
    CHECK(nlohmann::json::parse(text).at("upper").get<int>() == 4);
}
