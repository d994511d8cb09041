#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef _WIN32
#error "the CLI tests drive the binary through a POSIX shell"
#endif
#include <sys/wait.h>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / "modcluster_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    const auto dir = scratch_dir();
    const auto out_path = dir / "stdout.txt";
    const auto err_path = dir / "stderr.txt";
    const std::string command = std::string(MODCLUSTER_CLI_PATH) + " " + args + " > " +
                                out_path.string() + " 2> " + err_path.string();
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

fs::path write_barbell() {
    const auto path = scratch_dir() / "barbell.txt";
    std::ofstream out(path);
    out << "% two triangles and a bridge\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n";
    return path;
}

json scrub_wall_times(const std::string& rendered) {
    auto doc = json::parse(rendered);
    auto scrub = [](json& summary) {
        for (auto& outcome : summary.at("per_seed")) outcome["wall_time_seconds"] = 0.0;
    };
    if (doc.contains("backends")) {
        for (auto& [name, summary] : doc.at("backends").items()) scrub(summary);
    } else {
        scrub(doc);
    }
    return doc;
}

}  // namespace

TEST_CASE("basic experiment emits the expected json") {
    const auto graph = write_barbell();
    const auto result =
        run_cli("--graph " + graph.string() + " --backend exact --subproblem-size 6 --seeds 3");
    REQUIRE(result.exit_code == 0);

    const auto doc = json::parse(result.out);
    CHECK(doc.at("backend") == "exact");
    CHECK(doc.at("graph_name") == "barbell");
    REQUIRE(doc.at("per_seed").size() == 3);
    CHECK(doc.at("per_seed")[0].at("seed") == 0);
    CHECK(doc.at("per_seed")[2].at("seed") == 2);
    CHECK(doc.at("modularity_stats").at("median") == doctest::Approx(5.0 / 14.0));
}

TEST_CASE("identical invocations agree modulo wall times") {
    const auto graph = write_barbell();
    const std::string args =
        "--graph " + graph.string() + " --backend anneal --subproblem-size 4 --seeds 3 --sweeps 50";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(scrub_wall_times(first.out) == scrub_wall_times(second.out));
}

TEST_CASE("qaoa beyond the qubit cap fails with a diagnostic") {
    const auto graph = write_barbell();
    // subproblem-size 25 clamps to n=6 on the barbell, so use a tight cap
    const auto result = run_cli("--graph " + graph.string() +
                                " --backend qaoa --subproblem-size 6 --max-qubits 4 --seeds 1");
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("TooManyQubits") != std::string::npos);

    // the default subproblem size exceeds the default 20-qubit cap whenever
    // the graph offers 25 vertices
    const auto karate = run_cli(std::string("--graph ") + MODCLUSTER_DATA_DIR +
                                "/karate.txt --backend qaoa --subproblem-size 25 --seeds 1");
    CHECK(karate.exit_code == 1);
    CHECK(karate.err.find("TooManyQubits") != std::string::npos);
}

TEST_CASE("invalid flags exit with code 2") {
    const auto graph = write_barbell();
    CHECK(run_cli("--graph " + graph.string() + " --backend gurobi").exit_code == 2);
    CHECK(run_cli("--graph " + graph.string() + " --no-such-flag").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // --graph is required
    CHECK(run_cli("--graph " + graph.string() + " --backends exact").exit_code == 2);
    CHECK(run_cli("--graph " + graph.string() + " --backends exact,exact").exit_code == 2);
    CHECK(run_cli("--graph " + graph.string() + " --seed-list 1,zz").exit_code == 2);
}

TEST_CASE("missing graph file exits with code 1") {
    const auto result = run_cli("--graph /nonexistent/g.txt --backend exact --seeds 1");
    CHECK(result.exit_code == 1);
    CHECK(!result.err.empty());
}

TEST_CASE("backend comparison shares the seed list") {
    const auto graph = write_barbell();
    const auto result = run_cli("--graph " + graph.string() +
                                " --backends exact,anneal --subproblem-size 6 --seeds 5 --sweeps 50");
    REQUIRE(result.exit_code == 0);

    const auto doc = json::parse(result.out);
    REQUIRE(doc.at("backends").size() == 2);
    for (const auto& name : {"exact", "anneal"}) {
        const auto& summary = doc.at("backends").at(name);
        REQUIRE(summary.at("per_seed").size() == 5);
        for (int i = 0; i < 5; ++i) CHECK(summary.at("per_seed")[i].at("seed") == i);
    }
}

TEST_CASE("seed-list and output-file flags work together") {
    const auto graph = write_barbell();
    const auto out_file = scratch_dir() / "result.json";
    fs::remove(out_file);
    const auto result = run_cli("--graph " + graph.string() +
                                " --backend exact --subproblem-size 6 --seed-list 7,9 --output " +
                                out_file.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.empty());

    const auto doc = json::parse(slurp(out_file));
    REQUIRE(doc.at("per_seed").size() == 2);
    CHECK(doc.at("per_seed")[0].at("seed") == 7);
    CHECK(doc.at("per_seed")[1].at("seed") == 9);
}

TEST_CASE("csv format emits one row per seed") {
    const auto graph = write_barbell();
    const auto result = run_cli("--graph " + graph.string() +
                                " --backend exact --subproblem-size 6 --seeds 4 --format csv");
    REQUIRE(result.exit_code == 0);
    std::size_t lines = 0;
    for (char c : result.out) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 5);
    CHECK(result.out.rfind("graph_name,backend,seed,", 0) == 0);
}

TEST_CASE("karate club is parsed and clustered end to end") {
    const auto result = run_cli(std::string("--graph ") + MODCLUSTER_DATA_DIR +
                                "/karate.txt --backend exact --subproblem-size 12 --seeds 2");
    REQUIRE(result.exit_code == 0);
    const auto doc = json::parse(result.out);
    CHECK(doc.at("graph_name") == "karate");
    CHECK(doc.at("modularity_stats").at("min") > 0.3);
}
