// Command-line experiment harness: multi-seed community-detection runs per
// graph per backend, with JSON or CSV output.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modcluster/experiment.hpp"
#include "modcluster/graph.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Community detection by modularity-maximizing local search over Ising "
        "subproblems, with interchangeable exact / annealing / QAOA backends."};

    std::string graph_path;
    std::string backend_flag = "exact";
    std::string backends_flag;
    int subproblem_size = 25;
    int seed_count = 30;
    std::string seed_list_flag;
    int max_iters = 500;
    std::optional<int> patience;
    int qaoa_depth = 2;
    int qaoa_samples = 1024;
    int max_qubits = 20;
    int sweeps = 1000;
    int restarts = 10;
    std::string output_path;
    std::string format = "json";

    app.add_option("--graph", graph_path, "Edge-list graph file ('%'/'#' comments)")->required();
    auto* backend_opt =
        app.add_option("--backend", backend_flag, "Solver backend")
            ->check(CLI::IsMember({"exact", "anneal", "qaoa"}))
            ->capture_default_str();
    auto* backends_opt =
        app.add_option("--backends", backends_flag,
                       "Comma-separated backends to compare on the identical seed list");
    backends_opt->excludes(backend_opt);
    app.add_option("--subproblem-size", subproblem_size, "Vertices per solver call")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* seeds_opt = app.add_option("--seeds", seed_count, "Run seeds 0..N-1")
                          ->check(CLI::PositiveNumber)
                          ->capture_default_str();
    auto* seed_list_opt =
        app.add_option("--seed-list", seed_list_flag, "Comma-separated explicit seed list");
    seed_list_opt->excludes(seeds_opt);
    app.add_option("--max-iters", max_iters, "Iteration cap per run")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--patience", patience,
                   "Non-improving iterations before convergence (default: 1 exact, 5 stochastic)")
        ->check(CLI::PositiveNumber);
    app.add_option("--qaoa-depth", qaoa_depth, "QAOA layers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--qaoa-samples", qaoa_samples, "Bitstring samples per QAOA call")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-qubits", max_qubits, "Statevector size cap for the QAOA backend")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--sweeps", sweeps, "Annealing sweeps per restart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--restarts", restarts, "Annealing restarts per call")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", output_path, "Write results here instead of stdout");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Resolve backends and seeds before touching the graph so flag problems
    // still exit with code 2.
    std::vector<modcluster::Backend> backends;
    if (!backends_flag.empty()) {
        for (const auto& name : split_csv(backends_flag)) {
            auto backend = modcluster::parse_backend(name);
            if (!backend) {
                std::cerr << "invalid backend in --backends: \"" << name << "\"\n";
                return 2;
            }
            for (auto seen : backends) {
                if (seen == *backend) {
                    std::cerr << "duplicate backend in --backends: \"" << name << "\"\n";
                    return 2;
                }
            }
            backends.push_back(*backend);
        }
        if (backends.size() < 2) {
            std::cerr << "--backends needs at least two backends\n";
            return 2;
        }
    }

    std::vector<std::uint64_t> seeds;
    if (!seed_list_flag.empty()) {
        for (const auto& token : split_csv(seed_list_flag)) {
            try {
                std::size_t consumed = 0;
                const std::uint64_t seed = std::stoull(token, &consumed);
                if (consumed != token.size()) throw std::invalid_argument(token);
                seeds.push_back(seed);
            } catch (const std::exception&) {
                std::cerr << "invalid seed in --seed-list: \"" << token << "\"\n";
                return 2;
            }
        }
    } else {
        seeds = modcluster::seed_range(seed_count);
    }

    try {
        modcluster::ExperimentOptions opts;
        opts.seeds = std::move(seeds);
        opts.search.subproblem_size = subproblem_size;
        opts.search.max_iters = max_iters;
        opts.search.patience = patience;
        opts.search.qaoa.depth = qaoa_depth;
        opts.search.qaoa.samples = qaoa_samples;
        opts.search.qaoa.max_qubits = max_qubits;
        opts.search.anneal.sweeps = sweeps;
        opts.search.anneal.restarts = restarts;

        const modcluster::Graph graph = modcluster::load_edge_list(graph_path);
        const std::string graph_name = std::filesystem::path(graph_path).stem().string();

        std::string rendered;
        if (!backends.empty()) {
            const auto summaries =
                modcluster::compare_backends(graph, graph_name, opts, backends);
            rendered = format == "json" ? modcluster::to_json(summaries, graph_name)
                                        : modcluster::to_csv(summaries);
        } else {
            opts.search.backend = *modcluster::parse_backend(backend_flag);
            const auto summary = modcluster::run_experiment(graph, graph_name, opts);
            rendered = format == "json" ? modcluster::to_json(summary)
                                        : modcluster::to_csv({&summary, 1});
        }

        if (output_path.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(output_path);
            if (!out) {
                std::cerr << "error: cannot write to " << output_path << "\n";
                return 1;
            }
            out << rendered;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
