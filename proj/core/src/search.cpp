#include "modcluster/search.hpp"

#include <chrono>
#include <utility>

#include "modcluster/errors.hpp"
#include "modcluster/modularity.hpp"
#include "modcluster/rng.hpp"
#include "modcluster/subproblem.hpp"

namespace modcluster {

namespace {
// Strict-improvement acceptance threshold.
constexpr double kAcceptTolerance = 1e-12;
}

Partition initial_guess(const Graph& g, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    Partition p;
    p.spins.resize(static_cast<std::size_t>(g.node_count()));
    for (auto& s : p.spins) s = rng.spin();
    return p;
}

SearchReport run_local_search(const Graph& g, const SearchConfig& cfg) {
    if (cfg.subproblem_size < 1) throw Error("subproblem_size must be at least 1");
    if (cfg.max_iters < 1) throw Error("max_iters must be at least 1");
    const int patience = cfg.resolved_patience();
    if (patience < 1) throw Error("patience must be at least 1");

    const auto start_time = std::chrono::steady_clock::now();

    SearchReport report;
    Partition solution = initial_guess(g, cfg.seed);
    double best = modularity(g, solution);

    int stall = 0;
    for (int iteration = 1; iteration <= cfg.max_iters; ++iteration) {
        const std::vector<int> subset = select_subset(g, solution, cfg.subproblem_size);
        const IsingSubproblem sp = build_subproblem(g, solution, subset);

        // Fresh per-iteration seed so a stochastic backend does not repeat an
        // identical failed attempt.
        const std::uint64_t solver_seed = cfg.seed + static_cast<std::uint64_t>(iteration);
        const SolverResult solved = solve(sp, cfg.backend, {cfg.anneal, cfg.qaoa}, solver_seed);
        ++report.solver_calls;
        report.iterations = iteration;

        Partition candidate = apply_solution(solution, subset, solved.spins);
        const double candidate_modularity = modularity(g, candidate);
        if (candidate_modularity > best + kAcceptTolerance) {
            solution = std::move(candidate);
            best = candidate_modularity;
            ++report.accepted_moves;
            report.modularity_trace.push_back({iteration, candidate_modularity});
            stall = 0;
        } else if (++stall >= patience) {
            break;
        }
    }

    report.best_partition = std::move(solution);
    report.best_modularity = best;
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

}  // namespace modcluster
