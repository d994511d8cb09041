#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modcluster/graph.hpp"
#include "modcluster/partition.hpp"
#include "modcluster/solvers.hpp"

namespace modcluster {

struct SearchConfig {
    Backend backend = Backend::Exact;
    int subproblem_size = 25;
    int max_iters = 500;
    /// Consecutive non-improving iterations before convergence. Unset means
    /// backend-dependent: 1 for the deterministic exact backend (one
    /// non-improving iteration already proves a fixed point), 5 for the
    /// stochastic backends.
    std::optional<int> patience;
    std::uint64_t seed = 0;
    AnnealConfig anneal;
    QaoaConfig qaoa;

    int resolved_patience() const {
        if (patience) return *patience;
        return backend == Backend::Exact ? 1 : 5;
    }
};

struct TracePoint {
    int iteration;
    double modularity;
};

struct SearchReport {
    Partition best_partition;
    double best_modularity = 0.0;
    int iterations = 0;
    int solver_calls = 0;
    int accepted_moves = 0;
    /// (iteration, modularity) at each accepted move; strictly increasing.
    std::vector<TracePoint> modularity_trace;
    double wall_time_seconds = 0.0;
};

/// Uniform random spin assignment, deterministic given rng_seed.
Partition initial_guess(const Graph& g, std::uint64_t rng_seed);

/// Iterated subset selection, subproblem solving and strict-improvement
/// acceptance until `patience` consecutive iterations yield no accepted move
/// or max_iters is reached. Gains are always computed against the current
/// retained solution; the backend seed for iteration i (1-based) is
/// cfg.seed + i so stochastic backends do not repeat a failed attempt.
/// Identical (g, cfg) produce identical reports apart from wall time.
/// Solver errors (e.g. TooManyQubits) propagate.
SearchReport run_local_search(const Graph& g, const SearchConfig& cfg);

}  // namespace modcluster
