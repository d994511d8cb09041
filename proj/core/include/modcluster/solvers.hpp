#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "modcluster/subproblem.hpp"

namespace modcluster {

/// Interchangeable subproblem backends. All three share the signature
/// (subproblem, config, seed) -> SolverResult, which is the extension point
/// for additional backends.
enum class Backend { Exact, Anneal, Qaoa };

std::string_view backend_name(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);

/// Result of one solver call. `objective` is always the re-evaluated
/// subproblem objective of `spins`, never a value the solver merely believes.
struct SolverResult {
    std::vector<int> spins;
    double objective = 0.0;
    Backend solver_kind = Backend::Exact;
    std::map<std::string, double> diagnostics;
};

struct AnnealConfig {
    int sweeps = 1000;
    int restarts = 10;
    /// Geometric temperature schedule endpoints. Non-positive values are
    /// derived per instance: t_initial = max_a(|h_a| + sum_b |J_ab|),
    /// t_final = 1e-3 * t_initial.
    double t_initial = 0.0;
    double t_final = 0.0;
};

enum class QaoaOptimizer { GridThenNelderMead, GridOnly };

struct QaoaConfig {
    int depth = 2;
    int samples = 1024;
    QaoaOptimizer optimizer = QaoaOptimizer::GridThenNelderMead;
    int grid_points_per_angle = 8;
    /// Dense simulation cap; 20 qubits is a 16 MiB statevector. Raise it
    /// explicitly for larger subsets (25 qubits costs 512 MiB).
    int max_qubits = 20;
};

/// Global maximizer by Gray-code enumeration of all 2^k assignments with O(k)
/// incremental updates per step. Among equal maximizers returns the spins
/// whose bit encoding b_a = (1 - sigma_a) / 2, read with position 0 as the
/// most significant bit, is smallest. Throws TooManyVariablesError for k > 30.
SolverResult solve_exact(const IsingSubproblem& sp);

/// Metropolis single-spin-flip annealing: `restarts` independent chains from
/// uniform random spins, geometric temperature schedule over `sweeps` full
/// sweeps, best configuration seen anywhere wins. Restart r draws from
/// sub-seed rng_seed + r. Deterministic given rng_seed.
SolverResult solve_anneal(const IsingSubproblem& sp, const AnnealConfig& cfg,
                          std::uint64_t rng_seed);

/// Depth-p QAOA on a dense statevector: alternating cost-phase and mixer
/// layers from |+>^k, angles optimized per-layer on a grid and then refined
/// with Nelder-Mead (never returning angles worse than the best evaluated
/// point), followed by sampling `samples` bitstrings from the optimized
/// state. Returns the sample with the largest re-evaluated objective.
/// Deterministic given rng_seed. Throws TooManyQubitsError for
/// k > cfg.max_qubits.
SolverResult solve_qaoa(const IsingSubproblem& sp, const QaoaConfig& cfg, std::uint64_t rng_seed);

/// Per-backend settings bundled for the uniform entry point below.
struct SolverConfig {
    AnnealConfig anneal;
    QaoaConfig qaoa;
};

/// Uniform dispatch over the interchangeable backends. New backends slot in
/// here by extending Backend and SolverConfig. The exact backend ignores the
/// seed.
SolverResult solve(const IsingSubproblem& sp, Backend backend, const SolverConfig& config,
                   std::uint64_t rng_seed);

}  // namespace modcluster
