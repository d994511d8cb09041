#include <cmath>
#include <limits>
#include <string>

#include "coupling_rows.hpp"
#include "modcluster/errors.hpp"
#include "modcluster/rng.hpp"
#include "modcluster/solvers.hpp"

namespace modcluster {

SolverResult solve_anneal(const IsingSubproblem& sp, const AnnealConfig& cfg,
                          std::uint64_t rng_seed) {
    if (cfg.sweeps < 1) throw Error("anneal sweeps must be at least 1");
    if (cfg.restarts < 1) throw Error("anneal restarts must be at least 1");

    const int k = sp.size();
    const auto width = static_cast<std::size_t>(k);
    const auto matrix = detail::dense_coupling_matrix(sp);

    double t_initial = cfg.t_initial;
    if (t_initial <= 0.0) {
        // max_a (|h_a| + sum_b |J_ab|) bounds any single-flip objective change
        for (std::size_t a = 0; a < width; ++a) {
            double row_scale = std::abs(sp.fields[a]);
            const double* row = matrix.data() + a * width;
            for (std::size_t b = 0; b < width; ++b) row_scale += std::abs(row[b]);
            t_initial = std::max(t_initial, row_scale);
        }
        if (t_initial <= 0.0) t_initial = 1.0;  // degenerate all-zero instance
    }
    const double t_final = cfg.t_final > 0.0 ? cfg.t_final : 1e-3 * t_initial;
    if (t_final >= t_initial) throw Error("anneal schedule needs t_final < t_initial");
    const double ratio = t_final / t_initial;

    double best_objective = -std::numeric_limits<double>::infinity();
    std::vector<int> best_spins;
    int best_restart = 0;
    double accepted_flips = 0.0;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(rng_seed + static_cast<std::uint64_t>(restart));

        std::vector<int> spins(width);
        for (auto& s : spins) s = rng.spin();
        std::vector<double> fields = detail::local_fields(sp, matrix, spins);
        double objective = subproblem_objective(sp, spins);
        if (objective > best_objective) {
            best_objective = objective;
            best_spins = spins;
            best_restart = restart;
        }

        for (int sweep = 0; sweep < cfg.sweeps; ++sweep) {
            const double exponent =
                cfg.sweeps == 1 ? 0.0
                                : static_cast<double>(sweep) / static_cast<double>(cfg.sweeps - 1);
            const double temperature = t_initial * std::pow(ratio, exponent);

            for (std::size_t a = 0; a < width; ++a) {
                const double delta = -2.0 * static_cast<double>(spins[a]) * fields[a];
                if (delta < 0.0 && rng.uniform() >= std::exp(delta / temperature)) continue;

                objective += delta;
                spins[a] = -spins[a];
                const double step = 2.0 * static_cast<double>(spins[a]);
                const double* row = matrix.data() + a * width;
                for (std::size_t b = 0; b < width; ++b) fields[b] += row[b] * step;
                accepted_flips += 1.0;

                if (objective > best_objective) {
                    best_objective = objective;
                    best_spins = spins;
                    best_restart = restart;
                }
            }
        }
    }

    SolverResult result;
    result.spins = std::move(best_spins);
    result.objective = subproblem_objective(sp, result.spins);
    result.solver_kind = Backend::Anneal;
    result.diagnostics["sweeps"] = static_cast<double>(cfg.sweeps);
    result.diagnostics["restarts"] = static_cast<double>(cfg.restarts);
    result.diagnostics["t_initial"] = t_initial;
    result.diagnostics["t_final"] = t_final;
    result.diagnostics["accepted_flips"] = accepted_flips;
    result.diagnostics["best_restart"] = static_cast<double>(best_restart);
    return result;
}

}  // namespace modcluster
