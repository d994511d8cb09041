#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "coupling_rows.hpp"
#include "modcluster/errors.hpp"
#include "modcluster/rng.hpp"
#include "modcluster/solvers.hpp"
#include "modcluster/statevector.hpp"

namespace modcluster {

namespace {

// Angle vectors are laid out [gamma_1, beta_1, gamma_2, beta_2, ...].

double simplex_diameter(const std::vector<std::vector<double>>& points) {
    double diameter = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double dist_sq = 0.0;
            for (std::size_t d = 0; d < points[i].size(); ++d) {
                const double diff = points[i][d] - points[j][d];
                dist_sq += diff * diff;
            }
            diameter = std::max(diameter, std::sqrt(dist_sq));
        }
    }
    return diameter;
}

// Nelder-Mead maximization with standard coefficients (reflect 1, expand 2,
// contract 0.5, shrink 0.5). Stops when the simplex diameter drops below
// `diameter_tol` or `max_evals` objective evaluations were spent. The caller
// tracks the best point ever evaluated, so this routine only explores.
void nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<double> start, double initial_step, double diameter_tol,
                          int max_evals) {
    const std::size_t dims = start.size();
    int evals_left = max_evals;
    auto spend = [&](const std::vector<double>& x) {
        --evals_left;
        return objective(x);
    };

    std::vector<std::vector<double>> simplex{start};
    for (std::size_t d = 0; d < dims; ++d) {
        auto vertex = start;
        vertex[d] += initial_step;
        simplex.push_back(std::move(vertex));
    }
    std::vector<double> values;
    values.reserve(dims + 1);
    for (const auto& vertex : simplex) {
        if (evals_left <= 0) return;
        values.push_back(spend(vertex));
    }

    std::vector<std::size_t> order(simplex.size());
    while (evals_left > 0 && simplex_diameter(simplex) >= diameter_tol) {
        // best first, worst last
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[order.size() - 2];
        const std::size_t best = order.front();

        std::vector<double> centroid(dims, 0.0);
        for (std::size_t i : order) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < dims; ++d) centroid[d] += simplex[i][d];
        }
        for (auto& c : centroid) c /= static_cast<double>(dims);

        auto blend = [&](double coeff) {
            std::vector<double> point(dims);
            for (std::size_t d = 0; d < dims; ++d) {
                point[d] = centroid[d] + coeff * (centroid[d] - simplex[worst][d]);
            }
            return point;
        };

        auto reflected = blend(1.0);
        const double reflected_value = spend(reflected);
        if (reflected_value > values[best]) {
            if (evals_left <= 0) return;
            auto expanded = blend(2.0);
            const double expanded_value = spend(expanded);
            if (expanded_value > reflected_value) {
                simplex[worst] = std::move(expanded);
                values[worst] = expanded_value;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = reflected_value;
            }
            continue;
        }
        if (reflected_value > values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = reflected_value;
            continue;
        }
        if (evals_left <= 0) return;
        const bool outside = reflected_value > values[worst];
        auto contracted = blend(outside ? 0.5 : -0.5);
        const double contracted_value = spend(contracted);
        if (contracted_value > (outside ? reflected_value : values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = contracted_value;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i : order) {
            if (i == best) continue;
            if (evals_left <= 0) return;
            for (std::size_t d = 0; d < dims; ++d) {
                simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
            }
            values[i] = spend(simplex[i]);
        }
    }
}

}  // namespace

SolverResult solve_qaoa(const IsingSubproblem& sp, const QaoaConfig& cfg, std::uint64_t rng_seed) {
    const int k = sp.size();
    if (k > cfg.max_qubits) {
        throw TooManyQubitsError("subproblem needs " + std::to_string(k) +
                                 " qubits but max_qubits is " + std::to_string(cfg.max_qubits));
    }
    if (cfg.depth < 1) throw Error("qaoa depth must be at least 1");
    if (cfg.samples < 1) throw Error("qaoa samples must be at least 1");
    if (cfg.grid_points_per_angle < 1) throw Error("qaoa grid needs at least 1 point per angle");

    const std::vector<double> cost = basis_cost_table(sp);
    const int depth = cfg.depth;

    auto simulate = [&](const std::vector<double>& angles) {
        Statevector sv = Statevector::uniform_plus(k);
        for (int layer = 0; layer < depth; ++layer) {
            sv.apply_cost_phase(cost, angles[static_cast<std::size_t>(2 * layer)]);
            sv.apply_mixer(angles[static_cast<std::size_t>(2 * layer + 1)]);
        }
        return sv;
    };

    double best_expectation = -std::numeric_limits<double>::infinity();
    std::vector<double> best_angles(static_cast<std::size_t>(2 * depth), 0.0);
    double evaluations = 0.0;
    auto evaluate = [&](const std::vector<double>& angles) {
        const double expectation = simulate(angles).expectation(cost);
        evaluations += 1.0;
        if (expectation > best_expectation) {
            best_expectation = expectation;
            best_angles = angles;
        }
        return expectation;
    };

    // Layerwise grid seeding over gamma in [0, pi), beta in [0, pi/2); later
    // layers sit at zero angles, which leaves them as identities.
    const int grid = cfg.grid_points_per_angle;
    std::vector<double> angles(static_cast<std::size_t>(2 * depth), 0.0);
    for (int layer = 0; layer < depth; ++layer) {
        double layer_best = -std::numeric_limits<double>::infinity();
        double layer_gamma = 0.0;
        double layer_beta = 0.0;
        for (int gi = 0; gi < grid; ++gi) {
            const double gamma = std::numbers::pi * gi / grid;
            for (int bi = 0; bi < grid; ++bi) {
                const double beta = std::numbers::pi / 2.0 * bi / grid;
                angles[static_cast<std::size_t>(2 * layer)] = gamma;
                angles[static_cast<std::size_t>(2 * layer + 1)] = beta;
                const double value = evaluate(angles);
                if (value > layer_best) {
                    layer_best = value;
                    layer_gamma = gamma;
                    layer_beta = beta;
                }
            }
        }
        angles[static_cast<std::size_t>(2 * layer)] = layer_gamma;
        angles[static_cast<std::size_t>(2 * layer + 1)] = layer_beta;
    }

    if (cfg.optimizer == QaoaOptimizer::GridThenNelderMead) {
        nelder_mead_maximize(evaluate, best_angles, std::numbers::pi / 16.0, 1e-4, 200);
    }

    // Sample bitstrings from the best evaluated state.
    const Statevector sv = simulate(best_angles);
    Rng rng(rng_seed);
    std::vector<double> draws(static_cast<std::size_t>(cfg.samples));
    for (auto& d : draws) d = rng.uniform();
    std::sort(draws.begin(), draws.end());

    std::map<std::size_t, int> counts;
    {
        std::size_t z = 0;
        double cumulative = sv.probability(0);
        for (double draw : draws) {
            while (draw >= cumulative && z + 1 < sv.dimension()) {
                ++z;
                cumulative += sv.probability(z);
            }
            ++counts[z];
        }
    }

    // Best sample by exactly re-evaluated objective; ties go to the smallest
    // bit encoding, matching the exact solver's convention.
    std::vector<int> best_spins;
    double best_objective = -std::numeric_limits<double>::infinity();
    std::uint64_t best_code = 0;
    std::size_t best_index = 0;
    for (const auto& [z, count] : counts) {
        std::vector<int> spins(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) {
            spins[static_cast<std::size_t>(a)] = (z >> a) & 1u ? -1 : +1;
        }
        const double objective = subproblem_objective(sp, spins);
        const std::uint64_t code = detail::spin_encoding(spins);
        if (objective > best_objective || (objective == best_objective && code < best_code)) {
            best_objective = objective;
            best_spins = std::move(spins);
            best_code = code;
            best_index = z;
        }
    }

    SolverResult result;
    result.spins = std::move(best_spins);
    result.objective = subproblem_objective(sp, result.spins);
    result.solver_kind = Backend::Qaoa;
    result.diagnostics["expectation"] = best_expectation;
    result.diagnostics["depth"] = static_cast<double>(depth);
    result.diagnostics["samples"] = static_cast<double>(cfg.samples);
    result.diagnostics["evaluations"] = evaluations;
    result.diagnostics["best_sample_probability"] = sv.probability(best_index);
    for (int layer = 0; layer < depth; ++layer) {
        result.diagnostics["gamma_" + std::to_string(layer + 1)] =
            best_angles[static_cast<std::size_t>(2 * layer)];
        result.diagnostics["beta_" + std::to_string(layer + 1)] =
            best_angles[static_cast<std::size_t>(2 * layer + 1)];
    }
    return result;
}

}  // namespace modcluster
