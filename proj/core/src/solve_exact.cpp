#include <bit>
#include <cstdint>
#include <string>

#include "coupling_rows.hpp"
#include "modcluster/errors.hpp"
#include "modcluster/solvers.hpp"

namespace modcluster {

namespace {
constexpr int kMaxExactVariables = 30;
}

SolverResult solve_exact(const IsingSubproblem& sp) {
    const int k = sp.size();
    if (k > kMaxExactVariables) {
        throw TooManyVariablesError("exact enumeration supports at most " +
                                    std::to_string(kMaxExactVariables) + " variables, got " +
                                    std::to_string(k));
    }

    const auto matrix = detail::dense_coupling_matrix(sp);
    const auto width = static_cast<std::size_t>(k);

    std::vector<int> spins(width, +1);
    std::vector<double> fields = detail::local_fields(sp, matrix, spins);
    double objective = subproblem_objective(sp, spins);

    double best_objective = objective;
    std::vector<int> best_spins = spins;
    std::uint64_t best_code = detail::spin_encoding(spins);  // all +1 -> 0

    // Binary-reflected Gray walk: step t flips exactly bit ctz(t), so each
    // assignment costs one O(1) delta plus an O(k) field update.
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t t = 1; t < total; ++t) {
        const auto a = static_cast<std::size_t>(std::countr_zero(t));
        objective += -2.0 * static_cast<double>(spins[a]) * fields[a];
        spins[a] = -spins[a];
        const double step = 2.0 * static_cast<double>(spins[a]);
        const double* row = matrix.data() + a * width;
        for (std::size_t b = 0; b < width; ++b) fields[b] += row[b] * step;

        if (objective > best_objective) {
            best_objective = objective;
            best_spins = spins;
            best_code = detail::spin_encoding(spins);
        } else if (objective == best_objective) {
            const std::uint64_t code = detail::spin_encoding(spins);
            if (code < best_code) {
                best_spins = spins;
                best_code = code;
            }
        }
    }

    SolverResult result;
    result.spins = std::move(best_spins);
    result.objective = subproblem_objective(sp, result.spins);
    result.solver_kind = Backend::Exact;
    result.diagnostics["assignments_enumerated"] = static_cast<double>(total);
    return result;
}

}  // namespace modcluster
