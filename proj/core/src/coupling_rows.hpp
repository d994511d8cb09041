#pragma once

#include <cstddef>
#include <vector>

#include "modcluster/subproblem.hpp"

namespace modcluster::detail {

/// Symmetric dense k x k coupling matrix (zero diagonal), row-major. Sized
/// for subproblems, not whole graphs.
inline std::vector<double> dense_coupling_matrix(const IsingSubproblem& sp) {
    const auto k = static_cast<std::size_t>(sp.size());
    std::vector<double> matrix(k * k, 0.0);
    for (const auto& c : sp.couplings) {
        matrix[static_cast<std::size_t>(c.a) * k + static_cast<std::size_t>(c.b)] = c.value;
        matrix[static_cast<std::size_t>(c.b) * k + static_cast<std::size_t>(c.a)] = c.value;
    }
    return matrix;
}

/// Local fields f_a = h_a + sum_b J_ab s_b for the given spins.
inline std::vector<double> local_fields(const IsingSubproblem& sp,
                                        const std::vector<double>& dense_matrix,
                                        const std::vector<int>& spins) {
    const auto k = static_cast<std::size_t>(sp.size());
    std::vector<double> fields(sp.fields.begin(), sp.fields.end());
    for (std::size_t a = 0; a < k; ++a) {
        const double* row = dense_matrix.data() + a * k;
        double acc = 0.0;
        for (std::size_t b = 0; b < k; ++b) acc += row[b] * static_cast<double>(spins[b]);
        fields[a] += acc;
    }
    return fields;
}

/// Bit encoding used for deterministic tie-breaking: b_a = (1 - sigma_a) / 2
/// with subset position 0 as the most significant bit.
inline std::uint64_t spin_encoding(const std::vector<int>& spins) {
    std::uint64_t code = 0;
    for (int s : spins) code = (code << 1) | (s < 0 ? 1u : 0u);
    return code;
}

}  // namespace modcluster::detail
