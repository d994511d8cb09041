#include "modcluster/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "coupling_rows.hpp"
#include "modcluster/errors.hpp"

namespace modcluster {

Statevector::Statevector(int num_qubits)
    : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
    amps_[0] = 1.0;
}

Statevector Statevector::uniform_plus(int num_qubits) {
    Statevector sv(num_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(sv.dimension()));
    for (auto& a : sv.amps_) a = amp;
    return sv;
}

void Statevector::apply_cost_phase(std::span<const double> cost, double gamma) {
    if (cost.size() != amps_.size()) {
        throw DimensionMismatchError("cost table has " + std::to_string(cost.size()) +
                                     " entries for dimension " + std::to_string(amps_.size()));
    }
    for (std::size_t z = 0; z < amps_.size(); ++z) {
        amps_[z] *= std::polar(1.0, -gamma * cost[z]);
    }
}

void Statevector::apply_mixer(double beta) {
    const double c = std::cos(beta);
    const std::complex<double> minus_i_s(0.0, -std::sin(beta));
    const std::size_t dim = amps_.size();
    for (int q = 0; q < num_qubits_; ++q) {
        const std::size_t stride = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t offset = 0; offset < stride; ++offset) {
                auto& lo = amps_[base + offset];
                auto& hi = amps_[base + offset + stride];
                const auto new_lo = c * lo + minus_i_s * hi;
                const auto new_hi = c * hi + minus_i_s * lo;
                lo = new_lo;
                hi = new_hi;
            }
        }
    }
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

double Statevector::expectation(std::span<const double> cost) const {
    if (cost.size() != amps_.size()) {
        throw DimensionMismatchError("cost table has " + std::to_string(cost.size()) +
                                     " entries for dimension " + std::to_string(amps_.size()));
    }
    double sum = 0.0;
    for (std::size_t z = 0; z < amps_.size(); ++z) sum += std::norm(amps_[z]) * cost[z];
    return sum;
}

std::vector<double> basis_cost_table(const IsingSubproblem& sp) {
    const int k = sp.size();
    const auto width = static_cast<std::size_t>(k);
    const auto matrix = detail::dense_coupling_matrix(sp);

    std::vector<double> table(std::size_t{1} << k);
    std::vector<int> spins(width, +1);
    std::vector<double> fields = detail::local_fields(sp, matrix, spins);
    double value = subproblem_objective(sp, spins);
    table[0] = value;

    // Gray walk fills the table out of order but touches each index once;
    // index bit a corresponds to subset position a (set bit = spin -1).
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t t = 1; t < total; ++t) {
        const auto a = static_cast<std::size_t>(std::countr_zero(t));
        value += -2.0 * static_cast<double>(spins[a]) * fields[a];
        spins[a] = -spins[a];
        const double step = 2.0 * static_cast<double>(spins[a]);
        const double* row = matrix.data() + a * width;
        for (std::size_t b = 0; b < width; ++b) fields[b] += row[b] * step;
        table[t ^ (t >> 1)] = value;
    }
    return table;
}

}  // namespace modcluster
