#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "modcluster/subproblem.hpp"

namespace modcluster {

/// Dense statevector over k qubits (2^k complex amplitudes). Qubit a maps to
/// bit a of the basis index; bit value 0 means spin +1, bit value 1 means
/// spin -1.
class Statevector {
public:
    /// |0...0>
    explicit Statevector(int num_qubits);

    /// Uniform superposition |+>^k.
    static Statevector uniform_plus(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }

    /// Diagonal cost phase: amp[z] *= exp(-i * gamma * cost[z]).
    void apply_cost_phase(std::span<const double> cost, double gamma);

    /// Transverse-field mixer exp(-i * beta * X) = cos(beta) I - i sin(beta) X
    /// applied to every qubit.
    void apply_mixer(double beta);

    /// L2 norm (1 for any state reached by the unitaries above).
    double norm() const;

    /// sum_z |amp[z]|^2 * cost[z]
    double expectation(std::span<const double> cost) const;

    /// Measurement probability of basis state z.
    double probability(std::size_t z) const { return std::norm(amps_[z]); }

private:
    int num_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Objective value of every basis state, indexed by the bit convention above.
/// Filled by a single Gray-code sweep in O(k * 2^k).
std::vector<double> basis_cost_table(const IsingSubproblem& sp);

}  // namespace modcluster
