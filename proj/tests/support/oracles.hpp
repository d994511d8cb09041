#pragma once

// Independent reference implementations used to check the library. Everything
// here is deliberately written the slow, literal way (dense matrices, plain
// enumeration) and shares no code with the fast paths under test.

#include <vector>

#include "modcluster/experiment.hpp"
#include "modcluster/graph.hpp"
#include "modcluster/partition.hpp"
#include "modcluster/subproblem.hpp"

namespace testsupport {

/// Full n x n B matrix, B_ij = A_ij - k_i k_j / 2m.
std::vector<std::vector<double>> dense_b_matrix(const modcluster::Graph& g);

/// Modularity as the literal dense double sum (1/4m) sum_ij B_ij s_i s_j,
/// diagonal included.
double dense_modularity(const modcluster::Graph& g, const modcluster::Partition& p);

struct NaiveBest {
    std::vector<int> spins;
    double objective;
};

/// Maximize the subproblem objective by trying all 2^k assignments in
/// increasing bit-encoding order (position 0 = most significant bit,
/// bit 0 = spin +1) with strict improvement, evaluating each objective from
/// scratch. The winner is the maximizer with the smallest encoding.
NaiveBest naive_best_assignment(const modcluster::IsingSubproblem& sp);

/// Evaluate a subproblem objective by direct summation over couplings and
/// fields (no library call).
double naive_objective(const modcluster::IsingSubproblem& sp, const std::vector<int>& spins);

struct BestBipartition {
    modcluster::Partition partition;
    double modularity;
};

/// Globally best bipartition by enumerating all 2^(n-1) sign classes
/// (spin 0 fixed to +1) against dense_modularity. Usable up to n ~ 20.
BestBipartition best_bipartition(const modcluster::Graph& g);

/// Quartiles recomputed independently (inclusive linear interpolation).
modcluster::FiveNumberSummary recompute_five_numbers(std::vector<double> values);

}  // namespace testsupport
