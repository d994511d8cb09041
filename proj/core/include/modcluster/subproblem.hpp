#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modcluster/graph.hpp"
#include "modcluster/partition.hpp"

namespace modcluster {

/// One pairwise coupling J_ab between subset positions a < b.
struct Coupling {
    int a;
    int b;
    double value;
};

/// Ising maximization problem over a vertex subset X with the rest of the
/// partition frozen as boundary conditions:
///
///   objective(sigma) = sum_{a<b} J_ab sigma_a sigma_b + sum_a h_a sigma_a
///
/// with J_ab = 2 B_{X[a] X[b]} and h_a folding the frozen spins through the
/// boundary rows of B (B_ij = A_ij - k_i k_j / 2m). The offset collects the
/// remaining constant terms so that for every assignment sigma over X
///
///   modularity(combined partition) = (objective(sigma) + offset) / 4m
///
/// holds exactly.
struct IsingSubproblem {
    std::vector<int> subset;          ///< X, ordered as selected
    std::vector<Coupling> couplings;  ///< a < b, nonzero values only, lexicographic
    std::vector<double> fields;       ///< h, one per subset position
    double offset = 0.0;
    std::int64_t edge_count_m = 0;

    int size() const { return static_cast<int>(subset.size()); }
};

/// The min(k, n) vertices with the largest flip gains, ordered by descending
/// gain with ties broken toward the smaller vertex index. Negative-gain
/// vertices are taken when needed to fill the subset.
std::vector<int> select_subset(const Graph& g, const Partition& p, int k);

/// Build the subproblem for subset X against frozen partition p. B entries
/// are generated on demand from edges and degrees; cost O(m + n + k^2).
/// Throws EmptySubsetError when X is empty.
IsingSubproblem build_subproblem(const Graph& g, const Partition& p, std::span<const int> subset);

/// Evaluate the subproblem objective for spins over X.
double subproblem_objective(const IsingSubproblem& sp, std::span<const int> spins);

/// New partition equal to p except spins[a] written at subset[a].
Partition apply_solution(const Partition& p, std::span<const int> subset,
                         std::span<const int> spins);

}  // namespace modcluster
