#pragma once

#include <vector>

#include "modcluster/graph.hpp"
#include "modcluster/partition.hpp"

namespace modcluster {

/// Modularity of a bipartition,
///
///   H = (1 / 4m) * sum_ij (A_ij - k_i k_j / 2m) s_i s_j,
///
/// evaluated in O(m + n) through the algebraically identical form
///   H = (1 / 4m) * [ 2 * sum_{(u,v) in E} s_u s_v - (sum_i k_i s_i)^2 / 2m ].
/// The unrestricted double sum includes the diagonal, so any constant
/// partition scores exactly 0. Throws DimensionMismatchError when the spin
/// vector length differs from the node count.
double modularity(const Graph& g, const Partition& p);

/// Change in modularity from flipping vertex i, computed in closed form
/// without re-evaluating the whole score. Throws IndexOutOfRangeError.
double vertex_gain(const Graph& g, const Partition& p, int vertex);

/// All n flip gains in O(m + n); element i equals vertex_gain(g, p, i).
std::vector<double> all_gains(const Graph& g, const Partition& p);

}  // namespace modcluster
