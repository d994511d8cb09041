#include "modcluster/modularity.hpp"

#include <string>

#include "modcluster/errors.hpp"

namespace modcluster {

namespace {

void check_dimensions(const Graph& g, const Partition& p) {
    if (p.size() != g.node_count()) {
        throw DimensionMismatchError("partition has " + std::to_string(p.size()) +
                                     " spins for a graph with " +
                                     std::to_string(g.node_count()) + " nodes");
    }
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
    check_dimensions(g, p);
    const auto& s = p.spins;
    const double m = static_cast<double>(g.edge_count());

    double edge_sum = 0.0;  // sum over edges of s_u s_v
    for (auto [u, v] : g.edges()) {
        edge_sum += static_cast<double>(s[static_cast<std::size_t>(u)] * s[static_cast<std::size_t>(v)]);
    }
    double degree_sum = 0.0;  // sum_i k_i s_i
    for (int i = 0; i < g.node_count(); ++i) {
        degree_sum += static_cast<double>(g.degree(i)) * s[static_cast<std::size_t>(i)];
    }
    return (2.0 * edge_sum - degree_sum * degree_sum / (2.0 * m)) / (4.0 * m);
}

double vertex_gain(const Graph& g, const Partition& p, int vertex) {
    check_dimensions(g, p);
    if (vertex < 0 || vertex >= g.node_count()) {
        throw IndexOutOfRangeError("vertex " + std::to_string(vertex) + " outside [0, " +
                                   std::to_string(g.node_count()) + ")");
    }
    const auto& s = p.spins;
    const double m = static_cast<double>(g.edge_count());
    const double k_i = static_cast<double>(g.degree(vertex));
    const double s_i = static_cast<double>(s[static_cast<std::size_t>(vertex)]);

    double neighbor_sum = 0.0;
    for (int u : g.neighbors(vertex)) neighbor_sum += static_cast<double>(s[static_cast<std::size_t>(u)]);
    double degree_sum = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        degree_sum += static_cast<double>(g.degree(i)) * s[static_cast<std::size_t>(i)];
    }
    // -(s_i / m) * sum_{j != i} B_ij s_j
    return -(s_i / m) * (neighbor_sum - k_i / (2.0 * m) * (degree_sum - k_i * s_i));
}

std::vector<double> all_gains(const Graph& g, const Partition& p) {
    check_dimensions(g, p);
    const auto& s = p.spins;
    const int n = g.node_count();
    const double m = static_cast<double>(g.edge_count());

    // Per-vertex neighbor spin sums in one edge sweep.
    std::vector<double> neighbor_sum(static_cast<std::size_t>(n), 0.0);
    for (auto [u, v] : g.edges()) {
        neighbor_sum[static_cast<std::size_t>(u)] += static_cast<double>(s[static_cast<std::size_t>(v)]);
        neighbor_sum[static_cast<std::size_t>(v)] += static_cast<double>(s[static_cast<std::size_t>(u)]);
    }
    double degree_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        degree_sum += static_cast<double>(g.degree(i)) * s[static_cast<std::size_t>(i)];
    }

    std::vector<double> gains(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double k_i = static_cast<double>(g.degree(i));
        const double s_i = static_cast<double>(s[static_cast<std::size_t>(i)]);
        gains[static_cast<std::size_t>(i)] =
            -(s_i / m) *
            (neighbor_sum[static_cast<std::size_t>(i)] - k_i / (2.0 * m) * (degree_sum - k_i * s_i));
    }
    return gains;
}

}  // namespace modcluster
