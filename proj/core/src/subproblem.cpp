#include "modcluster/subproblem.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "modcluster/errors.hpp"
#include "modcluster/modularity.hpp"

namespace modcluster {

std::vector<int> select_subset(const Graph& g, const Partition& p, int k) {
    if (k < 1) throw Error("subset size must be at least 1");
    const std::vector<double> gains = all_gains(g, p);

    std::vector<int> order(static_cast<std::size_t>(g.node_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double ga = gains[static_cast<std::size_t>(a)];
        double gb = gains[static_cast<std::size_t>(b)];
        if (ga != gb) return ga > gb;
        return a < b;
    });

    order.resize(static_cast<std::size_t>(std::min(k, g.node_count())));
    return order;
}

IsingSubproblem build_subproblem(const Graph& g, const Partition& p,
                                 std::span<const int> subset) {
    if (subset.empty()) throw EmptySubsetError("subset must contain at least one vertex");
    if (p.size() != g.node_count()) {
        throw DimensionMismatchError("partition has " + std::to_string(p.size()) +
                                     " spins for a graph with " +
                                     std::to_string(g.node_count()) + " nodes");
    }
    const int n = g.node_count();
    const int k = static_cast<int>(subset.size());
    const double m = static_cast<double>(g.edge_count());
    const auto& s = p.spins;

    // Position of each vertex within the subset, -1 for boundary vertices.
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < k; ++a) {
        int v = subset[static_cast<std::size_t>(a)];
        if (v < 0 || v >= n) {
            throw IndexOutOfRangeError("subset vertex " + std::to_string(v) + " outside [0, " +
                                       std::to_string(n) + ")");
        }
        if (pos[static_cast<std::size_t>(v)] != -1) {
            throw Error("duplicate vertex " + std::to_string(v) + " in subset");
        }
        pos[static_cast<std::size_t>(v)] = a;
    }

    // Frozen-side degree-weighted spin sum: sum_{j not in X} k_j s_j.
    double boundary_degree_sum = 0.0;
    for (int v = 0; v < n; ++v) {
        if (pos[static_cast<std::size_t>(v)] < 0) {
            boundary_degree_sum += static_cast<double>(g.degree(v)) * s[static_cast<std::size_t>(v)];
        }
    }

    IsingSubproblem sp;
    sp.subset.assign(subset.begin(), subset.end());
    sp.edge_count_m = g.edge_count();

    // h_a = sum_{j not in X} 2 B_{X[a], j} s_j
    //     = 2 [ sum_{j in N(X[a]) \ X} s_j - k_a / 2m * boundary_degree_sum ]
    sp.fields.resize(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        int v = subset[static_cast<std::size_t>(a)];
        double outside_neighbor_sum = 0.0;
        for (int u : g.neighbors(v)) {
            if (pos[static_cast<std::size_t>(u)] < 0) {
                outside_neighbor_sum += static_cast<double>(s[static_cast<std::size_t>(u)]);
            }
        }
        sp.fields[static_cast<std::size_t>(a)] =
            2.0 * (outside_neighbor_sum -
                   static_cast<double>(g.degree(v)) / (2.0 * m) * boundary_degree_sum);
    }

    // J_ab = 2 B_{X[a], X[b]} = 2 A_ab - k_a k_b / m, pairs with a < b only.
    std::vector<double> dense(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0);
    for (int a = 0; a < k; ++a) {
        for (int u : g.neighbors(subset[static_cast<std::size_t>(a)])) {
            int b = pos[static_cast<std::size_t>(u)];
            if (b > a) dense[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(b)] += 2.0;
        }
    }
    for (int a = 0; a < k; ++a) {
        const double k_a = static_cast<double>(g.degree(subset[static_cast<std::size_t>(a)]));
        for (int b = a + 1; b < k; ++b) {
            const double k_b = static_cast<double>(g.degree(subset[static_cast<std::size_t>(b)]));
            double value =
                dense[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(b)] -
                k_a * k_b / m;
            if (value != 0.0) sp.couplings.push_back({a, b, value});
        }
    }

    // offset = sum_{i in X} B_ii + sum_{i,j not in X} B_ij s_i s_j. The first
    // part is the folded diagonal, the second the frozen-frozen block.
    double diagonal = 0.0;
    for (int a = 0; a < k; ++a) {
        const double k_a = static_cast<double>(g.degree(subset[static_cast<std::size_t>(a)]));
        diagonal -= k_a * k_a / (2.0 * m);
    }
    double outside_edge_sum = 0.0;
    for (auto [u, v] : g.edges()) {
        if (pos[static_cast<std::size_t>(u)] < 0 && pos[static_cast<std::size_t>(v)] < 0) {
            outside_edge_sum += static_cast<double>(s[static_cast<std::size_t>(u)] * s[static_cast<std::size_t>(v)]);
        }
    }
    sp.offset = diagonal + 2.0 * outside_edge_sum -
                boundary_degree_sum * boundary_degree_sum / (2.0 * m);
    return sp;
}

double subproblem_objective(const IsingSubproblem& sp, std::span<const int> spins) {
    if (static_cast<int>(spins.size()) != sp.size()) {
        throw DimensionMismatchError("got " + std::to_string(spins.size()) + " spins for " +
                                     std::to_string(sp.size()) + " subset vertices");
    }
    double value = 0.0;
    for (const auto& c : sp.couplings) {
        value += c.value * static_cast<double>(spins[static_cast<std::size_t>(c.a)] *
                                               spins[static_cast<std::size_t>(c.b)]);
    }
    for (std::size_t a = 0; a < sp.fields.size(); ++a) {
        value += sp.fields[a] * static_cast<double>(spins[a]);
    }
    return value;
}

Partition apply_solution(const Partition& p, std::span<const int> subset,
                         std::span<const int> spins) {
    if (spins.size() != subset.size()) {
        throw DimensionMismatchError("got " + std::to_string(spins.size()) + " spins for " +
                                     std::to_string(subset.size()) + " subset vertices");
    }
    Partition result = p;
    for (std::size_t a = 0; a < subset.size(); ++a) {
        int v = subset[a];
        if (v < 0 || v >= p.size()) {
            throw IndexOutOfRangeError("subset vertex " + std::to_string(v) + " outside [0, " +
                                       std::to_string(p.size()) + ")");
        }
        result.spins[static_cast<std::size_t>(v)] = spins[a];
    }
    return result;
}

}  // namespace modcluster
