#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modcluster {

/// Simple undirected graph with dense vertex indices. Immutable after
/// construction and safe to share across threads.
///
/// Invariants: no self-loops, no duplicate edges, every endpoint < node_count,
/// degrees consistent with the edge list, and at least one edge.
class Graph {
public:
    /// Validated constructor for programmatic use. Endpoints are canonicalized
    /// to (min, max), self-loops dropped, duplicates collapsed. Throws
    /// IndexOutOfRangeError on endpoints outside [0, node_count) and
    /// NoEdgesError if nothing is left after cleaning.
    static Graph from_edges(int node_count, std::vector<std::pair<int, int>> edges,
                            std::vector<std::string> labels = {});

    int node_count() const { return node_count_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }

    /// Neighbors of v in ascending order.
    std::span<const int> neighbors(int v) const {
        auto begin = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)]);
        auto end = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v) + 1]);
        return {adj_.data() + begin, end - begin};
    }

    /// Original label of each dense index (decimal index strings when the
    /// graph was built programmatically without labels).
    const std::vector<std::string>& labels() const { return labels_; }
    const std::unordered_map<std::string, int>& label_map() const { return label_map_; }

private:
    Graph() = default;

    static Graph assemble(int node_count, std::vector<std::pair<int, int>> edges,
                          std::vector<std::string> labels);

    int node_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> label_map_;
    std::vector<std::int64_t> adj_offsets_;
    std::vector<int> adj_;
};

/// Parse a KONECT-style edge list: lines starting with '%' or '#' are
/// comments, blank lines are skipped, each data line carries at least two
/// whitespace-separated node labels (extra tokens such as weights or
/// timestamps are ignored). Labels are re-indexed densely in first-appearance
/// order; self-loops are dropped (their labels still get an index) and
/// duplicate or reversed-duplicate edges collapse to one. Both '\n' and
/// '\r\n' line endings are accepted.
///
/// Throws MalformedLineError on a data line with a single token and
/// NoEdgesError if no edge survives cleaning.
Graph parse_edge_list(std::istream& text);
Graph parse_edge_list(std::string_view text);

/// Read and parse an edge-list file; throws Error if unreadable.
Graph load_edge_list(const std::string& path);

/// Serialize the cleaned edge list, one "label_u label_v" line per edge;
/// degree-0 vertices are written as self-loops so they survive a round trip.
/// Parsing the result reproduces an isomorphic graph.
std::string to_edge_list(const Graph& g);

}  // namespace modcluster
