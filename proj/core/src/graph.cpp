#include "modcluster/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "modcluster/errors.hpp"

namespace modcluster {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r'; }

// First two whitespace-separated tokens of a line; returns how many exist
// (0, 1, or 2 -- further tokens are ignored).
int first_two_tokens(std::string_view line, std::string_view& a, std::string_view& b) {
    std::size_t i = 0;
    int found = 0;
    while (i < line.size() && found < 2) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        (found == 0 ? a : b) = line.substr(start, i - start);
        ++found;
    }
    return found;
}

}  // namespace

Graph parse_edge_list(std::istream& text) {
    std::unordered_map<std::string, int> label_map;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;

    auto intern = [&](std::string_view label) {
        auto it = label_map.find(std::string(label));
        if (it != label_map.end()) return it->second;
        int index = static_cast<int>(labels.size());
        labels.emplace_back(label);
        label_map.emplace(labels.back(), index);
        return index;
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(text, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '%' || line[0] == '#') continue;

        std::string_view a, b;
        int tokens = first_two_tokens(line, a, b);
        if (tokens == 0) continue;  // whitespace-only line
        if (tokens == 1) {
            throw MalformedLineError("line " + std::to_string(line_number) +
                                     " has a single token: \"" + line + "\"");
        }
        // Register labels before dropping self-loops so vertices that only
        // ever appear in self-loops survive as degree-0 nodes.
        int u = intern(a);
        int v = intern(b);
        if (u == v) continue;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    if (edges.empty()) throw NoEdgesError("no edges remain after cleaning");
    const int node_count = static_cast<int>(labels.size());
    return Graph::from_edges(node_count, std::move(edges), std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream stream{std::string(text)};
    return parse_edge_list(stream);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

Graph Graph::from_edges(int node_count, std::vector<std::pair<int, int>> edges,
                        std::vector<std::string> labels) {
    if (node_count < 1) throw Error("node_count must be at least 1");
    if (!labels.empty() && static_cast<int>(labels.size()) != node_count) {
        throw Error("label count does not match node_count");
    }
    std::vector<std::pair<int, int>> cleaned;
    cleaned.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
            throw IndexOutOfRangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                       ") outside [0, " + std::to_string(node_count) + ")");
        }
        if (u == v) continue;
        cleaned.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(cleaned.begin(), cleaned.end());
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
    if (cleaned.empty()) throw NoEdgesError("no edges remain after cleaning");

    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(node_count));
        for (int i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    }
    return assemble(node_count, std::move(cleaned), std::move(labels));
}

Graph Graph::assemble(int node_count, std::vector<std::pair<int, int>> edges,
                      std::vector<std::string> labels) {
    Graph g;
    g.node_count_ = node_count;
    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);
    for (int i = 0; i < node_count; ++i) {
        g.label_map_.emplace(g.labels_[static_cast<std::size_t>(i)], i);
    }

    g.degrees_.assign(static_cast<std::size_t>(node_count), 0);
    for (auto [u, v] : g.edges_) {
        ++g.degrees_[static_cast<std::size_t>(u)];
        ++g.degrees_[static_cast<std::size_t>(v)];
    }

    // CSR adjacency, neighbors ascending.
    g.adj_offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++g.adj_offsets_[static_cast<std::size_t>(u) + 1];
        ++g.adj_offsets_[static_cast<std::size_t>(v) + 1];
    }
    std::partial_sum(g.adj_offsets_.begin(), g.adj_offsets_.end(), g.adj_offsets_.begin());
    g.adj_.resize(static_cast<std::size_t>(g.adj_offsets_.back()));
    std::vector<std::int64_t> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
        g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    for (int v = 0; v < node_count; ++v) {
        auto begin = g.adj_.begin() + g.adj_offsets_[static_cast<std::size_t>(v)];
        auto end = g.adj_.begin() + g.adj_offsets_[static_cast<std::size_t>(v) + 1];
        std::sort(begin, end);
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += g.labels()[static_cast<std::size_t>(u)];
        out += ' ';
        out += g.labels()[static_cast<std::size_t>(v)];
        out += '\n';
    }
    // A degree-0 vertex is only representable as a self-loop line: the parser
    // drops the loop but keeps the label.
    for (int v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == 0) {
            out += g.labels()[static_cast<std::size_t>(v)];
            out += ' ';
            out += g.labels()[static_cast<std::size_t>(v)];
            out += '\n';
        }
    }
    return out;
}

}  // namespace modcluster
