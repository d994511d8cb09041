#pragma once

#include <vector>

namespace modcluster {

/// Bipartition of the vertex set encoded as spins, one per vertex, each
/// exactly -1 or +1.
struct Partition {
    std::vector<int> spins;

    int size() const { return static_cast<int>(spins.size()); }

    bool operator==(const Partition&) const = default;
};

}  // namespace modcluster
