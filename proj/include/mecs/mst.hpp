#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "mecs/graph.hpp"

namespace mecs {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // False when already in the same component.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

// Kruskal over the canonical (weight, u, v) scan order, so the returned
// edge-index set is deterministic. Throws on a disconnected input.
std::vector<int> minimum_spanning_tree(const Graph& g);

std::int64_t spanning_tree_weight(const Graph& g, const std::vector<int>& tree_edges);

// Edge indices whose removal disconnects the graph.
std::vector<int> bridges(const Graph& g);

}  // namespace mecs
