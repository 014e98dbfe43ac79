#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace mecs {

// Undirected weighted edge, normalized so u < v.
struct Edge {
    int u = 0;
    int v = 0;
    std::int64_t weight = 1;
};

inline bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.weight == b.weight;
}

// Simple undirected graph with positive integer weights. Nodes are
// 0..node_count()-1. Edges are stored sorted by (u, v); an edge's position
// in edges() is its stable index, used everywhere an edge subset is passed
// around. Construction validates simplicity and weight positivity.
class Graph {
public:
    struct Arc {
        int to;
        std::int64_t weight;
        int edge;  // index into edges()
    };

    Graph() : n_(0) {}
    Graph(int node_count, std::vector<Edge> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_.at(index); }

    const std::vector<Arc>& arcs(int node) const { return adj_.at(node); }
    int degree(int node) const { return static_cast<int>(adj_.at(node).size()); }

    // -1 when absent; order of u and v does not matter.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    bool unit_weights() const;
    std::int64_t total_weight() const;

    // Edge indices sorted by (weight, u, v): the canonical scan order used
    // by every algorithm in this library, ascending or reversed.
    std::vector<int> edges_by_weight() const;

    // Same node set, edges restricted to the given indices.
    Graph spanning_subgraph(const std::vector<int>& edge_indices) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> adj_;
    std::unordered_map<std::int64_t, int> index_;
};

}  // namespace mecs
