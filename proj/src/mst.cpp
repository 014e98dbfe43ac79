#include "mecs/mst.hpp"

#include <algorithm>
#include <stdexcept>

namespace mecs {

std::vector<int> minimum_spanning_tree(const Graph& g) {
    UnionFind uf(g.node_count());
    std::vector<int> tree;
    for (int idx : g.edges_by_weight()) {
        const Edge& e = g.edge(idx);
        if (uf.unite(e.u, e.v)) tree.push_back(idx);
    }
    if (static_cast<int>(tree.size()) != g.node_count() - 1 && g.node_count() > 0) {
        throw std::invalid_argument("minimum spanning tree of a disconnected graph");
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::int64_t spanning_tree_weight(const Graph& g, const std::vector<int>& tree_edges) {
    std::int64_t sum = 0;
    for (int idx : tree_edges) sum += g.edge(idx).weight;
    return sum;
}

namespace {

struct BridgeDfs {
    const Graph& g;
    std::vector<int> tin, low;
    std::vector<int> out;
    int timer = 0;

    explicit BridgeDfs(const Graph& graph)
        : g(graph), tin(graph.node_count(), -1), low(graph.node_count(), -1) {}

    void run(int u, int parent_edge) {
        tin[u] = low[u] = timer++;
        for (const Graph::Arc& arc : g.arcs(u)) {
            if (arc.edge == parent_edge) continue;
            if (tin[arc.to] >= 0) {
                low[u] = std::min(low[u], tin[arc.to]);
            } else {
                run(arc.to, arc.edge);
                low[u] = std::min(low[u], low[arc.to]);
                if (low[arc.to] > tin[u]) out.push_back(arc.edge);
            }
        }
    }
};

}  // namespace

std::vector<int> bridges(const Graph& g) {
    BridgeDfs dfs(g);
    for (int v = 0; v < g.node_count(); ++v) {
        if (dfs.tin[v] < 0) dfs.run(v, -1);
    }
    std::sort(dfs.out.begin(), dfs.out.end());
    return dfs.out;
}

}  // namespace mecs
