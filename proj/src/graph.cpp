#include "mecs/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace mecs {

namespace {

std::int64_t key_of(int n, int u, int v) {
    return static_cast<std::int64_t>(u) * n + v;
}

}  // namespace

Graph::Graph(int node_count, std::vector<Edge> edges) : n_(node_count) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        "-" + std::to_string(e.v));
        }
        if (e.u == e.v) throw std::invalid_argument("self loop at node " + std::to_string(e.u));
        if (e.weight < 1) {
            throw std::invalid_argument("non-positive weight on edge " + std::to_string(e.u) +
                                        "-" + std::to_string(e.v));
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw std::invalid_argument("duplicate edge " + std::to_string(edges[i].u) + "-" +
                                        std::to_string(edges[i].v));
        }
    }
    edges_ = std::move(edges);
    adj_.resize(n_);
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[i];
        adj_[e.u].push_back({e.v, e.weight, i});
        adj_[e.v].push_back({e.u, e.weight, i});
        index_[key_of(n_, e.u, e.v)] = i;
    }
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v) return -1;
    const auto it = index_.find(key_of(n_, u, v));
    return it == index_.end() ? -1 : it->second;
}

bool Graph::unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight == 1; });
}

std::int64_t Graph::total_weight() const {
    std::int64_t sum = 0;
    for (const Edge& e : edges_) sum += e.weight;
    return sum;
}

std::vector<int> Graph::edges_by_weight() const {
    std::vector<int> order(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [this](int a, int b) {
        const Edge& ea = edges_[a];
        const Edge& eb = edges_[b];
        return std::tie(ea.weight, ea.u, ea.v) < std::tie(eb.weight, eb.u, eb.v);
    });
    return order;
}

Graph Graph::spanning_subgraph(const std::vector<int>& edge_indices) const {
    std::vector<Edge> kept;
    kept.reserve(edge_indices.size());
    for (int idx : edge_indices) kept.push_back(edges_.at(idx));
    return Graph(n_, std::move(kept));
}

}  // namespace mecs
