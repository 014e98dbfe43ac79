#include "mecs/distances.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace mecs {

EdgeMask full_mask(const Graph& g) {
    return EdgeMask(static_cast<std::size_t>(g.edge_count()), 1);
}

EdgeMask mask_from_indices(const Graph& g, const std::vector<int>& edge_indices) {
    EdgeMask mask(static_cast<std::size_t>(g.edge_count()), 0);
    for (int idx : edge_indices) mask.at(idx) = 1;
    return mask;
}

std::vector<int> indices_from_mask(const EdgeMask& mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

bool edge_present(const EdgeMask& mask, int edge) {
    return mask.empty() || mask[static_cast<std::size_t>(edge)];
}

std::vector<Distance> bfs_from(const Graph& g, const EdgeMask& mask, int source) {
    std::vector<std::int64_t> dist(g.node_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (const Graph::Arc& arc : g.arcs(u)) {
            if (!edge_present(mask, arc.edge) || dist[arc.to] >= 0) continue;
            dist[arc.to] = dist[u] + 1;
            queue.push_back(arc.to);
        }
    }
    std::vector<Distance> out(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) {
        if (dist[i] >= 0) out[i] = Distance::of(dist[i]);
    }
    return out;
}

std::vector<Distance> dijkstra_from(const Graph& g, const EdgeMask& mask, int source) {
    std::vector<std::int64_t> dist(g.node_count(), -1);
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(0, source);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (dist[u] >= 0) continue;
        dist[u] = d;
        for (const Graph::Arc& arc : g.arcs(u)) {
            if (!edge_present(mask, arc.edge) || dist[arc.to] >= 0) continue;
            heap.emplace(d + arc.weight, arc.to);
        }
    }
    std::vector<Distance> out(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) {
        if (dist[i] >= 0) out[i] = Distance::of(dist[i]);
    }
    return out;
}

}  // namespace

std::vector<Distance> shortest_paths_from(const Graph& g, const EdgeMask& mask, int source) {
    if (source < 0 || source >= g.node_count()) {
        throw std::out_of_range("shortest-path source out of range");
    }
    return g.unit_weights() ? bfs_from(g, mask, source) : dijkstra_from(g, mask, source);
}

std::vector<Distance> shortest_paths_from(const Graph& g, int source) {
    return shortest_paths_from(g, EdgeMask{}, source);
}

DistanceMatrix all_pairs_distances(const Graph& g, const EdgeMask& mask) {
    DistanceMatrix m(g.node_count());
    for (int s = 0; s < g.node_count(); ++s) {
        const auto row = shortest_paths_from(g, mask, s);
        for (int t = s; t < g.node_count(); ++t) m.set(s, t, row[t]);
    }
    return m;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    return all_pairs_distances(g, EdgeMask{});
}

bool is_connected(const Graph& g, const EdgeMask& mask) {
    if (g.node_count() <= 1) return true;
    const auto row = shortest_paths_from(g, mask, 0);
    return std::all_of(row.begin(), row.end(), [](Distance d) { return d.is_finite(); });
}

bool is_connected(const Graph& g) { return is_connected(g, EdgeMask{}); }

AplValue apl_from_matrix(const DistanceMatrix& m) {
    const int n = m.size();
    AplValue result;
    result.pair_count = static_cast<std::int64_t>(n) * (n - 1) / 2;
    result.finite = true;
    for (int i = 0; i < n && result.finite; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Distance d = m.at(i, j);
            if (!d.is_finite()) {
                result.finite = false;
                result.distance_sum = 0;
                break;
            }
            result.distance_sum += d.value();
        }
    }
    return result;
}

AplValue apl(const Graph& g, const EdgeMask& mask) {
    if (g.node_count() < 2) throw std::invalid_argument("APL undefined below 2 nodes");
    return apl_from_matrix(all_pairs_distances(g, mask));
}

AplValue apl(const Graph& g) { return apl(g, EdgeMask{}); }

Distance diameter_from_matrix(const DistanceMatrix& m) {
    Distance best = Distance::of(0);
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i + 1; j < m.size(); ++j) {
            const Distance d = m.at(i, j);
            if (!d.is_finite()) return Distance::infinity();
            if (d > best) best = d;
        }
    }
    return best;
}

Distance diameter(const Graph& g) {
    return diameter_from_matrix(all_pairs_distances(g));
}

std::int64_t truncated_distance_sum(const DistanceMatrix& m, std::int64_t cap) {
    std::int64_t sum = 0;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i + 1; j < m.size(); ++j) {
            const Distance d = m.at(i, j);
            sum += (d.is_finite() && d.value() < cap) ? d.value() : cap;
        }
    }
    return sum;
}

Rational truncated_apl(const Graph& g, std::int64_t L) {
    if (g.node_count() < 2) throw std::invalid_argument("APL undefined below 2 nodes");
    if (L < 0) throw std::invalid_argument("negative truncation level");
    const int n = g.node_count();
    const std::int64_t sum = truncated_distance_sum(all_pairs_distances(g), L);
    return Rational(2 * sum, static_cast<std::int64_t>(n) * (n - 1));
}

Distance pairwise_distance_sum(const DistanceMatrix& m, const std::vector<int>& a,
                               const std::vector<int>& b) {
    std::vector<char> in_a(m.size(), 0), in_b(m.size(), 0);
    for (int v : a) in_a.at(v) = 1;
    for (int v : b) in_b.at(v) = 1;
    std::int64_t sum = 0;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i + 1; j < m.size(); ++j) {
            if (!((in_a[i] && in_b[j]) || (in_b[i] && in_a[j]))) continue;
            const Distance d = m.at(i, j);
            if (!d.is_finite()) return Distance::infinity();
            sum += d.value();
        }
    }
    return Distance::of(sum);
}

Distance pairwise_distance_sum(const Graph& g, const std::vector<int>& a,
                               const std::vector<int>& b) {
    return pairwise_distance_sum(all_pairs_distances(g), a, b);
}

void relax_through_edge(DistanceMatrix& m, int u, int v, std::int64_t weight) {
    const Distance w = Distance::of(weight);
    const int n = m.size();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const Distance via_uv = m.at(x, u) + w + m.at(v, y);
            const Distance via_vu = m.at(x, v) + w + m.at(u, y);
            const Distance best = std::min({m.at(x, y), via_uv, via_vu});
            if (best < m.at(x, y)) m.set(x, y, best);
        }
    }
}

}  // namespace mecs
