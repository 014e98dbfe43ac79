#include "mecs/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>

#include "mecs/errors.hpp"
#include "mecs/mst.hpp"

namespace mecs {

namespace {

// Diagonal zero, everything else unreachable: the APSP matrix of the
// edgeless subgraph, ready for relax_through_edge updates.
DistanceMatrix empty_subgraph_matrix(int n) {
    DistanceMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, Distance::of(0));
    return m;
}

bool within_bound(const AplValue& value, const Rational& bound) {
    return value.finite && value.value() <= bound;
}

std::vector<int> heaviest_first_order(const Graph& g) {
    std::vector<int> order(g.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        return std::make_tuple(-ea.weight, ea.u, ea.v) <
               std::make_tuple(-eb.weight, eb.u, eb.v);
    });
    return order;
}

SpannerResult make_result(const Graph& g, std::vector<int> edges, const AplValue& value,
                          const ResolvedTarget& target, std::string algorithm, int iterations) {
    std::sort(edges.begin(), edges.end());
    SpannerResult r;
    r.total_weight = 0;
    for (int idx : edges) r.total_weight += g.edge(idx).weight;
    r.edges = std::move(edges);
    r.apl = value;
    r.bound = target.bound;
    r.input_apl = target.input_apl;
    r.algorithm = std::move(algorithm);
    r.iterations = iterations;
    return r;
}

// Shared scan for the two addition heuristics. The filter decides whether
// an edge may be added once the budget is still violated.
template <typename Filter>
SpannerResult run_addition(const Graph& g, const ResolvedTarget& target, std::string name,
                           Filter may_add) {
    DistanceMatrix m = empty_subgraph_matrix(g.node_count());
    std::vector<int> chosen;
    for (int idx : g.edges_by_weight()) {
        const AplValue current = apl_from_matrix(m);
        if (within_bound(current, target.bound)) break;
        const Edge& e = g.edge(idx);
        if (!may_add(m, e)) continue;
        chosen.push_back(idx);
        relax_through_edge(m, e.u, e.v, e.weight);
    }
    const AplValue achieved = apl_from_matrix(m);
    if (!within_bound(achieved, target.bound)) {
        throw infeasible_result_error(
            name + " terminated above the APL bound " + target.bound.str() + " (achieved " +
            (achieved.finite ? achieved.value().str() : std::string("disconnected")) + ")");
    }
    const int added = static_cast<int>(chosen.size());
    return make_result(g, std::move(chosen), achieved, target, std::move(name), added);
}

}  // namespace

SpannerResult greedy_spanner(const Graph& g, Rational t) {
    if (t < Rational(1)) throw std::invalid_argument("stretch factor below 1");
    const ResolvedTarget target = resolve_target(g, SpannerTarget::stretch(t));

    DistanceMatrix m = empty_subgraph_matrix(g.node_count());
    std::vector<int> chosen;
    for (int idx : g.edges_by_weight()) {
        const Edge& e = g.edge(idx);
        const Distance here = m.at(e.u, e.v);
        if (!here.is_finite() || Rational(here.value()) > t * Rational(e.weight)) {
            chosen.push_back(idx);
            relax_through_edge(m, e.u, e.v, e.weight);
        }
    }
    const AplValue achieved = apl_from_matrix(m);
    assert(within_bound(achieved, target.bound));
    const int added = static_cast<int>(chosen.size());
    return make_result(g, std::move(chosen), achieved, target, "greedy-spanner", added);
}

SpannerResult greedy_removal(const Graph& g, const SpannerTarget& target) {
    const ResolvedTarget resolved = resolve_target(g, target);

    EdgeMask mask = full_mask(g);
    DistanceMatrix m = all_pairs_distances(g);
    AplValue current = apl_from_matrix(m);
    int removed = 0;

    for (int idx : heaviest_first_order(g)) {
        const Edge& e = g.edge(idx);
        mask[idx] = 0;

        // One SSSP per endpoint: if neither row moved, no pairwise distance
        // moved, so the APL (and connectivity) is unchanged.
        bool rows_stable = true;
        for (int endpoint : {e.u, e.v}) {
            const auto row = shortest_paths_from(g, mask, endpoint);
            for (int x = 0; x < g.node_count() && rows_stable; ++x) {
                if (row[x] != m.at(endpoint, x)) rows_stable = false;
            }
            if (!rows_stable) break;
        }
        if (rows_stable) {
            ++removed;
            continue;
        }

        DistanceMatrix candidate = all_pairs_distances(g, mask);
        const AplValue candidate_apl = apl_from_matrix(candidate);
        if (within_bound(candidate_apl, resolved.bound)) {
            m = std::move(candidate);
            current = candidate_apl;
            ++removed;
        } else {
            mask[idx] = 1;
        }
    }
    return make_result(g, indices_from_mask(mask), current, resolved, "greedy-removal",
                       removed);
}

SpannerResult greedy_addition(const Graph& g, const SpannerTarget& target) {
    const ResolvedTarget resolved = resolve_target(g, target);
    return run_addition(g, resolved, "greedy-addition",
                        [](const DistanceMatrix&, const Edge&) { return true; });
}

SpannerResult greedy_addition_filtered(const Graph& g, const SpannerTarget& target,
                                       std::optional<Rational> edge_stretch) {
    const ResolvedTarget resolved = resolve_target(g, target);
    const Rational t = edge_stretch.value_or(resolved.stretch_factor());
    if (t < Rational(1)) throw std::invalid_argument("edge stretch below 1");
    return run_addition(g, resolved, "greedy-addition-filtered",
                        [t](const DistanceMatrix& m, const Edge& e) {
                            const Distance here = m.at(e.u, e.v);
                            return !here.is_finite() ||
                                   Rational(here.value()) > t * Rational(e.weight);
                        });
}

FeasibilityReport verify_feasibility(const Graph& g, const std::vector<int>& edges,
                                     const SpannerTarget& target) {
    const ResolvedTarget resolved = resolve_target(g, target);
    const EdgeMask mask = mask_from_indices(g, edges);

    FeasibilityReport report;
    report.bound = resolved.bound;
    report.connected = is_connected(g, mask);
    report.apl = report.connected ? apl(g, mask) : AplValue{0, 0, false};
    report.feasible = report.connected && within_bound(report.apl, resolved.bound);
    for (int idx : edges) report.total_weight += g.edge(idx).weight;

    std::vector<int> degree(g.node_count(), 0);
    for (int idx : edges) {
        ++degree[g.edge(idx).u];
        ++degree[g.edge(idx).v];
    }
    report.spans_all_nodes = true;
    for (int d : degree) report.spans_all_nodes = report.spans_all_nodes && d > 0;
    if (report.connected) {
        const Graph sub = g.spanning_subgraph(edges);
        report.mst_weight_match = spanning_tree_weight(sub, minimum_spanning_tree(sub)) ==
                                  spanning_tree_weight(g, minimum_spanning_tree(g));
    }
    return report;
}

}  // namespace mecs
