#include "mecs/exact.hpp"

#include <algorithm>
#include <numeric>

#include "mecs/mst.hpp"

namespace mecs {

namespace {

bool apl_within(const Graph& g, const EdgeMask& mask, const Rational& bound) {
    const AplValue value = apl(g, mask);
    return value.finite && value.value() <= bound;
}

SpannerResult finish(const Graph& g, const ResolvedTarget& target, std::vector<int> edges,
                     const char* algorithm, int evaluated, bool optimal) {
    SpannerResult r;
    std::sort(edges.begin(), edges.end());
    r.apl = apl(g, mask_from_indices(g, edges));
    r.bound = target.bound;
    r.input_apl = target.input_apl;
    for (int idx : edges) r.total_weight += g.edge(idx).weight;
    r.edges = std::move(edges);
    r.algorithm = algorithm;
    r.iterations = evaluated;
    r.optimal = optimal;
    return r;
}

std::int64_t objective_value(const Graph& g, Objective obj, const std::vector<int>& edges) {
    if (obj == Objective::EdgeCount) return static_cast<std::int64_t>(edges.size());
    std::int64_t w = 0;
    for (int idx : edges) w += g.edge(idx).weight;
    return w;
}

// Edges not forced by bridge preprocessing, in canonical scan order.
std::vector<int> free_edges_canonical(const Graph& g, const std::vector<int>& forced) {
    std::vector<char> is_forced(g.edge_count(), 0);
    for (int idx : forced) is_forced[idx] = 1;
    std::vector<int> free;
    for (int idx : g.edges_by_weight()) {
        if (!is_forced[idx]) free.push_back(idx);
    }
    return free;
}

SpannerResult solve_enumerate(const Graph& g, const ResolvedTarget& target,
                              const ExactParams& params) {
    const int n = g.node_count();
    const int m = g.edge_count();
    const std::vector<int> forced = bridges(g);
    const int b = static_cast<int>(forced.size());
    const std::vector<int> free = free_edges_canonical(g, forced);
    const int f = static_cast<int>(free.size());

    std::int64_t forced_weight = 0;
    for (int idx : forced) forced_weight += g.edge(idx).weight;
    std::vector<std::int64_t> free_weight_prefix(f + 1, 0);
    for (int i = 0; i < f; ++i) {
        free_weight_prefix[i + 1] = free_weight_prefix[i] + g.edge(free[i]).weight;
    }

    const int cap_total = params.max_extra_edges < 0
                              ? m
                              : std::min(m, n - 1 + params.max_extra_edges);
    const bool capped = cap_total < m;

    std::optional<std::vector<int>> best;
    std::int64_t best_value = 0;
    bool certified = false;
    int evaluated = 0;

    EdgeMask mask(m, 0);
    for (int idx : forced) mask[idx] = 1;

    for (int k = std::max(n - 1, b); k <= cap_total && !certified; ++k) {
        const int c = k - b;
        if (c > f) break;
        if (params.objective == Objective::TotalWeight && best) {
            // Cardinality k needs at least the c lightest free edges; once
            // that floor reaches the incumbent no later level can improve.
            if (forced_weight + free_weight_prefix[c] >= best_value) {
                certified = true;
                break;
            }
        }

        std::vector<int> comb(c);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            for (int i : comb) mask[free[i]] = 1;
            ++evaluated;
            if (is_connected(g, mask) && apl_within(g, mask, target.bound)) {
                std::vector<int> chosen = indices_from_mask(mask);
                const std::int64_t value = objective_value(g, params.objective, chosen);
                if (!best || value < best_value) {
                    best = std::move(chosen);
                    best_value = value;
                }
                if (params.objective == Objective::EdgeCount) {
                    // Levels are scanned in ascending cardinality: first
                    // feasible hit is the optimum.
                    for (int i : comb) mask[free[i]] = 0;
                    certified = true;
                    break;
                }
            }
            for (int i : comb) mask[free[i]] = 0;

            int i = c - 1;
            while (i >= 0 && comb[i] == f - c + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < c; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    if (!capped) certified = true;  // whole space scanned
    if (best && (certified || params.objective == Objective::EdgeCount)) {
        // An edge-count optimum within the cap is optimal outright: any
        // better solution would be smaller still.
        return finish(g, target, std::move(*best), "exact-enumerate", evaluated, true);
    }

    std::optional<SpannerResult> incumbent;
    if (best) incumbent = finish(g, target, std::move(*best), "exact-enumerate", evaluated, false);
    throw incomplete_search_error(
        "enumeration exhausted its cardinality cap without an optimality certificate",
        std::move(incumbent));
}

struct BnbState {
    const Graph& g;
    const ResolvedTarget& target;
    const ExactParams& params;
    std::vector<int> order{};  // undecided edges, canonical order
    EdgeMask included{};
    EdgeMask allowed{};
    int included_count = 0;
    std::int64_t included_weight = 0;
    int cap_total = 0;
    std::optional<std::vector<int>> best{};
    std::int64_t best_value = 0;
    int evaluated = 0;

    int components_of_included() const {
        UnionFind uf(g.node_count());
        int parts = g.node_count();
        for (int i = 0; i < g.edge_count(); ++i) {
            if (included[i] && uf.unite(g.edge(i).u, g.edge(i).v)) --parts;
        }
        return parts;
    }

    std::int64_t lower_bound() const {
        const int deficit = components_of_included() - 1;
        if (params.objective == Objective::EdgeCount) return included_count + deficit;
        std::int64_t lightest = 0;
        bool have = false;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (allowed[i] && !included[i]) {
                if (!have || g.edge(i).weight < lightest) {
                    lightest = g.edge(i).weight;
                    have = true;
                }
            }
        }
        return included_weight + static_cast<std::int64_t>(deficit) * (have ? lightest : 0);
    }

    void record_if_better() {
        ++evaluated;
        if (!is_connected(g, included) || !apl_within(g, included, target.bound)) return;
        const std::vector<int> chosen = indices_from_mask(included);
        const std::int64_t value = objective_value(g, params.objective, chosen);
        if (!best || value < best_value) {
            best = chosen;
            best_value = value;
        }
    }

    void search(std::size_t depth) {
        const int deficit = components_of_included() - 1;
        if (included_count + deficit > cap_total) return;
        if (best && lower_bound() >= best_value) return;
        if (depth == order.size()) {
            record_if_better();
            return;
        }
        const int idx = order[depth];
        const Edge& e = g.edge(idx);

        if (included_count + 1 <= cap_total) {
            included[idx] = 1;
            included_count += 1;
            included_weight += e.weight;
            search(depth + 1);
            included[idx] = 0;
            included_count -= 1;
            included_weight -= e.weight;
        }

        allowed[idx] = 0;
        // Excluding can only shrink the reachable edge set; if even the
        // most permissive completion violates the budget, prune.
        if (is_connected(g, allowed) && apl_within(g, allowed, target.bound)) {
            search(depth + 1);
        }
        allowed[idx] = 1;
    }
};

SpannerResult solve_bnb(const Graph& g, const ResolvedTarget& target,
                        const ExactParams& params) {
    const int n = g.node_count();
    const int m = g.edge_count();
    const std::vector<int> forced = bridges(g);

    BnbState state{g, target, params};
    state.order = free_edges_canonical(g, forced);
    state.included.assign(m, 0);
    state.allowed.assign(m, 1);
    for (int idx : forced) {
        state.included[idx] = 1;
        state.included_count += 1;
        state.included_weight += g.edge(idx).weight;
    }
    state.cap_total = params.max_extra_edges < 0
                          ? m
                          : std::min(m, n - 1 + params.max_extra_edges);
    state.search(0);

    const bool capped = state.cap_total < m;
    const bool certified = !capped || params.objective == Objective::EdgeCount;
    if (state.best && certified) {
        return finish(g, target, std::move(*state.best), "exact-bnb", state.evaluated, true);
    }
    std::optional<SpannerResult> incumbent;
    if (state.best) {
        incumbent = finish(g, target, std::move(*state.best), "exact-bnb", state.evaluated,
                           false);
    }
    throw incomplete_search_error(
        "branch and bound exhausted its cardinality cap without an optimality certificate",
        std::move(incumbent));
}

}  // namespace

SpannerResult exact_solve(const Graph& g, const SpannerTarget& target,
                          const ExactParams& params) {
    constexpr int kSearchGuard = 26;
    if (g.edge_count() > kSearchGuard) {
        throw resource_limit_error("graph too large for exact search (" +
                                   std::to_string(g.edge_count()) + " edges, guard " +
                                   std::to_string(kSearchGuard) + ")");
    }
    const ResolvedTarget resolved = resolve_target(g, target);
    return params.method == ExactMethod::Enumerate ? solve_enumerate(g, resolved, params)
                                                   : solve_bnb(g, resolved, params);
}

FeasibilityWitness exact_feasibility(const Graph& g, std::int64_t weight_budget,
                                     std::int64_t distance_budget) {
    const int n = g.node_count();
    const int m = g.edge_count();
    constexpr int kEnumerationGuard = 26;
    if (m > kEnumerationGuard) {
        throw resource_limit_error("graph too large for subset enumeration (" +
                                   std::to_string(m) + " edges, guard " +
                                   std::to_string(kEnumerationGuard) + ")");
    }

    std::vector<std::int64_t> weight(m);
    for (int i = 0; i < m; ++i) weight[i] = g.edge(i).weight;

    FeasibilityWitness out;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        if (__builtin_popcount(bits) < n - 1) continue;

        std::int64_t total = 0;
        for (int i = 0; i < m; ++i) {
            if (bits & (1u << i)) total += weight[i];
        }
        if (total > weight_budget) continue;

        UnionFind uf(n);
        int parts = n;
        for (int i = 0; i < m; ++i) {
            if ((bits & (1u << i)) && uf.unite(g.edge(i).u, g.edge(i).v)) --parts;
        }
        if (parts != 1) continue;

        EdgeMask mask(m, 0);
        for (int i = 0; i < m; ++i) mask[i] = (bits >> i) & 1;
        const std::int64_t sum = truncated_distance_sum(all_pairs_distances(g, mask),
                                                        distance_budget + 1);
        // With cap distance_budget+1 the truncated sum equals the true sum
        // whenever the true sum is within budget.
        if (sum > distance_budget) continue;

        out.feasible = true;
        out.edges = indices_from_mask(mask);
        out.total_weight = total;
        out.distance_sum = sum;
        return out;
    }
    return out;
}

}  // namespace mecs
