#include "mecs/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mecs/distances.hpp"

namespace mecs::gadgets {

namespace {

void validate_instance(const EcstsInstance& instance) {
    if (instance.t < 1) throw std::invalid_argument("ecsts gadget needs t >= 1");
    if (3 * instance.t > 62) throw std::invalid_argument("ecsts gadget limited to t <= 20");
    if (instance.subsets.empty()) throw std::invalid_argument("ecsts gadget needs subsets");
    for (const auto& s : instance.subsets) {
        std::set<int> distinct(s.begin(), s.end());
        if (distinct.size() != 3) throw std::invalid_argument("ecsts subsets need 3 distinct elements");
        for (int e : s)
            if (e < 0 || e >= 3 * instance.t)
                throw std::invalid_argument("ecsts subset element out of range");
    }
}

bool find_cover(std::uint64_t all, const std::vector<std::uint64_t>& masks, std::uint64_t covered,
                std::vector<int>& pick) {
    if (covered == all) return true;
    int lowest = 0;
    while ((covered >> lowest) & 1) ++lowest;
    for (int i = 0; i < static_cast<int>(masks.size()); ++i) {
        if (((masks[i] >> lowest) & 1) == 0) continue;
        if ((masks[i] & covered) != 0) continue;
        pick.push_back(i);
        if (find_cover(all, masks, covered | masks[i], pick)) return true;
        pick.pop_back();
    }
    return false;
}

std::int64_t tree_distance_sum(const Graph& g, const std::vector<int>& tree_edges) {
    Graph sub = g.spanning_subgraph(tree_edges);
    DistanceMatrix m = all_pairs_distances(sub);
    std::int64_t sum = 0;
    for (int u = 0; u < g.node_count(); ++u)
        for (int v = u + 1; v < g.node_count(); ++v) sum += m.at(u, v).value();
    return sum;
}

EcstsGadget build(const EcstsInstance& instance, std::int64_t pads, std::int64_t budget,
                  bool verify_budgets) {
    validate_instance(instance);
    const int t = instance.t;
    const int k = static_cast<int>(instance.subsets.size());
    if (pads < 0) throw std::invalid_argument("ecsts pad count must be >= 0");

    EcstsGadget out;
    out.t = t;
    out.k = k;
    out.pad_count = pads;
    out.distance_budget = budget;
    out.subsets = instance.subsets;

    const int r = static_cast<int>(pads);
    for (int j = 0; j < r; ++j) out.pad_nodes.push_back(1 + j);
    for (int i = 0; i < k; ++i) out.subset_nodes.push_back(1 + r + i);
    for (int j = 0; j < 3 * t; ++j) out.element_nodes.push_back(1 + r + k + j);

    std::vector<Edge> edges;
    for (int p : out.pad_nodes) edges.push_back({0, p, 1});
    for (int s : out.subset_nodes) edges.push_back({0, s, 1});
    for (int i = 0; i < k; ++i)
        for (int e : instance.subsets[i]) edges.push_back({out.subset_nodes[i], out.element_nodes[e], 1});
    out.graph = Graph(1 + r + k + 3 * t, edges);

    for (int s : out.subset_nodes) out.hub_subset_edges.push_back(out.graph.edge_index(0, s));

    std::vector<std::uint64_t> masks;
    for (const auto& s : instance.subsets) {
        std::uint64_t m = 0;
        for (int e : s) m |= std::uint64_t{1} << e;
        masks.push_back(m);
    }
    const std::uint64_t all = (std::uint64_t{1} << (3 * t)) - 1;
    std::vector<int> pick;
    if (find_cover(all, masks, 0, pick)) {
        for (int p : out.pad_nodes) out.canonical_tree.push_back(out.graph.edge_index(0, p));
        for (int e : out.hub_subset_edges) out.canonical_tree.push_back(e);
        for (int i : pick)
            for (int e : instance.subsets[i])
                out.canonical_tree.push_back(out.graph.edge_index(out.subset_nodes[i], out.element_nodes[e]));
        std::sort(out.canonical_tree.begin(), out.canonical_tree.end());

        if (verify_budgets) {
            Graph tree = out.graph.spanning_subgraph(out.canonical_tree);
            DistanceMatrix m = all_pairs_distances(tree);
            std::vector<int> core(out.subset_nodes);
            core.insert(core.end(), out.element_nodes.begin(), out.element_nodes.end());
            if (pairwise_distance_sum(m, core, core).value() != out.pad_count)
                throw std::logic_error("ecsts gadget: pad-count self-check failed");
            if (tree_distance_sum(out.graph, out.canonical_tree) != out.distance_budget)
                throw std::logic_error("ecsts gadget: distance-budget self-check failed");
        }
    }
    return out;
}

}  // namespace

std::int64_t ecsts_pad_count(int t, int k) {
    const std::int64_t tt = t;
    const std::int64_t kk = k;
    return kk * (kk - 1) + 9 * kk * tt + 18 * tt * tt - 18 * tt;
}

std::int64_t ecsts_distance_budget(int t, int k) {
    const std::int64_t r = ecsts_pad_count(t, k);
    const std::int64_t tt = t;
    const std::int64_t kk = k;
    return r * r + 2 * r * kk + kk + 6 * tt + 9 * r * tt + r;
}

EcstsGadget build_ecsts_gadget(const EcstsInstance& instance) {
    validate_instance(instance);
    const int k = static_cast<int>(instance.subsets.size());
    return build(instance, ecsts_pad_count(instance.t, k),
                 ecsts_distance_budget(instance.t, k), true);
}

EcstsGadget build_ecsts_gadget(const EcstsInstance& instance, std::int64_t pad_count_override,
                               std::int64_t distance_budget_override) {
    return build(instance, pad_count_override, distance_budget_override, false);
}

CoverProfile cover_profile(const EcstsGadget& gadget, const std::vector<int>& tree_edges) {
    const Graph& g = gadget.graph;
    if (static_cast<int>(tree_edges.size()) != g.node_count() - 1)
        throw std::invalid_argument("tree must have exactly node_count-1 edges");
    Graph tree = g.spanning_subgraph(tree_edges);
    if (!is_connected(tree)) throw std::invalid_argument("tree edges do not span the gadget");

    std::set<int> chosen(tree_edges.begin(), tree_edges.end());
    CoverProfile out;
    for (int i = 0; i < gadget.k; ++i) {
        int degree = 0;
        for (int e : gadget.subsets[i]) {
            int idx = g.edge_index(gadget.subset_nodes[i], gadget.element_nodes[e]);
            if (chosen.count(idx) != 0) ++degree;
        }
        ++out.counts[degree];
    }
    DistanceMatrix m = all_pairs_distances(tree);
    out.element_distance_sum =
        pairwise_distance_sum(m, gadget.element_nodes, gadget.element_nodes).value();
    const std::int64_t t = gadget.t;
    out.identity_value = 18 * t * t - 12 * t + 6 * (t - out.counts[3]) - 2 * out.counts[2];
    out.spoke_complete = true;
    for (int e : gadget.hub_subset_edges)
        if (chosen.count(e) == 0) out.spoke_complete = false;
    return out;
}

std::vector<int> extract_exact_cover(const EcstsGadget& gadget,
                                     const std::vector<int>& tree_edges) {
    const Graph& g = gadget.graph;
    if (static_cast<int>(tree_edges.size()) != g.node_count() - 1)
        throw std::invalid_argument("tree must have exactly node_count-1 edges");
    Graph tree = g.spanning_subgraph(tree_edges);
    if (!is_connected(tree)) throw std::invalid_argument("tree edges do not span the gadget");
    const std::int64_t sum = tree_distance_sum(g, tree_edges);
    if (sum > gadget.distance_budget) {
        std::ostringstream msg;
        msg << "tree distance sum " << sum << " exceeds budget " << gadget.distance_budget;
        throw std::invalid_argument(msg.str());
    }

    std::set<int> chosen(tree_edges.begin(), tree_edges.end());
    std::vector<int> cover;
    std::vector<int> covered(3 * gadget.t, 0);
    for (int i = 0; i < gadget.k; ++i) {
        int degree = 0;
        for (int e : gadget.subsets[i]) {
            int idx = g.edge_index(gadget.subset_nodes[i], gadget.element_nodes[e]);
            if (chosen.count(idx) != 0) ++degree;
        }
        if (degree == 3) {
            cover.push_back(i);
            for (int e : gadget.subsets[i]) ++covered[e];
        }
    }
    for (int e = 0; e < 3 * gadget.t; ++e)
        if (covered[e] != 1)
            throw std::logic_error("feasible tree does not encode an exact cover");
    return cover;
}

}  // namespace mecs::gadgets
