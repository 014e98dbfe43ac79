#include "mecs/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mecs/distances.hpp"

namespace mecs::gadgets {

SubsetSumGadget build_subset_sum_gadget(const SubsetSumInstance& instance) {
    const int k = static_cast<int>(instance.values.size());
    if (k < 1) throw std::invalid_argument("subset-sum gadget needs at least one value");
    std::int64_t total = 0;
    for (std::int64_t a : instance.values) {
        if (a < 1) throw std::invalid_argument("subset-sum values must be >= 1");
        total += a;
    }
    if (instance.target < 1 || instance.target > total)
        throw std::invalid_argument("subset-sum target must lie in [1, sum(values)]");

    SubsetSumGadget out;
    out.values = instance.values;
    out.target = instance.target;
    out.value_sum = total;
    out.weight_budget = 2 * total + instance.target;
    out.distance_budget = 4 * k * total - instance.target;

    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const std::int64_t a = instance.values[i];
        const int item = 1 + 2 * i;
        const int prime = 2 + 2 * i;
        edges.push_back({0, item, a});
        edges.push_back({0, prime, a});
        edges.push_back({item, prime, a});
    }
    out.graph = Graph(1 + 2 * k, edges);

    for (int i = 0; i < k; ++i) {
        out.spoke_edges.push_back(out.graph.edge_index(0, out.item_node(i)));
        out.spoke_edges.push_back(out.graph.edge_index(0, out.item_prime_node(i)));
        out.chord_edges.push_back(out.graph.edge_index(out.item_node(i), out.item_prime_node(i)));
    }
    std::sort(out.spoke_edges.begin(), out.spoke_edges.end());

    Graph spokes = out.graph.spanning_subgraph(out.spoke_edges);
    if (spokes.total_weight() != 2 * total)
        throw std::logic_error("subset-sum gadget: spoke weight self-check failed");
    DistanceMatrix m = all_pairs_distances(spokes);
    std::int64_t sum = 0;
    for (int u = 0; u < spokes.node_count(); ++u)
        for (int v = u + 1; v < spokes.node_count(); ++v) sum += m.at(u, v).value();
    if (sum != 4 * k * total)
        throw std::logic_error("subset-sum gadget: spoke distance-sum self-check failed");
    return out;
}

std::vector<int> decode_subset_sum(const SubsetSumGadget& gadget,
                                   const std::vector<int>& witness_edges) {
    const Graph& g = gadget.graph;
    std::set<int> chosen(witness_edges.begin(), witness_edges.end());
    for (int e : chosen)
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("witness references an edge outside the gadget");

    Graph sub = g.spanning_subgraph(std::vector<int>(chosen.begin(), chosen.end()));
    if (!is_connected(sub)) throw std::invalid_argument("witness is not connected");
    if (sub.total_weight() != gadget.weight_budget)
        throw std::invalid_argument("witness does not meet the weight budget with equality");
    DistanceMatrix m = all_pairs_distances(sub);
    std::int64_t sum = 0;
    for (int u = 0; u < g.node_count(); ++u)
        for (int v = u + 1; v < g.node_count(); ++v) sum += m.at(u, v).value();
    if (sum != gadget.distance_budget)
        throw std::invalid_argument("witness does not meet the distance budget with equality");

    for (int e : gadget.spoke_edges)
        if (chosen.count(e) == 0)
            throw std::invalid_argument("witness does not contain the spoke tree");

    std::vector<int> items;
    std::int64_t picked = 0;
    for (int i = 0; i < static_cast<int>(gadget.values.size()); ++i) {
        if (chosen.count(gadget.chord_edges[i]) != 0) {
            items.push_back(i);
            picked += gadget.values[i];
        }
    }
    if (picked != gadget.target) {
        std::ostringstream msg;
        msg << "decoded items sum to " << picked << ", expected " << gadget.target;
        throw std::logic_error(msg.str());
    }
    return items;
}

}  // namespace mecs::gadgets
