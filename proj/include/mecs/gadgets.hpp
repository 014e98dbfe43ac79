#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mecs/graph.hpp"

namespace mecs::gadgets {

// Subset-sum instance: does some subset of values sum to target?
struct SubsetSumInstance {
    std::vector<std::int64_t> values;  // each >= 1
    std::int64_t target = 0;           // 1 <= target <= sum(values)
};

// Hub-and-triangles graph encoding a subset-sum instance as a dual-budget
// spanner decision: item i contributes a triangle {hub, i, i'} whose three
// edges all weigh values[i]. The spoke tree (both hub edges per item) has
// total weight 2*sum and unordered distance sum 4*k*sum; selecting chord i
// on top adds values[i] weight and removes values[i] distance. Feasibility
// at (weight_budget, distance_budget) is equivalent to the instance.
struct SubsetSumGadget {
    Graph graph;
    std::vector<std::int64_t> values;
    std::int64_t target = 0;
    std::int64_t value_sum = 0;        // T
    std::int64_t weight_budget = 0;    // 2T + target
    std::int64_t distance_budget = 0;  // 4kT - target
    int hub = 0;
    std::vector<int> spoke_edges;  // ascending edge indices
    std::vector<int> chord_edges;  // chord_edges[i] belongs to item i

    int item_node(int i) const { return 1 + 2 * i; }
    int item_prime_node(int i) const { return 2 + 2 * i; }
};

// Construction self-checks the spoke weight and spoke distance sum and
// throws logic_error on mismatch.
SubsetSumGadget build_subset_sum_gadget(const SubsetSumInstance& instance);

// witness_edges must meet both budgets with equality and contain the spoke
// tree; returns the selected item indices (their values sum to target).
std::vector<int> decode_subset_sum(const SubsetSumGadget& gadget,
                                   const std::vector<int>& witness_edges);

// Exact-cover-by-3-sets instance over elements 0..3t-1.
struct EcstsInstance {
    int t = 0;
    std::vector<std::array<int, 3>> subsets;  // each: 3 distinct elements
};

// Star gadget for the spanning-tree distance-sum decision: a hub carries
// pad_count degree-1 pads (all forced into every spanning tree), one node
// per subset, and one node per element, with unit edges hub-subset and
// subset-element (by membership). A spanning tree meets distance_budget
// exactly when the subsets whose element edges it keeps form an exact
// cover.
struct EcstsGadget {
    Graph graph;
    int t = 0;
    int k = 0;
    std::int64_t pad_count = 0;        // r
    std::int64_t distance_budget = 0;  // C
    int hub = 0;
    std::vector<int> pad_nodes;
    std::vector<int> subset_nodes;   // subset_nodes[i] is the node of subsets[i]
    std::vector<int> element_nodes;  // element_nodes[j] is the node of element j
    std::vector<std::array<int, 3>> subsets;
    std::vector<int> canonical_tree;  // empty when the instance has no cover
    std::vector<int> hub_subset_edges;
};

// pad_count and distance_budget in closed form; derived from the canonical
// cover tree, where distances to subset and element nodes are fixed.
std::int64_t ecsts_pad_count(int t, int k);
std::int64_t ecsts_distance_budget(int t, int k);

// Builds the gadget; when an exact cover exists the canonical tree is
// materialized and the closed-form budgets are verified against it.
// Overrides replace the computed budgets (for experiments off the
// reduction path).
EcstsGadget build_ecsts_gadget(const EcstsInstance& instance);
EcstsGadget build_ecsts_gadget(const EcstsInstance& instance, std::int64_t pad_count_override,
                               std::int64_t distance_budget_override);

// How a spanning tree distributes elements over subset nodes.
struct CoverProfile {
    std::array<std::int64_t, 4> counts{};  // counts[i]: subset nodes with i element edges
    std::int64_t element_distance_sum = 0;  // direct, over element pairs in the tree
    std::int64_t identity_value = 0;        // 18t^2-12t+6(t-n3)-2n2
    bool spoke_complete = false;            // all hub-subset edges present
};

// tree_edges must induce a spanning tree of gadget.graph.
CoverProfile cover_profile(const EcstsGadget& gadget, const std::vector<int>& tree_edges);

// tree_edges must induce a spanning tree meeting the distance budget;
// returns the subset indices of the encoded exact cover.
std::vector<int> extract_exact_cover(const EcstsGadget& gadget,
                                     const std::vector<int>& tree_edges);

}  // namespace mecs::gadgets
