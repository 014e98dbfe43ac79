#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mecs/distances.hpp"
#include "mecs/graph.hpp"
#include "mecs/target.hpp"

namespace mecs {

// Outcome of any sparsification routine: a subset of the input graph's
// edges plus the certified numbers a caller needs to report or verify.
struct SpannerResult {
    std::vector<int> edges;  // indices into the input graph, ascending
    AplValue apl;            // APL of the selected subgraph
    Rational bound;          // resolved APL budget the result satisfies
    Rational input_apl;
    std::int64_t total_weight = 0;
    std::string algorithm;
    int iterations = 0;   // refinement rounds, where the algorithm has them
    bool optimal = false;  // true only with an optimality certificate

    int edge_count() const { return static_cast<int>(edges.size()); }
};

struct FeasibilityReport {
    bool feasible = false;
    bool connected = false;
    bool spans_all_nodes = false;    // every node keeps at least one edge
    bool mst_weight_match = false;   // candidate's spanning-tree weight equals g's
    AplValue apl;
    Rational bound;
    std::int64_t total_weight = 0;
};

// Checks that the edge subset induces a connected spanning subgraph whose
// APL meets the resolved target. Invalid edge indices throw.
FeasibilityReport verify_feasibility(const Graph& g, const std::vector<int>& edges,
                                     const SpannerTarget& target);

}  // namespace mecs
