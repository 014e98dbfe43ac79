#pragma once

#include "mecs/graph.hpp"
#include "mecs/mip/model.hpp"
#include "mecs/target.hpp"

namespace mecs::mip {

// Caller-supplied cutting planes: each entry is a set of edge indices from
// which any admissible subgraph must pick at least one (separators for the
// connectivity pool, APL-violating deletion sets for the apl pool).
struct CutPools {
    std::vector<std::vector<int>> connectivity;
    std::vector<std::vector<int>> apl;
};

struct FlowOptions {
    bool iso_cuts = false;  // every node keeps at least one incident edge
    bool conn_cut = false;  // at least n-1 edges overall
    CutPools pools;
};

struct PathOptions {
    int L = -1;  // path-length horizon; -1 derives it from the graph diameter
    bool relax_paths = false;     // drop monotonicity/lower bounds, u and y continuous
    bool leaf_reduction = false;  // fold degree-1 nodes into the budget constraint
    bool iso_cuts = false;
    bool conn_cut = false;
    CutPools pools;
};

// Multicommodity-flow formulation (unit weights): binary x per edge, one
// flow system per node pair, budget on total flow volume.
MipModel build_flow_model(const Graph& g, const ResolvedTarget& target,
                          const FlowOptions& options = {});

// Level formulation (unit weights): u^l_ij says "i and j within distance l
// in the chosen subgraph", built up by one-step expansions y through the
// neighbors of the smaller endpoint. The budget telescopes the levels into
// per-pair truncated distances.
MipModel build_path_model(const Graph& g, const ResolvedTarget& target,
                          const PathOptions& options = {});

// Weighted variant: level-1 membership needs weight exactly 1, expansions
// advance by the weight of the stepping edge, and only upper-bounding
// constraints are kept. leaf_reduction is not defined here and throws.
MipModel build_weighted_path_model(const Graph& g, const ResolvedTarget& target,
                                   const PathOptions& options = {});

}  // namespace mecs::mip
