#pragma once

#include <cstdint>
#include <optional>

#include "mecs/errors.hpp"
#include "mecs/spanner.hpp"

namespace mecs {

enum class ExactMethod { Enumerate, BranchAndBound };
enum class Objective { EdgeCount, TotalWeight };

struct ExactParams {
    ExactMethod method = ExactMethod::Enumerate;
    Objective objective = Objective::EdgeCount;
    // Cap on edges beyond the spanning-tree minimum n-1; negative = no cap.
    int max_extra_edges = -1;
};

// Search hit its cap before the optimality certificate; the best feasible
// result found so far (if any) rides along.
class incomplete_search_error : public resource_limit_error {
public:
    incomplete_search_error(const std::string& what, std::optional<SpannerResult> incumbent)
        : resource_limit_error(what), incumbent_(std::move(incumbent)) {}

    const std::optional<SpannerResult>& incumbent() const { return incumbent_; }

private:
    std::optional<SpannerResult> incumbent_;
};

// Globally optimal spanner for the resolved target. Bridges are forced into
// every candidate; enumeration scans cardinalities upward (the first hit is
// optimal for the edge-count objective), branch and bound prunes on
// connectivity, cardinality and APL monotonicity. Ties break to the first
// candidate in canonical edge order, so results are deterministic.
SpannerResult exact_solve(const Graph& g, const SpannerTarget& target,
                          const ExactParams& params = {});

struct FeasibilityWitness {
    bool feasible = false;
    std::vector<int> edges;
    std::int64_t total_weight = 0;
    std::int64_t distance_sum = 0;  // over unordered pairs
};

// Decision form used by the hardness reductions: does a connected spanning
// subgraph exist with total weight <= weight_budget and unordered pairwise
// distance sum <= distance_budget? Exhaustive over edge subsets; graphs
// beyond the enumeration guard raise resource_limit_error.
FeasibilityWitness exact_feasibility(const Graph& g, std::int64_t weight_budget,
                                     std::int64_t distance_budget);

}  // namespace mecs
