#pragma once

#include <optional>

#include "mecs/spanner.hpp"

namespace mecs {

// Classic greedy spanner: scan edges lightest-first and keep (u, v) only
// when the current partial spanner's u-v distance exceeds t * w(u, v). The
// result is a t-spanner of every pairwise distance, hence also satisfies
// the stretch-t APL budget. t >= 1.
SpannerResult greedy_spanner(const Graph& g, Rational t);

// Edge-removal heuristic: scan edges heaviest-first and drop an edge when
// the remainder stays connected and its APL stays within the budget.
SpannerResult greedy_removal(const Graph& g, const SpannerTarget& target);

// Edge-addition heuristic: start from no edges, scan lightest-first, add an
// edge while the partial subgraph still violates the budget (a disconnected
// subgraph counts as violating).
SpannerResult greedy_addition(const Graph& g, const SpannerTarget& target);

// Addition with a per-edge distance filter: an edge is also skipped when
// the partial subgraph already connects its endpoints within
// edge_stretch * w(u, v). Can terminate infeasible (the filter may starve
// the budget); that raises infeasible_result_error. edge_stretch defaults
// to bound / apl(g).
SpannerResult greedy_addition_filtered(const Graph& g, const SpannerTarget& target,
                                       std::optional<Rational> edge_stretch = std::nullopt);

}  // namespace mecs
