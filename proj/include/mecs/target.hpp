#pragma once

#include <string>

#include "mecs/distances.hpp"
#include "mecs/graph.hpp"
#include "mecs/rational.hpp"

namespace mecs {

// Admissible average-path-length budget for a spanner, in one of three
// shapes: a stretch factor t (bound = t * apl(G)), an absolute bound C, or
// an increment delta (bound = apl(G) + delta).
class SpannerTarget {
public:
    enum class Mode { Stretch, Absolute, Increment };

    static SpannerTarget stretch(Rational t);
    static SpannerTarget absolute(Rational bound);
    static SpannerTarget increment(Rational delta);

    Mode mode() const { return mode_; }
    Rational value() const { return value_; }
    std::string describe() const;

private:
    SpannerTarget(Mode mode, Rational value) : mode_(mode), value_(value) {}

    Mode mode_;
    Rational value_;
};

// Target resolved against a concrete graph: the exact APL budget plus the
// graph's own APL (needed by stretch-style heuristics).
struct ResolvedTarget {
    Rational bound;
    Rational input_apl;

    // bound / input_apl: the effective stretch factor.
    Rational stretch_factor() const { return bound / input_apl; }
};

// Throws invalid_argument when g is disconnected or has < 2 nodes, and
// infeasible_target_error when the bound falls below apl(g).
ResolvedTarget resolve_target(const Graph& g, const SpannerTarget& target);
ResolvedTarget resolve_target(const AplValue& input_apl, const SpannerTarget& target);

}  // namespace mecs
