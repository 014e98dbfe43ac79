#include "mecs/target.hpp"

#include <stdexcept>

#include "mecs/errors.hpp"

namespace mecs {

SpannerTarget SpannerTarget::stretch(Rational t) {
    if (t < Rational(1)) throw std::invalid_argument("stretch factor below 1");
    return SpannerTarget(Mode::Stretch, t);
}

SpannerTarget SpannerTarget::absolute(Rational bound) {
    if (bound <= Rational(0)) throw std::invalid_argument("non-positive APL bound");
    return SpannerTarget(Mode::Absolute, bound);
}

SpannerTarget SpannerTarget::increment(Rational delta) {
    if (delta < Rational(0)) throw std::invalid_argument("negative APL increment");
    return SpannerTarget(Mode::Increment, delta);
}

std::string SpannerTarget::describe() const {
    switch (mode_) {
        case Mode::Stretch: return "stretch " + value_.str();
        case Mode::Absolute: return "absolute " + value_.str();
        case Mode::Increment: return "increment " + value_.str();
    }
    return "?";
}

ResolvedTarget resolve_target(const AplValue& input_apl, const SpannerTarget& target) {
    if (!input_apl.finite) throw std::invalid_argument("target against a disconnected graph");
    const Rational mu = input_apl.value();
    Rational bound = mu;
    switch (target.mode()) {
        case SpannerTarget::Mode::Stretch: bound = target.value() * mu; break;
        case SpannerTarget::Mode::Absolute: bound = target.value(); break;
        case SpannerTarget::Mode::Increment: bound = mu + target.value(); break;
    }
    if (bound < mu) {
        throw infeasible_target_error("APL bound " + bound.str() + " below input APL " +
                                      mu.str());
    }
    return ResolvedTarget{bound, mu};
}

ResolvedTarget resolve_target(const Graph& g, const SpannerTarget& target) {
    return resolve_target(apl(g), target);
}

}  // namespace mecs
