#pragma once

#include <functional>

#include "matchvote/rational.hpp"

namespace matchvote {

/// y = intercept + slope * x.
struct SupportLine {
    Rational intercept;
    Rational slope;

    [[nodiscard]] Rational at(const Rational& x) const { return intercept + slope * x; }
    friend bool operator==(const SupportLine&, const SupportLine&) = default;
};

/// f(x) together with a line touching f at x and lying below f on the interval.
struct CurvePoint {
    Rational value;
    SupportLine line;
};

using CurveOracle = std::function<CurvePoint(const Rational&)>;

/// Smallest x in [lo, hi] with f(x) = target.
///
/// Requires f convex and non-decreasing on [lo, hi] with
/// f(lo) <= target <= f(hi); at_lo and at_hi are the oracle's answers at the
/// endpoints. Each step intersects the two boundary lines and queries f
/// there, so the oracle is called at most once per distinct line of f.
/// Throws std::logic_error if the preconditions are observed to fail.
[[nodiscard]] Rational first_crossing(const CurveOracle& f, const Rational& target, Rational lo, CurvePoint at_lo,
                                      Rational hi, CurvePoint at_hi);

}  // namespace matchvote
