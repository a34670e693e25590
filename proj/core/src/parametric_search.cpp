#include "matchvote/parametric_search.hpp"

#include <stdexcept>

namespace matchvote {

namespace {

Rational solve_line(const SupportLine& line, const Rational& target) {
    if (line.slope.sign() <= 0) throw std::logic_error("first_crossing: flat line below target");
    return (target - line.intercept) / line.slope;
}

}  // namespace

Rational first_crossing(const CurveOracle& f, const Rational& target, Rational lo, CurvePoint at_lo, Rational hi,
                        CurvePoint at_hi) {
    if (target < at_lo.value || at_hi.value < target) throw std::logic_error("first_crossing: target not bracketed");
    while (true) {
        const SupportLine& low = at_lo.line;
        const SupportLine& high = at_hi.line;
        if (low.at(lo) == target) return lo;
        if (low == high) return solve_line(low, target);
        if (low.slope == high.slope) throw std::logic_error("first_crossing: parallel support lines");
        const Rational x = (high.intercept - low.intercept) / (low.slope - high.slope);
        if (x < lo || hi < x) throw std::logic_error("first_crossing: f is not convex on the interval");
        CurvePoint mid = f(x);
        if (mid.value == low.at(x)) return solve_line(mid.value >= target ? low : high, target);
        if (mid.value >= target) {
            hi = x;
            at_hi = std::move(mid);
        } else {
            lo = x;
            at_lo = std::move(mid);
        }
    }
}

}  // namespace matchvote
