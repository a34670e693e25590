#include <gtest/gtest.h>

#include <random>

#include "matchvote/parametric_search.hpp"

using namespace matchvote;

namespace {

struct MaxOfLines {
    std::vector<SupportLine> lines;
    int calls = 0;

    CurvePoint operator()(const Rational& x) {
        ++calls;
        std::size_t best = 0;
        for (std::size_t i = 1; i < lines.size(); ++i)
            if (lines[i].at(x) > lines[best].at(x)) best = i;
        return {lines[best].at(x), lines[best]};
    }

    // f is a non-decreasing max of lines, so f(x) >= target iff some line reaches it.
    [[nodiscard]] Rational brute(const Rational& target, const Rational& lo) const {
        std::optional<Rational> first;
        for (const auto& l : lines) {
            Rational x;
            if (l.intercept + l.slope * lo >= target)
                x = lo;
            else if (l.slope.sign() > 0)
                x = (target - l.intercept) / l.slope;
            else
                continue;
            if (!first || x < *first) first = x;
        }
        return *first < lo ? lo : *first;
    }
};

Rational search(MaxOfLines& f, const Rational& target, const Rational& lo, const Rational& hi) {
    auto oracle = [&f](const Rational& x) { return f(x); };
    const auto at_lo = f(lo);
    const auto at_hi = f(hi);
    return first_crossing(oracle, target, lo, at_lo, hi, at_hi);
}

}  // namespace

TEST(FirstCrossing, SingleLine) {
    MaxOfLines f{{{Rational(0), Rational(3)}}};
    EXPECT_EQ(search(f, Rational(1), Rational(0), Rational(1)), Rational(1, 3));
}

TEST(FirstCrossing, TargetAtLowerEnd) {
    MaxOfLines f{{{Rational(1), Rational(2)}}};
    EXPECT_EQ(search(f, Rational(1), Rational(0), Rational(1)), Rational(0));
}

TEST(FirstCrossing, KinkedCurve) {
    // max(x, 3x - 1): kink at 1/2; target 1 is reached on the steep line at 2/3.
    MaxOfLines f{{{Rational(0), Rational(1)}, {Rational(-1), Rational(3)}}};
    EXPECT_EQ(search(f, Rational(1), Rational(0), Rational(1)), Rational(2, 3));
}

TEST(FirstCrossing, RandomConvexCurves) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> small(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        MaxOfLines f;
        const int count = 1 + trial % 7;
        for (int i = 0; i < count; ++i)
            f.lines.push_back({Rational(small(rng) - 6, 1 + small(rng) % 4), Rational(small(rng), 1 + small(rng) % 3)});
        const Rational lo(0);
        const Rational hi(2);
        const auto flo = f(lo).value;
        const auto fhi = f(hi).value;
        if (fhi < flo || fhi == flo) continue;
        const Rational target = flo + (fhi - flo) * Rational(1 + small(rng), 13);
        f.calls = 0;
        EXPECT_EQ(search(f, target, lo, hi), f.brute(target, lo)) << "trial " << trial;
        EXPECT_LE(f.calls, 2 + 2 * count);
    }
}
