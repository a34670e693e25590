#pragma once

// Lexicographic edge weight: exact primary value, then an integer tie bonus.
// Distinct powers of two per edge make the optimum unique.

#include <compare>
#include <stdexcept>

#include "matchvote/rational.hpp"

namespace matchvote::detail {

template <class Int>
struct LexWeight {
    Rational primary;
    Int tie{0};

    friend LexWeight operator+(const LexWeight& a, const LexWeight& b) { return {a.primary + b.primary, a.tie + b.tie}; }
    friend LexWeight operator-(const LexWeight& a, const LexWeight& b) { return {a.primary - b.primary, a.tie - b.tie}; }
    friend bool operator==(const LexWeight& a, const LexWeight& b) { return a.primary == b.primary && a.tie == b.tie; }
    friend bool operator<(const LexWeight& a, const LexWeight& b) {
        if (a.primary != b.primary) return a.primary < b.primary;
        return a.tie < b.tie;
    }
    friend bool operator<=(const LexWeight& a, const LexWeight& b) { return !(b < a); }
};

/// Slacks between two outer vertices keep even tie parts; anything else is an engine bug.
template <class Int>
LexWeight<Int> half(const LexWeight<Int>& w) {
    if (Int(w.tie % 2) != 0) throw std::logic_error("blossom: odd tie slack");
    return {w.primary / Rational(2), Int(w.tie / 2)};
}

}  // namespace matchvote::detail
