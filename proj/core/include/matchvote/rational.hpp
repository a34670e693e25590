#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace matchvote {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline; anything larger is promoted to an arbitrary-precision GMP value
/// and demoted again as soon as a result fits. Every instance is immutable
/// and the big representation is shared, so copies are cheap.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] double to_double() const;

    [[nodiscard]] bool is_zero() const { return big_ == nullptr && num_ == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_small() const { return big_ == nullptr; }

    /// Smallest integer >= value.
    [[nodiscard]] Rational ceil() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    struct Big;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const Big> big_;

    static Rational from_big(Big value);
    [[nodiscard]] Big to_big() const;
};

}  // namespace matchvote
