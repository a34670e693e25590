#include "matchvote/rational.hpp"

#include <gmpxx.h>

#include <climits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace matchvote {

struct Rational::Big {
    mpq_class value;
};

namespace {

__extension__ typedef __int128 i128;

std::uint64_t abs_u64(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

constexpr i128 kMaxSmall = static_cast<i128>(INT64_MAX);

bool fits(i128 v) { return v <= kMaxSmall && v >= -kMaxSmall; }

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    if (value == INT64_MIN) {
        *this = from_big(Big{mpq_class(mpz_class(static_cast<long>(value)))});
        return;
    }
    num_ = value;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (num == INT64_MIN || den == INT64_MIN) {
        mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q.canonicalize();
        *this = from_big(Big{q});
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = static_cast<std::int64_t>(std::gcd(abs_u64(num), abs_u64(den)));
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::from_big(Big value) {
    const mpz_class& n = value.value.get_num();
    const mpz_class& d = value.value.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
        const long nn = n.get_si();
        const long dd = d.get_si();
        if (nn != LONG_MIN && dd != LONG_MIN) {
            Rational r;
            r.num_ = nn;
            r.den_ = dd;
            return r;
        }
    }
    Rational r;
    r.big_ = std::make_shared<const Big>(std::move(value));
    return r;
}

Rational::Big Rational::to_big() const {
    if (big_) return *big_;
    return Big{mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)))};
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    std::string_view digits = num_part;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!is_digits(digits) || !is_digits(den_part))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const mpz_class n{std::string(num_part)};
    const mpz_class d{std::string(den_part)};
    if (d == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return from_big(Big{q});
}

std::string Rational::to_string() const {
    if (big_) {
        const mpq_class& q = big_->value;
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
    if (big_) return big_->value.get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

bool Rational::is_integer() const {
    if (big_) return big_->value.get_den() == 1;
    return den_ == 1;
}

int Rational::sign() const {
    if (big_) return sgn(big_->value);
    return (num_ > 0) - (num_ < 0);
}

Rational Rational::ceil() const {
    if (big_) {
        mpz_class out;
        mpz_cdiv_q(out.get_mpz_t(), big_->value.get_num_mpz_t(), big_->value.get_den_mpz_t());
        return from_big(Big{mpq_class(out)});
    }
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return Rational(q);
}

Rational Rational::operator-() const {
    if (big_) return from_big(Big{mpq_class(-big_->value)});
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (b.num_ == 0) return a;
        if (a.num_ == 0) return b;
        const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
        if (g == 1) {
            const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
            const i128 d = static_cast<i128>(a.den_) * b.den_;
            if (fits(n) && fits(d)) {
                Rational r;
                r.num_ = static_cast<std::int64_t>(n);
                r.den_ = static_cast<std::int64_t>(d);
                return r;
            }
        } else {
            const auto gi = static_cast<std::int64_t>(g);
            const i128 t = static_cast<i128>(a.num_) * (b.den_ / gi) + static_cast<i128>(b.num_) * (a.den_ / gi);
            const i128 tm = t < 0 ? -t : t;
            const auto g2 = static_cast<std::int64_t>(
                std::gcd(static_cast<std::uint64_t>(tm % static_cast<i128>(g)), g));
            const i128 n = t / g2;
            const i128 d = static_cast<i128>(a.den_ / gi) * (b.den_ / g2);
            if (fits(n) && fits(d)) {
                Rational r;
                r.num_ = static_cast<std::int64_t>(n);
                r.den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
                return r;
            }
        }
    }
    return Rational::from_big(Rational::Big{a.to_big().value + b.to_big().value});
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational{};
        const auto g1 = static_cast<std::int64_t>(std::gcd(abs_u64(a.num_), static_cast<std::uint64_t>(b.den_)));
        const auto g2 = static_cast<std::int64_t>(std::gcd(abs_u64(b.num_), static_cast<std::uint64_t>(a.den_)));
        const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
        const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
        if (fits(n) && fits(d)) {
            Rational r;
            r.num_ = static_cast<std::int64_t>(n);
            r.den_ = static_cast<std::int64_t>(d);
            return r;
        }
    }
    return Rational::from_big(Rational::Big{a.to_big().value * b.to_big().value});
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    if (!b.big_) {
        Rational inv;
        inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
        inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        return a * inv;
    }
    return Rational::from_big(Rational::Big{a.to_big().value / b.to_big().value});
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return a.big_->value == b.big_->value;
    // A reduced value has exactly one representation, so mixed forms differ.
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_big().value, b.to_big().value);
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace matchvote
