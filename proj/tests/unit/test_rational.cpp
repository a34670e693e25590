#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "matchvote/rational.hpp"

using matchvote::Rational;

TEST(Rational, NormalizesSignAndGcd) {
    EXPECT_EQ(Rational(2, -4).to_string(), "-1/2");
    EXPECT_EQ(Rational(6, 3).to_string(), "2");
    EXPECT_EQ(Rational(0, -5).to_string(), "0");
    EXPECT_TRUE(Rational(0, 7).is_zero());
}

TEST(Rational, ParsesWireForms) {
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse(" 10/4 "), Rational(5, 2));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, ArithmeticAndOrder) {
    const Rational a(1, 3);
    const Rational b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_LT(b, a);
    EXPECT_GT(-b, -a);
    EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(Rational, Ceil) {
    EXPECT_EQ(Rational(7, 2).ceil(), Rational(4));
    EXPECT_EQ(Rational(-7, 2).ceil(), Rational(-3));
    EXPECT_EQ(Rational(4).ceil(), Rational(4));
}

TEST(Rational, PromotesAndDemotes) {
    const Rational big = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(4);
    EXPECT_FALSE(big.is_small());
    EXPECT_EQ(big.to_string(), "36893488147419103228");
    const Rational back = big / Rational(4);
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, Rational(std::numeric_limits<std::int64_t>::max()));
    EXPECT_EQ(Rational::parse("36893488147419103228"), big);
    EXPECT_LT(Rational(1), big);
    EXPECT_EQ(Rational(std::numeric_limits<std::int64_t>::min()).to_string(), "-9223372036854775808");
}

TEST(Rational, FieldLawsOnRandomValues) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    std::uniform_int_distribution<std::int64_t> den(1, std::int64_t{1} << 40);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        EXPECT_EQ(Rational::parse(a.to_string()), a);
        EXPECT_EQ(a < b, (a - b).sign() < 0);
    }
}
