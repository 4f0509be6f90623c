#include <gtest/gtest.h>

#include <cliqph/rational.hpp>

using cliqph::Coord;
using cliqph::Rational;

TEST(Rational, NormalizesSignAndGcd) {
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ArithmeticAndOrder) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 5) / Rational(2), Rational(1, 10));
    EXPECT_LT(Rational(1, 7), Rational(1, 6));
    EXPECT_GT(Rational(5, 6), Rational(4, 5));
    EXPECT_EQ(abs(Rational(-2, 7)), Rational(2, 7));
}

TEST(Rational, StringRoundTrip) {
    for (auto r : {Rational(1, 5), Rational(-3, 4), Rational(7), Rational(0)})
        EXPECT_EQ(Rational::parse(r.to_string()), r);
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
    EXPECT_EQ(Rational::parse("-1.5"), Rational(-3, 2));
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::logic_error);
}

TEST(Rational, OverflowIsReported) {
    const Rational big(INT64_MAX / 2 + 1);
    EXPECT_THROW((void)(big * Rational(4)), std::overflow_error);
}

TEST(Coord, InfinityIsGreatestAndRoundTrips) {
    EXPECT_GT(Coord::infinite(), Coord(Rational(1000000)));
    EXPECT_EQ(Coord::parse("inf"), Coord::infinite());
    EXPECT_EQ(Coord::parse("1/5"), Coord(Rational(1, 5)));
    EXPECT_EQ(Coord::infinite().to_string(), "inf");
    EXPECT_THROW((void)Coord::infinite().value(), std::logic_error);
    EXPECT_DOUBLE_EQ(Coord(Rational(1, 4)).to_double(), 0.25);
}
