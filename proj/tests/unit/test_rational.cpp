#include <doctest.h>

#include <limits>

#include "fairshare/rational.hpp"

using fairshare::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).numerator() == 2);
    CHECK(Rational(6, 3).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), fairshare::Error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), fairshare::Error);

    // 1/3 + 4/5 = 17/15, the agent-0 PROP share of the c=2, m=3 tight family
    CHECK(Rational(1, 3) + Rational(4, 5) == Rational(17, 15));
}

TEST_CASE("comparisons cross-multiply exactly") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(15, 17) >= Rational(5, 6));
    CHECK(Rational(4, 5) >= Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7) > Rational(20, 3));
}

TEST_CASE("floor and ceil handle negatives") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("nearest_int rounds halves up") {
    CHECK(fairshare::nearest_int(Rational(3, 4)) == 1);
    CHECK(fairshare::nearest_int(Rational(1, 2)) == 1);
    CHECK(fairshare::nearest_int(Rational(49, 100)) == 0);
    CHECK(fairshare::nearest_int(Rational(-1, 2)) == 0);
    CHECK(fairshare::nearest_int(Rational(0)) == 0);
    CHECK(fairshare::nearest_int(Rational(5, 2)) == 3);
    CHECK(fairshare::nearest_int(Rational(-5, 2)) == -2);
    CHECK(fairshare::nearest_int(Rational(7)) == 7);
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("15/17") == Rational(15, 17));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(15, 17).str() == "15/17");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(42).str() == "42");
    CHECK_THROWS_AS(Rational::parse("1.5"), fairshare::ValidationError);
    CHECK_THROWS_AS(Rational::parse("x"), fairshare::ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/0"), fairshare::ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), fairshare::ValidationError);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(std::numeric_limits<long long>::max() / 2 + 1, 1);
    CHECK_THROWS_AS(big * big, fairshare::OverflowError);
    CHECK_THROWS_AS(big + big, fairshare::OverflowError);
}
