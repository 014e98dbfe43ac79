#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "mecs/rational.hpp"

using mecs::Rational;

TEST_CASE("construction normalizes sign and reduces") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparisons cross-multiply without rounding") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    // Large values that would collide in double precision.
    const std::int64_t big = 3037000499;  // ~sqrt(INT64_MAX)
    CHECK(Rational(big, big - 1) > Rational(big + 1, big));
}

TEST_CASE("overflow throws instead of wrapping") {
    const Rational huge(INT64_MAX, 1);
    CHECK_THROWS_AS(huge + huge, std::overflow_error);
    CHECK_THROWS_AS(huge * Rational(2), std::overflow_error);
    // Reduction rescues products with common factors.
    CHECK(Rational(INT64_MAX, 2) * Rational(2, INT64_MAX) == Rational(1));
}

TEST_CASE("parse accepts integers, fractions and decimals") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("5/4") == Rational(5, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("2/-4") == Rational(-1, 2));
    CHECK(Rational::parse("2.71") == Rational(271, 100));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("10.") == Rational(10));
    CHECK(Rational::parse(".5") == Rational(1, 2));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2345678901234567"), std::invalid_argument);
}

TEST_CASE("str round-trips through parse") {
    for (const Rational r : {Rational(7, 2), Rational(-3), Rational(0), Rational(1351, 561)}) {
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("to_double matches the quotient") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(1351, 561).to_double() == doctest::Approx(2.40819964349));
}
