#include "doctest.h"
#include "lieforge/rational.hpp"

using lieforge::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
}

TEST_CASE("rational comparisons and queries") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7).is_integer());
    CHECK(Rational(7).as_integer() == 7);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK_THROWS_AS((void)Rational(1, 2).as_integer(), std::domain_error);
    CHECK(Rational(-5, 2).str() == "-5/2");
}

TEST_CASE("rational error cases") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    const Rational big(INT64_MAX);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
