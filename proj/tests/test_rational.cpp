#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hfam/rational.hpp"

using hfam::Rational;
using hfam::checked_pow;

TEST_CASE("construction reduces and normalizes signs") {
    CHECK_EQ(Rational(2, 4), Rational(1, 2));
    CHECK_EQ(Rational(-2, -4), Rational(1, 2));
    CHECK_EQ(Rational(2, -4), Rational(-1, 2));
    CHECK_EQ(Rational(0, 7), Rational(0, 1));
    CHECK_EQ(Rational(5).den(), 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(1, 4) <= Rational(1, 4));
    // cross products beyond double precision
    CHECK(Rational(1000000000000000001LL, 1000000000000000000LL) > Rational(1));
}

TEST_CASE("arithmetic") {
    CHECK_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    CHECK_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    CHECK_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    CHECK_THROWS_AS(Rational(1LL << 62) * Rational(1LL << 62), std::overflow_error);
}

TEST_CASE("string round trip") {
    CHECK_EQ(Rational(1, 4).str(), "1/4");
    CHECK_EQ(Rational(6, 4).str(), "3/2");
    CHECK_EQ(Rational(-1, 4).str(), "-1/4");
    CHECK_EQ(Rational(3).str(), "3/1");
    CHECK_EQ(Rational::parse("1/4"), Rational(1, 4));
    CHECK_EQ(Rational::parse("7"), Rational(7));
    CHECK_EQ(Rational::parse(Rational(22, 7).str()), Rational(22, 7));
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("checked integer powers") {
    CHECK_EQ(checked_pow(2ull, 10u), 1024ull);
    CHECK_EQ(checked_pow(7ull, 0u), 1ull);
    CHECK_EQ(checked_pow(0ull, 3u), 0ull);
    CHECK_FALSE(checked_pow(2ull, 64u).has_value());
    CHECK_FALSE(checked_pow(1ull << 32, 2u).has_value());
}

TEST_CASE("checked rational powers") {
    const auto cube = checked_pow(Rational(4, 3), 3u);
    REQUIRE(cube.has_value());
    CHECK_EQ(*cube, Rational(64, 27));
    CHECK_FALSE(checked_pow(Rational(1LL << 40), 4u).has_value());
}
