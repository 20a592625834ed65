#include <catch2/catch_amalgamated.hpp>

#include "presched/rational.hpp"

using presched::Rational;

TEST_CASE("construction reduces to canonical form") {
    REQUIRE(Rational(5, 15).str() == "1/3");
    REQUIRE(Rational(-4, 8).str() == "-1/2");
    REQUIRE(Rational(4, -8).str() == "-1/2");
    REQUIRE(Rational(0, 7).str() == "0");
    REQUIRE(Rational(6, 3).str() == "2");
    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts integers and a/b, rejects junk") {
    REQUIRE(Rational::parse("18") == Rational(18));
    REQUIRE(Rational::parse("-7") == Rational(-7));
    REQUIRE(Rational::parse("2/6") == Rational(1, 3));
    REQUIRE(Rational::parse("37/2").str() == "37/2");
    REQUIRE_THROWS_AS(Rational::parse(""), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("1/-3"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and stays canonical") {
    Rational a(1, 3), b(7, 3);
    REQUIRE((a + b).str() == "8/3");
    REQUIRE((b - a) == Rational(2));
    REQUIRE((a * b).str() == "7/9");
    REQUIRE((b / a) == Rational(7));
    REQUIRE((-a).str() == "-1/3");
    REQUIRE_THROWS_AS(a / Rational(0), std::domain_error);

    // exactness on a classic float trap
    Rational tenth(1, 10);
    Rational sum(0);
    for (int i = 0; i < 10; ++i) sum += tenth;
    REQUIRE(sum == Rational(1));
}

TEST_CASE("comparisons") {
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 2) < Rational(0));
    REQUIRE(presched::min(Rational(5), Rational(3)) == Rational(3));
    REQUIRE(presched::max(Rational(5), Rational(3)) == Rational(5));
    REQUIRE(presched::abs(Rational(-7, 2)).str() == "7/2");
}

TEST_CASE("int64 bridge and decimal rendering") {
    REQUIRE(Rational(42).fits_int64());
    REQUIRE(Rational(42).as_int64() == 42);
    REQUIRE_FALSE(Rational(1, 2).fits_int64());
    REQUIRE(Rational::parse("9223372036854775807").fits_int64());
    REQUIRE_FALSE(Rational::parse("9223372036854775808").fits_int64());

    REQUIRE(Rational(37, 2).decimal(4) == "18.5");
    REQUIRE(Rational(1, 3).decimal(4) == "0.3333");
    REQUIRE(Rational(-1, 3).decimal(2) == "-0.33");
    REQUIRE(Rational(21).decimal(4) == "21");
}

TEST_CASE("big values stay exact") {
    Rational big = Rational::parse("123456789012345678901234567890");
    REQUIRE((big * Rational(2) - big) == big);
    REQUIRE((big / big) == Rational(1));
}
