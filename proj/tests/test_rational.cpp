#include <indep/error.hpp>
#include <indep/rational.hpp>

#include <doctest.h>

#include <cmath>

using namespace indep;

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("4/8") == Rational(1, 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rational formatting is canonical")
{
    CHECK(to_string(Rational(49, 4)) == "49/4");
    CHECK(to_string(Rational(14, 2)) == "7");
}

TEST_CASE("log2 of big values")
{
    CHECK(log2_of(BigInt(1)) == 0.0);
    CHECK(log2_of(BigInt(1024)) == 10.0);
    CHECK(log2_of(Rational(1, 8)) == -3.0);
    CHECK(std::isinf(log2_of(BigInt(0))));
    BigInt huge = pow(BigInt(3), 5000);
    CHECK(std::abs(log2_of(huge) - 5000 * std::log2(3.0)) < 1e-9 * 5000 * std::log2(3.0));
    CHECK(std::abs(log2_of(Rational(huge, BigInt(pow(BigInt(2), 7000)))) - (5000 * std::log2(3.0) - 7000)) < 1e-6);
}
