#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logpois/poly_parse.hpp"
#include "logpois/randgen.hpp"

using namespace logpois;

TEST_CASE("basic forms") {
    CHECK(parse_poly("y^3") == pow_y(3));
    CHECK(parse_poly("3/2*x^2*y - 1") ==
          rat(3, 2) * (pow_x(2) * BiPoly::var_y()) - BiPoly::constant(1));
    CHECK(parse_poly("0") == BiPoly());
    CHECK(parse_poly("  x *y ") == BiPoly::var_x() * BiPoly::var_y());
    CHECK(parse_poly("(x+y)^2") ==
          pow_x(2) + Rational(2) * (BiPoly::var_x() * BiPoly::var_y()) + pow_y(2));
    CHECK(parse_poly("-x^2") == -pow_x(2));
    CHECK(parse_poly("x^0") == BiPoly::constant(1));
    CHECK(parse_poly("2-(x-y)") == BiPoly::constant(2) - BiPoly::var_x() + BiPoly::var_y());
    // coefficients are arbitrary precision; leading zeros stay decimal
    BiPoly big = parse_poly("123456789012345678901234567890*x");
    CHECK(big.coeff(0, 1) == Rational(Integer("123456789012345678901234567890")));
    CHECK(parse_poly("4/6") == BiPoly::constant(rat(2, 3)));
    CHECK(parse_poly("09") == BiPoly::constant(9));
    CHECK(parse_poly("010") == BiPoly::constant(10));
}

TEST_CASE("errors carry byte offsets") {
    CHECK_THROWS_AS(parse_poly("x + z"), UnknownVariable);
    try {
        parse_poly("x + z");
    } catch (const UnknownVariable& e) {
        CHECK(e.offset == 4);
    }
    try {
        parse_poly("x + ");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_poly("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x y"), SyntaxError);  // juxtaposition is not multiplication
    CHECK_THROWS_AS(parse_poly(""), SyntaxError);
}

TEST_CASE("arbitrary input either parses or throws SyntaxError") {
    SplitMix64 rng(97);
    const std::string alphabet = "xy0123456789+-*/^() .z";
    for (int i = 0; i < 2000; ++i) {
        std::string text;
        int len = rng.in_range(0, 24);
        for (int c = 0; c < len; ++c)
            text += alphabet[std::size_t(rng.below(alphabet.size()))];
        try {
            parse_poly(text);
        } catch (const SyntaxError& e) {
            CHECK(e.offset <= text.size());
        }
    }
}

TEST_CASE("parse o render is the identity") {
    SplitMix64 rng(83);
    for (int i = 0; i < 300; ++i) {
        BiPoly p = random_poly(rng, 7);
        // mix in non-integer coefficients
        p = rat(1, rng.in_range(1, 5)) * p;
        CHECK(parse_poly(p.to_string()) == p);
    }
    CHECK(parse_poly(BiPoly().to_string()).is_zero());
}
