#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "logpois/bipoly.hpp"
#include "logpois/randgen.hpp"

using namespace logpois;

namespace {

const BiPoly x = BiPoly::var_x();
const BiPoly y = BiPoly::var_y();

/* independent schoolbook product over raw term lists; the oracle for mul */
BiPoly schoolbook_mul(const BiPoly& p, const BiPoly& q) {
    BiPoly out;
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            BiPoly term;
            term.add_term({ep.i + eq.i, ep.j + eq.j}, cp * cq);
            out += term;
        }
    return out;
}

}  // namespace

TEST_CASE("ring arithmetic") {
    CHECK((x + (-x)).is_zero());
    CHECK(y * pow_y(2) == pow_y(3));
    CHECK((x + y) * (x - y) == pow_x(2) - pow_y(2));
    CHECK((x + y) * (x - y) == schoolbook_mul(x + y, x - y));

    SplitMix64 rng(7);
    for (int i = 0; i < 100; ++i) {
        BiPoly p = random_poly(rng, 5), q = random_poly(rng, 5);
        CHECK(p * q == schoolbook_mul(p, q));
        CHECK(p * q == q * p);
        CHECK((p + q) - q == p);
    }
}

TEST_CASE("coefficients stay canonical") {
    BiPoly p = rat(1, 2) * x + rat(1, 3) * x;  // 5/6 x
    REQUIRE(p.term_count() == 1);
    Rational c = p.coeff(0, 1);
    CHECK(c == rat(5, 6));
    CHECK(c.get_den() > 0);
    CHECK(gcd(Integer(c.get_num()), Integer(c.get_den())) == 1);
    CHECK((rat(1, 2) * x - rat(1, 2) * x).is_zero());
}

TEST_CASE("degree of zero is a sentinel") {
    CHECK(!BiPoly().total_degree().has_value());
    CHECK(BiPoly::constant(3).total_degree() == 0);
    CHECK((pow_y(2) * x).total_degree() == 3);
}

TEST_CASE("derivatives") {
    CHECK(partial_x(pow_x(2) * y) == Rational(2) * (x * y));
    CHECK(euler_y(pow_y(3)) == Rational(3) * pow_y(3));
    CHECK(euler_y(pow_x(2) + Rational(2) * (x * pow_y(2))) == Rational(4) * (x * pow_y(2)));
    CHECK(partial_y(pow_y(3)) == Rational(3) * pow_y(2));

    SplitMix64 rng(11);
    for (int i = 0; i < 100; ++i) {
        BiPoly p = random_poly(rng, 6), q = random_poly(rng, 6);
        CHECK(partial_x(p * q) == partial_x(p) * q + p * partial_x(q));
        CHECK(partial_y(p * q) == partial_y(p) * q + p * partial_y(q));
    }
}

TEST_CASE("euler operator is diagonal on monomials") {
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            BiPoly m = BiPoly::monomial(i, j);
            CHECK(euler_y(m) == Rational(i) * m);
        }
}

TEST_CASE("antiderivatives") {
    CHECK(antiderivative_x(BiPoly::constant(1)) == x);
    CHECK(antiderivative_x(pow_x(2) * y) == rat(1, 3) * (pow_x(3) * y));
    CHECK(antiderivative_y(Rational(3) * pow_y(2)) == pow_y(3));
    CHECK(partial_y(antiderivative_y(Rational(3) * pow_y(2))) == Rational(3) * pow_y(2));

    SplitMix64 rng(13);
    for (int i = 0; i < 100; ++i) {
        BiPoly p = random_poly(rng, 6);
        CHECK(partial_x(antiderivative_x(p)) == p);
        CHECK(partial_y(antiderivative_y(p)) == p);
    }
}

TEST_CASE("y-adic split") {
    BiPoly p = BiPoly::constant(1) + y + pow_y(3);
    YAdicSplit s = y_adic_split(p, 2);
    REQUIRE(s.low.size() == 1);
    CHECK(s.low[0] == BiPoly::constant(1));
    CHECK(s.high == y + pow_y(3));
    CHECK(divisible_by_y_pow(s.high, 1));
    CHECK(s.reassemble() == p);

    YAdicSplit z = y_adic_split(BiPoly(), 4);
    REQUIRE(z.low.size() == 3);
    for (const auto& part : z.low) CHECK(part.is_zero());
    CHECK(z.high.is_zero());

    YAdicSplit m = y_adic_split(pow_y(2) * x, 2);
    CHECK(m.low[0].is_zero());
    CHECK(m.high == pow_y(2) * x);
    CHECK(divisible_by_y_pow(m.high, 1));

    CHECK_THROWS_AS(y_adic_split(p, 1), std::invalid_argument);

    SplitMix64 rng(17);
    for (int i = 0; i < 60; ++i) {
        BiPoly q = random_poly(rng, 8);
        int n = 2 + int(rng.below(4));
        YAdicSplit split = y_adic_split(q, n);
        CHECK(split.reassemble() == q);
        CHECK(divisible_by_y_pow(split.high, n - 1));
        for (const auto& part : split.low)
            CHECK((part.is_zero() || part.terms().rbegin()->first.i == 0));
    }
}

TEST_CASE("grading") {
    BiPoly p = pow_x(2) + x * y + BiPoly::constant(1);
    auto comps = weight_components(p);
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(0) == BiPoly::constant(1));
    CHECK(comps.at(2) == pow_x(2) + x * y);

    CHECK(is_homogeneous(pow_y(4)) == 4);
    CHECK(!is_homogeneous(x + pow_y(2)).has_value());
    CHECK(!is_homogeneous(BiPoly()).has_value());

    SplitMix64 rng(19);
    for (int i = 0; i < 50; ++i) {
        BiPoly q = random_poly(rng, 7);
        BiPoly sum;
        for (const auto& [w, part] : weight_components(q)) {
            CHECK(is_homogeneous(part) == w);
            sum += part;
        }
        CHECK(sum == q);
    }
}

TEST_CASE("monomial basis enumeration") {
    auto b2 = monomial_basis(2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == Exp2{0, 2});
    CHECK(b2[1] == Exp2{1, 1});
    CHECK(b2[2] == Exp2{2, 0});

    auto le = monomial_basis(1, YConstraint::y_exp_le(0));
    REQUIRE(le.size() == 1);
    CHECK(le[0] == Exp2{0, 1});

    auto ge = monomial_basis(3, YConstraint::y_exp_ge(2));
    REQUIRE(ge.size() == 2);
    CHECK(ge[0] == Exp2{2, 1});
    CHECK(ge[1] == Exp2{3, 0});

    CHECK(monomial_basis(-1).empty());

    std::set<Exp2> seen;
    for (int w = 0; w <= 12; ++w) {
        auto basis = monomial_basis(w);
        CHECK(basis.size() == std::size_t(w + 1));
        for (Exp2 e : basis) CHECK(seen.insert(e).second);
    }
}

TEST_CASE("rendering") {
    CHECK(BiPoly().to_string() == "0");
    CHECK((rat(3, 2) * (pow_x(2) * y) - BiPoly::constant(1)).to_string() == "3/2*x^2*y - 1");
    CHECK((-x).to_string() == "-x");
    CHECK((y - x).to_string() == "-x + y");
}
