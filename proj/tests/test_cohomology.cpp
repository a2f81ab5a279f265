#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logpois/cohomology.hpp"

using namespace logpois;

namespace {

const BiPoly x = BiPoly::var_x();
const BiPoly y = BiPoly::var_y();

}  // namespace

TEST_CASE("graded bases") {
    ComplexSpec log2 = ComplexSpec::logarithmic(2);
    auto b = graded_basis(log2, 1, -1);
    REQUIRE(b.size() == 1);
    CHECK(b[0].a == BiPoly::constant(1));
    CHECK(b[0].b.is_zero());

    auto b0 = graded_basis(log2, 0, 2);
    REQUIRE(b0.size() == 3);
    CHECK(b0[0].a == pow_x(2));
    CHECK(b0[1].a == x * y);
    CHECK(b0[2].a == pow_y(2));

    auto top = graded_basis(ComplexSpec::classical_power(2), 2, -2);
    REQUIRE(top.size() == 1);
    CHECK(top[0].a == BiPoly::constant(1));

    for (int w = -3; w <= 8; ++w) {
        CHECK(graded_basis(log2, 3, w).empty());
        CHECK(graded_dim(log2, 3, w) == 0);
    }

    // dimensions: log C^1_w = (w+2) + (w+1)
    for (int n = 2; n <= 4; ++n) {
        ComplexSpec spec = ComplexSpec::logarithmic(n);
        CHECK(graded_dim(spec, 1, 3) == 9);
        CHECK(graded_dim(spec, 1, -1) == 1);
        CHECK(graded_dim(spec, 2, -1) == 1);
    }
}

TEST_CASE("coordinates round-trip") {
    ComplexSpec log3 = ComplexSpec::logarithmic(3);
    for (int k = 0; k <= 2; ++k)
        for (int w = -1; w <= 6; ++w) {
            auto basis = graded_basis(log3, k, w);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                SparseVec v = cochain_to_vector(log3, k, w, basis[i]);
                REQUIRE(v.entries.size() == 1);
                CHECK(v.entries[0].first == int(i));
                CHECK(vector_to_cochain(log3, k, w, v) == basis[i]);
            }
        }
}

TEST_CASE("matrix of the differential") {
    // log n=2, k=1, w=0: basis {x d1, y d1, d2}, images {y, 0, -y}
    RatMatrix m = matrix_of_d(ComplexSpec::logarithmic(2), 1, 0);
    REQUIRE(m.rows() == 2);  // C^2 at weight 0: {x, y} wedge coefficients
    REQUIRE(m.cols() == 3);
    CHECK(m.entry(0, 0) == 0);
    CHECK(m.entry(1, 0) == 1);
    CHECK(m.entry(1, 1) == 0);
    CHECK(m.entry(1, 2) == -1);
    CHECK(rank(m) == 1);
    CHECK(kernel(m).dimension() == 2);

    // classical n=2, k=1, w=0: images {y^2, 0, -2xy, -y^2}
    RatMatrix c = matrix_of_d(ComplexSpec::classical_power(2), 1, 0);
    REQUIRE(c.cols() == 4);
    REQUIRE(c.rows() == 3);  // {x^2, xy, y^2}
    CHECK(c.entry(2, 0) == 1);
    CHECK(c.column(1).is_zero());
    CHECK(c.entry(1, 2) == -2);
    CHECK(c.entry(2, 3) == -1);

    // d1(1) = 0 gives a zero column
    CHECK(matrix_of_d(ComplexSpec::logarithmic(3), 0, 0).column(0).is_zero());
}

TEST_CASE("predicted dimensions") {
    // n=2, k=1 by weight -1,0,1,2,...: 1,2,1,1,...
    CHECK(predicted_log_dims(2, 1, -1) == 1);
    CHECK(predicted_log_dims(2, 1, 0) == 2);
    CHECK(predicted_log_dims(2, 1, 1) == 1);
    CHECK(predicted_log_dims(2, 1, 2) == 1);
    CHECK(predicted_log_dims(2, 1, 9) == 1);

    CHECK(predicted_log_dims(3, 2, 1) == 2);
    for (int n = 2; n <= 5; ++n) {
        CHECK(predicted_log_dims(n, 0, 0) == 1);
        CHECK(predicted_log_dims(n, 0, 3) == 0);
        CHECK(predicted_log_dims(n, 0, -1) == 0);
        CHECK(predicted_log_dims(n, 3, 0) == 0);
        CHECK(predicted_log_dims(n, 2, 20) == n - 1);
    }
}

TEST_CASE("cohomology of graded pieces") {
    ComplexSpec log2 = ComplexSpec::logarithmic(2);
    CohomologyReport h0 = cohomology_at(log2, 0, 0);
    CHECK(h0.dim_h == 1);
    CHECK(h0.match);

    CohomologyReport h1 = cohomology_at(log2, 1, 0);
    CHECK(h1.dim_z == 2);
    CHECK(h1.dim_b == 0);
    CHECK(h1.dim_h == 2);
    REQUIRE(h1.representatives.size() == 2);
    CHECK(cochain_to_string(h1.representatives[0]) == "y·δ¹");
    CHECK(cochain_to_string(h1.representatives[1]) == "x·δ¹ + δ²");

    for (int n = 2; n <= 5; ++n) {
        CohomologyReport big = cohomology_at(ComplexSpec::logarithmic(n), 2, 17);
        CHECK(big.dim_h == n - 1);
        CHECK(big.match);
        CohomologyReport none = cohomology_at(ComplexSpec::logarithmic(n), 5, 3);
        CHECK(none.dim_h == 0);
        CHECK(none.match);
    }
}

TEST_CASE("mu map") {
    for (int n = 2; n <= 5; ++n) {
        auto [a, b] = mu(BiPoly::constant(1), n);
        CHECK(a == Rational(n - 1) * x);
        CHECK(b == BiPoly::constant(1));
        CHECK(mu(pow_y(n - 1), n) == std::pair{BiPoly(), pow_y(n - 1)});
        CHECK(mu(BiPoly(), n) == std::pair{BiPoly(), BiPoly()});
        // image lies in Ker d2
        ComplexSpec spec = ComplexSpec::logarithmic(n);
        for (int w = 0; w <= 6; ++w)
            for (Exp2 e : monomial_basis(w))
                CHECK(d2(spec, mu(BiPoly::monomial(e.i, e.j), n)).is_zero());
    }
}

TEST_CASE("structure checks over a small window") {
    for (int n = 2; n <= 4; ++n) {
        StructureCheck z2 = verify_z2_structure(n, {-2, 10});
        CHECK(z2.pass);
        if (!z2.pass) MESSAGE(z2.counterexample);
        StructureCheck b3 = verify_b3_structure(n, {-2, 10});
        CHECK(b3.pass);
        if (!b3.pass) MESSAGE(b3.counterexample);
    }
}

TEST_CASE("classical vs logarithmic comparison") {
    for (int n = 2; n <= 4; ++n) {
        ComparisonReport cmp = compare_variants(n, {-2, 12});
        CHECK(cmp.cells_match);
        CHECK(cmp.totals_match);
    }
    // spot checks from the hand computations
    CHECK(cohomology_at(ComplexSpec::classical_power(2), 1, 0, false).dim_h == 2);
    CHECK(cohomology_at(ComplexSpec::classical_power(2), 2, -2, false).dim_h == 1);
    CHECK(cohomology_at(ComplexSpec::logarithmic(2), 2, -1, false).dim_h == 1);
}

TEST_CASE("argument guards") {
    ComplexSpec log2 = ComplexSpec::logarithmic(2);
    CHECK_THROWS_AS(matrix_of_d(log2, 2, 0), std::invalid_argument);
    // an inhomogeneous cochain has no coordinates in a single graded piece
    CHECK_THROWS_AS(cochain_to_vector(log2, 0, 1, cochain0(log2, x + pow_y(2))),
                    std::logic_error);
    RatMatrix m(2, 2);
    CHECK_THROWS_AS(m.add(2, 0, Rational(1)), std::out_of_range);
    CHECK_THROWS_AS(divide_by_y_pow(x, 1), std::invalid_argument);
}

TEST_CASE("classical representatives at n=2, w=0") {
    CohomologyReport r = cohomology_at(ComplexSpec::classical_power(2), 1, 0);
    REQUIRE(r.dim_h == 2);
    CHECK(cochain_to_string(r.representatives[0]) == "y·∂x");
    CHECK(cochain_to_string(r.representatives[1]) == "x·∂x + y·∂y");
}
