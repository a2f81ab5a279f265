#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logpois/rational.hpp"

namespace logpois {

/* Exponent pair of a monomial y^i x^j. The (i, j) order is the canonical
 * term/basis order everywhere: ascending y-exponent, then x-exponent. */
struct Exp2 {
    int i = 0;  // y-exponent
    int j = 0;  // x-exponent
    auto operator<=>(const Exp2&) const = default;
    int total() const { return i + j; }
};

/* Sparse bivariate polynomial over Q, elements of F[x,y].
 * Stored zero coefficients are never kept; the zero polynomial has an
 * empty term map and its degree is nullopt, never -1. */
class BiPoly {
public:
    using TermMap = std::map<Exp2, Rational>;

    BiPoly() = default;

    static BiPoly constant(const Rational& c);
    static BiPoly monomial(int y_exp, int x_exp, const Rational& c = Rational(1));
    static BiPoly var_x() { return monomial(0, 1); }
    static BiPoly var_y() { return monomial(1, 0); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(int y_exp, int x_exp) const;

    std::optional<int> total_degree() const;
    int y_degree_min() const;  // min y-exponent over terms; 0 for the zero polynomial

    /* term insertion used by builders; drops the term if c == 0 */
    void add_term(Exp2 e, const Rational& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& c, const BiPoly& p);
    bool operator==(const BiPoly&) const = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

BiPoly partial_x(const BiPoly& p);
BiPoly partial_y(const BiPoly& p);
/* Euler operator y*dy: diagonal on monomials with eigenvalue = y-exponent */
BiPoly euler_y(const BiPoly& p);

/* Formal antiderivatives with integration constant 0;
 * partial_x(antiderivative_x(p)) == p exactly, same in y. */
BiPoly antiderivative_x(const BiPoly& p);
BiPoly antiderivative_y(const BiPoly& p);

bool divisible_by_y_pow(const BiPoly& p, int k);
/* exact division by y^k; throws std::invalid_argument when not divisible */
BiPoly divide_by_y_pow(const BiPoly& p, int k);

BiPoly pow_y(int e);  // y^e
BiPoly pow_x(int e);  // x^e

/* Decomposition A = y^0 F[x] + ... + y^(n-2) F[x] + y^(n-1) F[x,y].
 * low[i] holds the pure-x coefficient polynomial of y^i; high is the
 * y^(n-1)-divisible remainder, stored undivided. */
struct YAdicSplit {
    std::vector<BiPoly> low;  // size n-1
    BiPoly high;

    BiPoly reassemble() const;
};

YAdicSplit y_adic_split(const BiPoly& p, int n);  // requires n >= 2

/* Grading: weight of y^i x^j is i*wy + j*wx; defaults give total degree. */
std::map<int, BiPoly> weight_components(const BiPoly& p, int wx = 1, int wy = 1);
std::optional<int> is_homogeneous(const BiPoly& p, int wx = 1, int wy = 1);

/* Graded monomial enumeration for matrix building. */
struct YConstraint {
    enum class Kind { any, le, ge };
    Kind kind = Kind::any;
    int bound = 0;

    static YConstraint all() { return {Kind::any, 0}; }
    static YConstraint y_exp_le(int k) { return {Kind::le, k}; }
    static YConstraint y_exp_ge(int k) { return {Kind::ge, k}; }
    bool admits(int y_exp) const;
};

/* Monomials of total degree w satisfying the constraint, in canonical
 * order (ascending y-exponent). Empty for w < 0. */
std::vector<Exp2> monomial_basis(int w, YConstraint c = YConstraint::all());

}  // namespace logpois
