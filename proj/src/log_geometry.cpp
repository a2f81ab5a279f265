#include "logpois/log_geometry.hpp"

namespace logpois {

namespace {

void require_same_n(int n1, int n2) {
    if (n1 != n2) throw std::invalid_argument("mixed divisor contexts (different n)");
}

}  // namespace

LogDerivation operator+(const LogDerivation& u, const LogDerivation& v) {
    require_same_n(u.n, v.n);
    return {u.a + v.a, u.b + v.b, u.n};
}

LogOneForm operator+(const LogOneForm& u, const LogOneForm& v) {
    require_same_n(u.n, v.n);
    return {u.a + v.a, u.b + v.b, u.n};
}

LogOneForm operator-(const LogOneForm& u, const LogOneForm& v) {
    require_same_n(u.n, v.n);
    return {u.a - v.a, u.b - v.b, u.n};
}

BiPoly apply(const LogDerivation& d, const BiPoly& f) {
    return d.a * partial_x(f) + d.b * euler_y(f);
}

BiPoly pairing(const LogDerivation& d, const LogOneForm& w) {
    require_same_n(d.n, w.n);
    return d.a * w.a + d.b * w.b;
}

LogDerivation ham_tilde(const LogOneForm& w) {
    BiPoly yn1 = pow_y(w.n - 1);
    return {-(yn1 * w.b), yn1 * w.a, w.n};
}

OrdinaryDerivation ham_classical(const BiPoly& f, const BiPoly& phi) {
    return {-(phi * partial_y(f)), phi * partial_x(f)};
}

LogDerivation to_log(const OrdinaryDerivation& d, int n) {
    if (!divisible_by_y_pow(d.g, 1))
        throw NotLogarithmic("dy-coefficient not divisible by y: " + d.g.to_string());
    return {d.f, divide_by_y_pow(d.g, 1), n};
}

LogOneForm koszul_base(int i, int j, int n) {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::invalid_argument("koszul_base: index");
    if (i == j) return {BiPoly(), BiPoly(), n};
    BiPoly value = BiPoly::monomial(n - 1, 0, Rational(n - 1));
    return {BiPoly(), i == 1 ? value : -value, n};
}

LogOneForm koszul(const LogOneForm& alpha, const LogOneForm& beta) {
    require_same_n(alpha.n, beta.n);
    int n = alpha.n;
    const BiPoly* as[2] = {&alpha.a, &alpha.b};
    const BiPoly* cs[2] = {&beta.a, &beta.b};
    LogOneForm basis[2] = {omega1(n), omega2(n)};
    LogOneForm result{BiPoly(), BiPoly(), n};
    for (int i = 0; i < 2; ++i) {
        if (as[i]->is_zero()) continue;
        LogDerivation hi = ham_tilde(basis[i]);
        for (int j = 0; j < 2; ++j) {
            if (cs[j]->is_zero()) continue;
            LogDerivation hj = ham_tilde(basis[j]);
            result = result + (*as[i] * *cs[j]) * koszul_base(i + 1, j + 1, n);
            result = result + (*as[i] * apply(hi, *cs[j])) * basis[j];
            result = result - (*cs[j] * apply(hj, *as[i])) * basis[i];
        }
    }
    return result;
}

LogOneForm d_tilde(const BiPoly& f, int n) { return {partial_x(f), euler_y(f), n}; }

LogDerivation sn_bracket_pi_f(const BiPoly& f, int n) {
    OrdinaryDerivation contraction = ham_classical(f, pow_y(n));
    return -to_log(contraction, n);
}

}  // namespace logpois
