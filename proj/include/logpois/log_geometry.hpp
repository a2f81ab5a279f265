#pragma once

#include <stdexcept>

#include "logpois/bipoly.hpp"

namespace logpois {

/* Thrown when an ordinary derivation does not preserve the ideal y^n A,
 * i.e. its dy-coefficient is not divisible by y. */
struct NotLogarithmic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Derivation logarithmic along I = y^n A, written in the free basis
 * d1 = dx, d2 = y*dy:  a*d1 + b*d2. */
struct LogDerivation {
    BiPoly a, b;
    int n = 2;

    LogDerivation operator-() const { return {-a, -b, n}; }
    friend LogDerivation operator+(const LogDerivation& u, const LogDerivation& v);
    friend LogDerivation operator*(const BiPoly& c, const LogDerivation& d) {
        return {c * d.a, c * d.b, d.n};
    }
    bool operator==(const LogDerivation&) const = default;
};

/* Logarithmic 1-form in the dual basis w1 = dx, w2 = dy/y:  a*w1 + b*w2. */
struct LogOneForm {
    BiPoly a, b;
    int n = 2;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    LogOneForm operator-() const { return {-a, -b, n}; }
    friend LogOneForm operator+(const LogOneForm& u, const LogOneForm& v);
    friend LogOneForm operator-(const LogOneForm& u, const LogOneForm& v);
    friend LogOneForm operator*(const BiPoly& c, const LogOneForm& w) {
        return {c * w.a, c * w.b, w.n};
    }
    bool operator==(const LogOneForm&) const = default;
};

inline LogOneForm omega1(int n) { return {BiPoly::constant(1), BiPoly(), n}; }
inline LogOneForm omega2(int n) { return {BiPoly(), BiPoly::constant(1), n}; }

/* Ordinary derivation f*dx + g*dy. */
struct OrdinaryDerivation {
    BiPoly f, g;
    bool operator==(const OrdinaryDerivation&) const = default;
};

/* derivation action: a*dx(f) + b*(y dy)(f); satisfies Leibniz */
BiPoly apply(const LogDerivation& d, const BiPoly& f);

/* bilinear pairing with <d_i, w_j> = delta_ij */
BiPoly pairing(const LogDerivation& d, const LogOneForm& w);

/* logarithmic Hamiltonian map of pi = y^n dx^dy:
 * H~(a w1 + b w2) = y^(n-1) (a d2 - b d1) */
LogDerivation ham_tilde(const LogOneForm& w);

/* classical Hamiltonian derivation H_f = phi (dx f dy - dy f dx) */
OrdinaryDerivation ham_classical(const BiPoly& f, const BiPoly& phi);

/* rewrite f*dx + g*dy as f*d1 + (g/y)*d2; NotLogarithmic when y does not divide g */
LogDerivation to_log(const OrdinaryDerivation& d, int n);

/* Koszul bracket on basis forms: [w1,w1] = [w2,w2] = 0,
 * [w1,w2] = (n-1) y^(n-1) w2 = -[w2,w1].  Indices are 1-based. */
LogOneForm koszul_base(int i, int j, int n);

/* Koszul bracket extended by F-bilinearity and the Leibniz/compatibility
 * rule  [a wi, c wj] = ac [wi,wj] + a H~(wi)(c) wj - c H~(wj)(a) wi. */
LogOneForm koszul(const LogOneForm& alpha, const LogOneForm& beta);

/* logarithmic differential  d~f = dx(f) w1 + (y dy f) w2 */
LogOneForm d_tilde(const BiPoly& f, int n);

/* Schouten bracket [pi, f]_SN for pi = y^n dx^dy, computed through the
 * contraction i_df(pi) and to_log, independently of ham_tilde o d_tilde.
 * Equals -ham_tilde(d_tilde(f)) and the degree-1 differential. */
LogDerivation sn_bracket_pi_f(const BiPoly& f, int n);

}  // namespace logpois
