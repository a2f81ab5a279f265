#include "logpois/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace logpois {

BiPoly BiPoly::constant(const Rational& c) {
    BiPoly p;
    p.add_term({0, 0}, c);
    return p;
}

BiPoly BiPoly::monomial(int y_exp, int x_exp, const Rational& c) {
    if (y_exp < 0 || x_exp < 0) throw std::invalid_argument("monomial: negative exponent");
    BiPoly p;
    p.add_term({y_exp, x_exp}, c);
    return p;
}

Rational BiPoly::coeff(int y_exp, int x_exp) const {
    auto it = terms_.find({y_exp, x_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> BiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
}

int BiPoly::y_degree_min() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.i;  // term order is y-exponent major
}

void BiPoly::add_term(Exp2 e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
    return r;
}

BiPoly operator*(const Rational& c, const BiPoly& p) {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

BiPoly partial_x(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms())
        if (e.j > 0) r.add_term({e.i, e.j - 1}, Rational(e.j) * c);
    return r;
}

BiPoly partial_y(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms())
        if (e.i > 0) r.add_term({e.i - 1, e.j}, Rational(e.i) * c);
    return r;
}

BiPoly euler_y(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms())
        if (e.i > 0) r.add_term(e, Rational(e.i) * c);
    return r;
}

BiPoly antiderivative_x(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({e.i, e.j + 1}, c / Rational(e.j + 1));
    return r;
}

BiPoly antiderivative_y(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({e.i + 1, e.j}, c / Rational(e.i + 1));
    return r;
}

bool divisible_by_y_pow(const BiPoly& p, int k) {
    return p.is_zero() || p.y_degree_min() >= k;
}

BiPoly divide_by_y_pow(const BiPoly& p, int k) {
    if (!divisible_by_y_pow(p, k)) throw std::invalid_argument("divide_by_y_pow: not divisible");
    BiPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({e.i - k, e.j}, c);
    return r;
}

BiPoly pow_y(int e) { return BiPoly::monomial(e, 0); }
BiPoly pow_x(int e) { return BiPoly::monomial(0, e); }

BiPoly YAdicSplit::reassemble() const {
    BiPoly r;
    for (std::size_t i = 0; i < low.size(); ++i) r += BiPoly::monomial(int(i), 0) * low[i];
    r += high;
    return r;
}

YAdicSplit y_adic_split(const BiPoly& p, int n) {
    if (n < 2) throw std::invalid_argument("y_adic_split: n must be >= 2");
    YAdicSplit s;
    s.low.resize(std::size_t(n - 1));
    for (const auto& [e, c] : p.terms()) {
        if (e.i <= n - 2)
            s.low[std::size_t(e.i)].add_term({0, e.j}, c);
        else
            s.high.add_term(e, c);
    }
    return s;
}

std::map<int, BiPoly> weight_components(const BiPoly& p, int wx, int wy) {
    std::map<int, BiPoly> comps;
    for (const auto& [e, c] : p.terms()) comps[e.i * wy + e.j * wx].add_term(e, c);
    return comps;
}

std::optional<int> is_homogeneous(const BiPoly& p, int wx, int wy) {
    if (p.is_zero()) return std::nullopt;
    auto comps = weight_components(p, wx, wy);
    if (comps.size() != 1) return std::nullopt;
    return comps.begin()->first;
}

bool YConstraint::admits(int y_exp) const {
    switch (kind) {
        case Kind::any: return true;
        case Kind::le: return y_exp <= bound;
        case Kind::ge: return y_exp >= bound;
    }
    return false;
}

std::vector<Exp2> monomial_basis(int w, YConstraint c) {
    std::vector<Exp2> out;
    if (w < 0) return out;
    for (int i = 0; i <= w; ++i)
        if (c.admits(i)) out.push_back({i, w - i});
    return out;
}

namespace {

void render_monomial(std::ostringstream& os, Exp2 e, const Rational& coeff, bool leading) {
    Rational a = abs(coeff);
    if (!leading)
        os << (sgn(coeff) < 0 ? " - " : " + ");
    else if (sgn(coeff) < 0)
        os << "-";
    bool has_vars = e.i > 0 || e.j > 0;
    if (!has_vars) {
        os << a.get_str();
        return;
    }
    bool coeff_shown = a != 1;
    if (coeff_shown) os << a.get_str();
    if (e.j > 0) {
        if (coeff_shown) os << "*";
        os << "x";
        if (e.j > 1) os << "^" << e.j;
        coeff_shown = true;
    }
    if (e.i > 0) {
        if (coeff_shown) os << "*";
        os << "y";
        if (e.i > 1) os << "^" << e.i;
    }
}

}  // namespace

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    // render by descending total degree, then canonical (i, j) order
    std::vector<std::pair<Exp2, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return a.first.total() > b.first.total();
    });
    std::ostringstream os;
    bool leading = true;
    for (const auto& [e, c] : ts) {
        render_monomial(os, e, c, leading);
        leading = false;
    }
    return os.str();
}

}  // namespace logpois
