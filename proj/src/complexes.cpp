#include "logpois/complexes.hpp"

#include <sstream>

namespace logpois {

ComplexSpec ComplexSpec::logarithmic(int n) {
    if (n < 2) throw std::invalid_argument("logarithmic complex requires n >= 2");
    ComplexSpec s;
    s.variant_ = Variant::logarithmic;
    s.n_ = n;
    s.phi_ = pow_y(n);
    return s;
}

ComplexSpec ComplexSpec::classical(BiPoly phi) {
    ComplexSpec s;
    s.variant_ = Variant::classical;
    s.phi_ = std::move(phi);
    s.n_ = 0;
    // remember the divisor exponent when phi is exactly y^n, n >= 2
    if (s.phi_.term_count() == 1) {
        const auto& [e, c] = *s.phi_.terms().begin();
        if (e.j == 0 && e.i >= 2 && c == 1) s.n_ = e.i;
    }
    return s;
}

ComplexSpec ComplexSpec::classical_power(int n) {
    if (n < 2) throw std::invalid_argument("classical_power requires n >= 2");
    return classical(pow_y(n));
}

CochainElement cochain0(const ComplexSpec& spec, BiPoly f) {
    return {spec, 0, std::move(f), BiPoly()};
}

CochainElement cochain1(const ComplexSpec& spec, BiPoly a, BiPoly b) {
    return {spec, 1, std::move(a), std::move(b)};
}

CochainElement cochain2(const ComplexSpec& spec, BiPoly a) {
    return {spec, 2, std::move(a), BiPoly()};
}

std::pair<BiPoly, BiPoly> d1(const ComplexSpec& spec, const BiPoly& f) {
    if (spec.is_log()) {
        BiPoly yn1 = pow_y(spec.n() - 1);
        return {yn1 * euler_y(f), -(yn1 * partial_x(f))};
    }
    return {spec.phi() * partial_y(f), -(spec.phi() * partial_x(f))};
}

BiPoly d2(const ComplexSpec& spec, const BiPoly& a1, const BiPoly& a2) {
    if (spec.is_log()) {
        BiPoly yn1 = pow_y(spec.n() - 1);
        return yn1 * (partial_x(a1) + euler_y(a2)) - Rational(spec.n() - 1) * (yn1 * a2);
    }
    return spec.phi() * (partial_x(a1) + partial_y(a2)) - a1 * partial_x(spec.phi()) -
           a2 * partial_y(spec.phi());
}

BiPoly d2(const ComplexSpec& spec, const std::pair<BiPoly, BiPoly>& a) {
    return d2(spec, a.first, a.second);
}

CochainElement d_generic(const ComplexSpec& spec, const CochainElement& c) {
    if (!spec.is_log())
        throw std::invalid_argument("d_generic is defined for the logarithmic complex");
    if (c.degree >= 2) throw UnsupportedDegree("d_generic: C^3 = 0, degree must be 0 or 1");
    int n = spec.n();
    LogOneForm w1 = omega1(n), w2 = omega2(n);
    if (c.degree == 0) {
        // d f (w_i) = H~(w_i) f
        return cochain1(spec, apply(ham_tilde(w1), c.a), apply(ham_tilde(w2), c.a));
    }
    // d f (w1, w2) = H~(w1) f(w2) - H~(w2) f(w1) - f([w1, w2]),
    // with the functional view f(u w1 + v w2) = u a + v b from the pairing
    LogOneForm bracket = koszul(w1, w2);
    BiPoly f_of_bracket = bracket.a * c.a + bracket.b * c.b;
    BiPoly value = apply(ham_tilde(w1), c.b) - apply(ham_tilde(w2), c.a) - f_of_bracket;
    return cochain2(spec, std::move(value));
}

int weight_shift(const ComplexSpec& spec) {
    if (spec.is_log()) return spec.n() - 2;
    auto m = is_homogeneous(spec.phi());
    if (!m) throw NotHomogeneous("classical phi is not weighted-homogeneous: " +
                                 spec.phi().to_string());
    return *m - 2;
}

int slot_weight(const ComplexSpec& spec, int degree, int slot) {
    if (degree == 0) return 0;
    if (spec.is_log()) {
        if (degree == 1) return slot == 0 ? -1 : 0;
        return -1;  // d1 ^ d2
    }
    return degree == 1 ? -1 : -2;  // dx, dy, dx ^ dy
}

std::optional<int> element_weight(const CochainElement& c) {
    std::optional<int> w;
    auto account = [&](const BiPoly& p, int slot) -> bool {
        if (p.is_zero()) return true;
        auto d = is_homogeneous(p);
        if (!d) return false;
        int slot_w = *d + slot_weight(c.spec, c.degree, slot);
        if (w && *w != slot_w) return false;
        w = slot_w;
        return true;
    };
    if (!account(c.a, 0)) return std::nullopt;
    if (c.degree == 1 && !account(c.b, 1)) return std::nullopt;
    return w;
}

ComplexCheck check_complex(const ComplexSpec& spec, int max_weight,
                           const std::vector<BiPoly>& samples) {
    auto violation = [&](const BiPoly& f) -> std::optional<std::string> {
        BiPoly composite = d2(spec, d1(spec, f));
        if (composite.is_zero()) return std::nullopt;
        std::ostringstream os;
        os << "d2(d1(f)) != 0 for f = " << f.to_string() << ": " << composite.to_string();
        return os.str();
    };
    for (int w = 0; w <= max_weight; ++w)
        for (Exp2 e : monomial_basis(w))
            if (auto bad = violation(BiPoly::monomial(e.i, e.j))) return {false, *bad};
    for (const BiPoly& f : samples)
        if (auto bad = violation(f)) return {false, *bad};
    return {};
}

namespace {

const char* slot_symbol(const ComplexSpec& spec, int degree, int slot) {
    if (spec.is_log()) {
        if (degree == 1) return slot == 0 ? "δ¹" : "δ²";
        return "δ¹∧δ²";
    }
    if (degree == 1) return slot == 0 ? "∂x" : "∂y";
    return "∂x∧∂y";
}

void append_component(std::ostringstream& os, const BiPoly& p, const char* symbol,
                      bool& first) {
    if (p.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    if (p == BiPoly::constant(1)) {
        os << symbol;
        return;
    }
    std::string text = p.to_string();
    if (p.term_count() > 1)
        os << "(" << text << ")·" << symbol;
    else
        os << text << "·" << symbol;
}

}  // namespace

std::string cochain_to_string(const CochainElement& c) {
    if (c.degree == 0) return c.a.to_string();
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    append_component(os, c.a, slot_symbol(c.spec, c.degree, 0), first);
    if (c.degree == 1) append_component(os, c.b, slot_symbol(c.spec, c.degree, 1), first);
    return os.str();
}

}  // namespace logpois
