#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logpois/bipoly.hpp"
#include "logpois/log_geometry.hpp"

namespace logpois {

struct NotHomogeneous : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Which cochain complex: the classical one for a Poisson structure
 * {x,y} = phi, or the logarithmic one for phi = y^n along I = y^n A. */
class ComplexSpec {
public:
    enum class Variant { classical, logarithmic };

    static ComplexSpec logarithmic(int n);
    static ComplexSpec classical(BiPoly phi);
    static ComplexSpec classical_power(int n);  // phi = y^n

    Variant variant() const { return variant_; }
    bool is_log() const { return variant_ == Variant::logarithmic; }
    /* divisor exponent; 0 for a classical phi that is not y^n */
    int n() const { return n_; }
    const BiPoly& phi() const { return phi_; }
    std::string variant_name() const { return is_log() ? "log" : "classical"; }

    bool operator==(const ComplexSpec&) const = default;

private:
    Variant variant_ = Variant::logarithmic;
    int n_ = 2;
    BiPoly phi_;
};

/* Element of C^0 = A, C^1 = A^2 or C^2 = A. Degree-1 coordinates are
 * (d1, d2) components in the logarithmic variant and (dx, dy) components
 * in the classical one; the degree-2 coordinate is against the top wedge. */
struct CochainElement {
    ComplexSpec spec;
    int degree = 0;
    BiPoly a, b;  // degrees 0 and 2 use only a

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool operator==(const CochainElement&) const = default;
};

CochainElement cochain0(const ComplexSpec& spec, BiPoly f);
CochainElement cochain1(const ComplexSpec& spec, BiPoly a, BiPoly b);
CochainElement cochain2(const ComplexSpec& spec, BiPoly a);

/* closed-form differentials:
 * log:        d1(f) = (y^n dy f, -y^(n-1) dx f)
 *             d2(a1,a2) = y^(n-1)(dx a1 + y dy a2) - (n-1) y^(n-1) a2
 * classical:  d1(f) = (phi dy f, -phi dx f)
 *             d2(a1,a2) = phi (dx a1 + dy a2) - a1 dx phi - a2 dy phi */
std::pair<BiPoly, BiPoly> d1(const ComplexSpec& spec, const BiPoly& f);
BiPoly d2(const ComplexSpec& spec, const BiPoly& a1, const BiPoly& a2);
BiPoly d2(const ComplexSpec& spec, const std::pair<BiPoly, BiPoly>& a);

/* The alternating-sum differential evaluated literally from its defining
 * formula, through ham_tilde / koszul / the basis pairing. Logarithmic
 * variant only, degrees 0 and 1; serves as the independent oracle for the
 * closed forms above. */
CochainElement d_generic(const ComplexSpec& spec, const CochainElement& c);

/* Grading. Slot weights: log d1 -> -1, d2 -> 0, d1^d2 -> -1;
 * classical dx, dy -> -1, dx^dy -> -2. Both differentials are then
 * homogeneous of shift (deg phi - 2), i.e. n-2 here. */
int weight_shift(const ComplexSpec& spec);  // NotHomogeneous for inhomogeneous phi
int slot_weight(const ComplexSpec& spec, int degree, int slot);
std::optional<int> element_weight(const CochainElement& c);  // nullopt if mixed or zero

struct ComplexCheck {
    bool ok = true;
    std::string counterexample;
};

/* d2 o d1 == 0 on all graded monomials up to max_weight and on the given
 * sample polynomials */
ComplexCheck check_complex(const ComplexSpec& spec, int max_weight,
                           const std::vector<BiPoly>& samples = {});

std::string cochain_to_string(const CochainElement& c);

}  // namespace logpois
