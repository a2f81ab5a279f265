#include "logpois/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace logpois {

std::vector<int> slot_coeff_degrees(const ComplexSpec& spec, int k, int w) {
    switch (k) {
        case 0: return {w};
        case 1: return spec.is_log() ? std::vector<int>{w + 1, w} : std::vector<int>{w + 1, w + 1};
        case 2: return {spec.is_log() ? w + 1 : w + 2};
        default: return {};
    }
}

std::vector<CochainElement> graded_basis(const ComplexSpec& spec, int k, int w) {
    std::vector<CochainElement> basis;
    auto degrees = slot_coeff_degrees(spec, k, w);
    for (std::size_t slot = 0; slot < degrees.size(); ++slot) {
        for (Exp2 e : monomial_basis(degrees[slot])) {
            BiPoly m = BiPoly::monomial(e.i, e.j);
            if (k == 1)
                basis.push_back(slot == 0 ? cochain1(spec, m, BiPoly())
                                          : cochain1(spec, BiPoly(), m));
            else if (k == 0)
                basis.push_back(cochain0(spec, m));
            else
                basis.push_back(cochain2(spec, m));
        }
    }
    return basis;
}

int graded_dim(const ComplexSpec& spec, int k, int w) {
    int dim = 0;
    for (int d : slot_coeff_degrees(spec, k, w))
        if (d >= 0) dim += d + 1;
    return dim;
}

namespace {

/* index of monomial e inside the slot block; slot blocks are laid out in
 * slot order, each of size (degree + 1), indexed by y-exponent */
int basis_index(const std::vector<int>& degrees, int slot, Exp2 e) {
    int offset = 0;
    for (int s = 0; s < slot; ++s)
        if (degrees[std::size_t(s)] >= 0) offset += degrees[std::size_t(s)] + 1;
    if (e.total() != degrees[std::size_t(slot)])
        throw std::logic_error("graded component mismatch (inhomogeneous differential?)");
    return offset + e.i;
}

void scatter(const ComplexSpec& spec, int k, int w, const BiPoly& p, int slot, int col,
             RatMatrix& m) {
    auto degrees = slot_coeff_degrees(spec, k, w);
    for (const auto& [e, c] : p.terms()) m.add(basis_index(degrees, slot, e), col, c);
}

SparseVec pair_to_vector(const ComplexSpec& spec, int w, const std::pair<BiPoly, BiPoly>& a) {
    return cochain_to_vector(spec, 1, w, cochain1(spec, a.first, a.second));
}

}  // namespace

SparseVec cochain_to_vector(const ComplexSpec& spec, int k, int w, const CochainElement& c) {
    auto degrees = slot_coeff_degrees(spec, k, w);
    SparseVec v;
    v.dim = graded_dim(spec, k, w);
    for (const auto& [e, coeff] : c.a.terms()) v.add(basis_index(degrees, 0, e), coeff);
    if (k == 1)
        for (const auto& [e, coeff] : c.b.terms()) v.add(basis_index(degrees, 1, e), coeff);
    return v;
}

CochainElement vector_to_cochain(const ComplexSpec& spec, int k, int w, const SparseVec& v) {
    auto degrees = slot_coeff_degrees(spec, k, w);
    BiPoly comps[2];
    for (const auto& [index, coeff] : v.entries) {
        int offset = 0;
        for (std::size_t slot = 0; slot < degrees.size(); ++slot) {
            int size = degrees[slot] >= 0 ? degrees[slot] + 1 : 0;
            if (index < offset + size) {
                int i = index - offset;
                comps[slot].add_term({i, degrees[slot] - i}, coeff);
                break;
            }
            offset += size;
        }
    }
    if (k == 0) return cochain0(spec, std::move(comps[0]));
    if (k == 1) return cochain1(spec, std::move(comps[0]), std::move(comps[1]));
    return cochain2(spec, std::move(comps[0]));
}

RatMatrix matrix_of_d(const ComplexSpec& spec, int k, int w) {
    if (k != 0 && k != 1) throw std::invalid_argument("matrix_of_d: k must be 0 or 1");
    int shift = weight_shift(spec);
    int wt = w + shift;
    RatMatrix m(graded_dim(spec, k + 1, wt), graded_dim(spec, k, w));
    auto basis = graded_basis(spec, k, w);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        if (k == 0) {
            auto [g1, g2] = d1(spec, basis[col].a);
            scatter(spec, 1, wt, g1, 0, int(col), m);
            scatter(spec, 1, wt, g2, 1, int(col), m);
        } else {
            scatter(spec, 2, wt, d2(spec, basis[col].a, basis[col].b), 0, int(col), m);
        }
    }
    return m;
}

int predicted_log_dims(int n, int k, int w) {
    switch (k) {
        case 0: return w == 0 ? 1 : 0;
        case 1: {
            int mu_classes = w >= 0 ? std::min(n - 1, w + 1) : 0;
            int line_classes = (-1 <= w && w <= n - 2) ? 1 : 0;
            return mu_classes + line_classes;
        }
        case 2: return w >= -1 ? std::min(n - 1, w + 2) : 0;
        default: return 0;
    }
}

CohomologyReport cohomology_at(const ComplexSpec& spec, int k, int w, bool want_reps) {
    CohomologyReport r;
    r.variant = spec.variant_name();
    r.n = spec.n();
    r.degree = k;
    r.weight = w;
    if (spec.n() >= 2)
        r.predicted = spec.is_log() ? predicted_log_dims(spec.n(), k, w)
                                    : predicted_log_dims(spec.n(), k, w + alignment_shift(k));
    if (k > 2) {
        r.match = !r.predicted || *r.predicted == 0;
        return r;
    }
    int shift = weight_shift(spec);

    KernelBasis cocycles;
    if (k < 2) {
        cocycles = kernel(matrix_of_d(spec, k, w));
    } else {
        int dim = graded_dim(spec, 2, w);
        for (int i = 0; i < dim; ++i) cocycles.vectors.push_back(SparseVec::unit(dim, i));
    }
    r.dim_z = cocycles.dimension();

    std::vector<SparseVec> image;
    if (k >= 1) image = matrix_of_d(spec, k - 1, w - shift).columns();

    r.dim_h = quotient_dim(cocycles, image);  // throws ImageNotInKernel on a broken d
    r.dim_b = r.dim_z - r.dim_h;
    r.match = !r.predicted || *r.predicted == r.dim_h;
    if (want_reps)
        for (const auto& v : complement_basis(cocycles, image))
            r.representatives.push_back(vector_to_cochain(spec, k, w, v));
    return r;
}

std::pair<BiPoly, BiPoly> mu(const BiPoly& b, int n) {
    return {antiderivative_x(Rational(n - 1) * b - euler_y(b)), b};
}

StructureCheck verify_z2_structure(int n, const WeightWindow& window) {
    StructureCheck check{"z2_structure(n=" + std::to_string(n) + ")"};
    ComplexSpec spec = ComplexSpec::logarithmic(n);
    for (int w = window.min_w; w <= window.max_w && check.pass; ++w) {
        std::ostringstream at;
        at << "n=" << n << " w=" << w << ": ";

        // the four summands' graded generators
        std::vector<std::pair<BiPoly, BiPoly>> gens;
        for (Exp2 e : monomial_basis(w)) gens.push_back(mu(BiPoly::monomial(e.i, e.j), n));
        if (w + 1 >= 0) gens.emplace_back(pow_y(w + 1), BiPoly());

        for (const auto& g : gens) {
            if (!d2(spec, g).is_zero())
                check.fail(at.str() + "generator (" + g.first.to_string() + ", " +
                           g.second.to_string() + ") is not a cocycle");
        }
        if (!check.pass) break;

        IncrementalSpan span(graded_dim(spec, 1, w));
        for (const auto& g : gens)
            if (!span.insert(pair_to_vector(spec, w, g)))
                check.fail(at.str() + "summand generators are dependent");
        int dim_z = kernel(matrix_of_d(spec, 1, w)).dimension();
        if (span.rank() != int(gens.size()) || int(gens.size()) != dim_z)
            check.fail(at.str() + "generator count " + std::to_string(gens.size()) +
                       " does not span Z^2 of dim " + std::to_string(dim_z));

        // mu is a monomorphism on the graded piece
        if (w >= 0) {
            RatMatrix mu_matrix(graded_dim(spec, 1, w), w + 1);
            int col = 0;
            for (Exp2 e : monomial_basis(w)) {
                auto v = pair_to_vector(spec, w, mu(BiPoly::monomial(e.i, e.j), n));
                for (const auto& [row, val] : v.entries) mu_matrix.add(row, col, val);
                ++col;
            }
            if (kernel(mu_matrix).dimension() != 0) check.fail(at.str() + "mu has a kernel");
        }

        // coboundary obstruction: d1 images are divisible by y^n / y^(n-1)
        for (Exp2 e : monomial_basis(w - (n - 2))) {
            auto [psi1, psi2] = d1(spec, BiPoly::monomial(e.i, e.j));
            if (!divisible_by_y_pow(psi1, n) || !divisible_by_y_pow(psi2, n - 1))
                check.fail(at.str() + "image divisibility obstruction violated at y^" +
                           std::to_string(e.i) + "x^" + std::to_string(e.j));
        }

        // explicit coboundary preimages
        if (w + 1 >= n) {
            BiPoly b1 = pow_y(w + 1 - n);
            auto image = d1(spec, antiderivative_y(b1));
            if (image.first != pow_y(n) * b1 || !image.second.is_zero())
                check.fail(at.str() + "preimage integral_y(b1) misses (y^n b1, 0)");
        }
        for (Exp2 e : monomial_basis(w - (n - 1))) {
            BiPoly m = BiPoly::monomial(e.i, e.j);
            auto target = mu(pow_y(n - 1) * m, n);
            auto image = d1(spec, -antiderivative_x(m));
            if (image != target)
                check.fail(at.str() + "preimage -integral_x(b) misses mu(y^(n-1) b) for b = " +
                           m.to_string());
        }
    }
    return check;
}

StructureCheck verify_b3_structure(int n, const WeightWindow& window) {
    StructureCheck check{"b3_structure(n=" + std::to_string(n) + ")"};
    ComplexSpec spec = ComplexSpec::logarithmic(n);
    for (int w = window.min_w; w <= window.max_w && check.pass; ++w) {
        std::ostringstream at;
        at << "n=" << n << " w=" << w << ": ";
        auto image = matrix_of_d(spec, 1, w - (n - 2)).columns();
        int low_count = 0;
        for (Exp2 e : monomial_basis(w + 1)) {
            BiPoly m = BiPoly::monomial(e.i, e.j);
            if (e.i <= n - 2) {
                ++low_count;
                auto v = cochain_to_vector(spec, 2, w, cochain2(spec, m));
                if (membership(v, image))
                    check.fail(at.str() + m.to_string() + " must not be a coboundary");
            } else {
                BiPoly b = divide_by_y_pow(m, n - 1);
                BiPoly a = antiderivative_x(Rational(n) * b - euler_y(b));
                if (d2(spec, a, b) != m)
                    check.fail(at.str() + "explicit d2 preimage misses " + m.to_string());
            }
        }
        // the direct sum fills C^2: rank d2 + low classes = dim C^2
        IncrementalSpan span(graded_dim(spec, 2, w));
        for (const auto& col : image) span.insert(col);
        if (span.rank() + low_count != graded_dim(spec, 2, w))
            check.fail(at.str() + "B^3 and the low classes do not fill C^2");
    }
    return check;
}

ComparisonReport compare_variants(int n, const WeightWindow& window) {
    ComparisonReport report;
    report.n = n;
    ComplexSpec cl = ComplexSpec::classical_power(n);
    ComplexSpec lg = ComplexSpec::logarithmic(n);
    for (int k = 0; k <= 2; ++k) {
        for (int w = window.min_w; w <= window.max_w; ++w) {
            ComparisonCell cell;
            cell.k = k;
            cell.w = w;
            cell.dim_classical = cohomology_at(cl, k, w, false).dim_h;
            cell.dim_log = cohomology_at(lg, k, w + alignment_shift(k), false).dim_h;
            cell.match = cell.dim_classical == cell.dim_log;
            report.totals_classical[std::size_t(k)] += cell.dim_classical;
            report.totals_log[std::size_t(k)] += cell.dim_log;
            report.cells_match = report.cells_match && cell.match;
            report.cells.push_back(cell);
        }
        report.totals_match = report.totals_match &&
                              report.totals_classical[std::size_t(k)] ==
                                  report.totals_log[std::size_t(k)];
    }
    return report;
}

}  // namespace logpois
