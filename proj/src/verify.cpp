#include "logpois/verify.hpp"

#include <sstream>

#include "logpois/poly_parse.hpp"
#include "logpois/randgen.hpp"

namespace logpois {

namespace {

SplitMix64 suite_rng(const VerifyOptions& opts, int n, std::uint64_t tag) {
    return SplitMix64(opts.seed * 0x9e37u + std::uint64_t(n) * 0x85ebu + tag);
}

std::string form_to_string(const LogOneForm& w) {
    return "(" + w.a.to_string() + ")*w1 + (" + w.b.to_string() + ")*w2";
}

LogOneForm random_form(SplitMix64& rng, int n, int deg_cap) {
    return {random_poly(rng, deg_cap), random_poly(rng, deg_cap), n};
}

BiPoly d2_hooked(const ComplexSpec& spec, const std::pair<BiPoly, BiPoly>& a,
                 const VerifyOptions& opts) {
    BiPoly value = d2(spec, a);
    if (opts.corrupt_d2 && spec.is_log()) value += pow_y(spec.n() - 1) * a.first;
    return value;
}

}  // namespace

SuiteResult suite_complex_dd(int n, const VerifyOptions& opts) {
    SuiteResult r{"complex_dd(n=" + std::to_string(n) + ")"};
    for (ComplexSpec spec : {ComplexSpec::logarithmic(n), ComplexSpec::classical_power(n)}) {
        for (int w = 0; w <= 30 && r.pass; ++w) {
            for (Exp2 e : monomial_basis(w)) {
                BiPoly f = BiPoly::monomial(e.i, e.j);
                BiPoly composite = d2_hooked(spec, d1(spec, f), opts);
                if (!composite.is_zero()) {
                    r.pass = false;
                    r.counterexample = spec.variant_name() + ": d2(d1(" + f.to_string() +
                                       ")) = " + composite.to_string();
                    break;
                }
            }
        }
    }
    return r;
}

SuiteResult suite_complex_dd_general_phi(const VerifyOptions& opts) {
    SuiteResult r{"complex_dd_general_phi"};
    SplitMix64 rng = suite_rng(opts, 0, 0xdd);
    for (const char* phi_text : {"y^2", "x+y^2", "x^2*y-1"}) {
        ComplexSpec spec = ComplexSpec::classical(parse_poly(phi_text));
        for (int i = 0; i < 200 && r.pass; ++i) {
            BiPoly f = random_poly(rng, 6);
            BiPoly composite = d2(spec, d1(spec, f));
            if (!composite.is_zero()) {
                r.pass = false;
                r.counterexample = std::string("phi = ") + phi_text + ", f = " + f.to_string() +
                                   ": d2(d1(f)) = " + composite.to_string();
            }
        }
    }
    return r;
}

SuiteResult suite_oracle_generic(int n, const VerifyOptions& opts) {
    SuiteResult r{"oracle_generic(n=" + std::to_string(n) + ")"};
    ComplexSpec spec = ComplexSpec::logarithmic(n);
    SplitMix64 rng = suite_rng(opts, n, 0x0e);
    for (int i = 0; i < 200 && r.pass; ++i) {
        BiPoly f = random_poly(rng, 6);
        auto closed = d1(spec, f);
        CochainElement generic = d_generic(spec, cochain0(spec, f));
        if (generic.a != closed.first || generic.b != closed.second) {
            r.pass = false;
            r.counterexample = "degree 0, f = " + f.to_string();
        }
    }
    for (int i = 0; i < 200 && r.pass; ++i) {
        BiPoly a1 = random_poly(rng, 6), a2 = random_poly(rng, 6);
        BiPoly closed = d2(spec, a1, a2);
        CochainElement generic = d_generic(spec, cochain1(spec, a1, a2));
        if (generic.a != closed) {
            r.pass = false;
            r.counterexample = "degree 1, (" + a1.to_string() + ", " + a2.to_string() + ")";
        }
    }
    return r;
}

SuiteResult suite_koszul(int n, const VerifyOptions& opts) {
    SuiteResult r{"koszul_bracket(n=" + std::to_string(n) + ")"};
    SplitMix64 rng = suite_rng(opts, n, 0x05);

    // base values against the d((1/y){x,y}) = d~(y^(n-1)) derivation
    LogOneForm expected = d_tilde(pow_y(n - 1), n);
    if (!koszul_base(1, 1, n).is_zero() || !koszul_base(2, 2, n).is_zero() ||
        koszul_base(1, 2, n) != expected || koszul_base(2, 1, n) != -expected) {
        r.pass = false;
        r.counterexample = "base bracket values disagree with d~(y^(n-1))";
        return r;
    }
    if (koszul(omega1(n), omega2(n)) != expected) {
        r.pass = false;
        r.counterexample = "[w1, w2] != (n-1) y^(n-1) w2";
        return r;
    }

    for (int i = 0; i < 200 && r.pass; ++i) {
        LogOneForm alpha = random_form(rng, n, 5), beta = random_form(rng, n, 5);
        if (!(koszul(alpha, beta) + koszul(beta, alpha)).is_zero()) {
            r.pass = false;
            r.counterexample =
                "antisymmetry: alpha = " + form_to_string(alpha) + ", beta = " + form_to_string(beta);
        }
    }
    for (int i = 0; i < 100 && r.pass; ++i) {
        LogOneForm a = random_form(rng, n, 4), b = random_form(rng, n, 4),
                   c = random_form(rng, n, 4);
        LogOneForm jac = koszul(a, koszul(b, c)) + koszul(b, koszul(c, a)) +
                         koszul(c, koszul(a, b));
        if (!jac.is_zero()) {
            r.pass = false;
            r.counterexample = "jacobi: " + form_to_string(a) + "; " + form_to_string(b) + "; " +
                               form_to_string(c);
        }
    }
    // compatibility [wi, a wj] = H~(wi)(a) wj + a [wi, wj] on monomials up to degree 6
    LogOneForm basis[2] = {omega1(n), omega2(n)};
    for (int w = 0; w <= 6 && r.pass; ++w) {
        for (Exp2 e : monomial_basis(w)) {
            BiPoly m = BiPoly::monomial(e.i, e.j);
            for (int i = 0; i < 2 && r.pass; ++i)
                for (int j = 0; j < 2; ++j) {
                    LogOneForm lhs = koszul(basis[i], m * basis[j]);
                    LogOneForm rhs = apply(ham_tilde(basis[i]), m) * basis[j] +
                                     m * koszul_base(i + 1, j + 1, n);
                    if (lhs != rhs) {
                        r.pass = false;
                        r.counterexample = "compatibility at a = " + m.to_string() + ", (i,j) = (" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                        break;
                    }
                }
        }
    }
    return r;
}

SuiteResult suite_schouten(int n, const VerifyOptions& opts) {
    SuiteResult r{"schouten_identity(n=" + std::to_string(n) + ")"};
    ComplexSpec spec = ComplexSpec::logarithmic(n);
    SplitMix64 rng = suite_rng(opts, n, 0x5c);
    for (int i = 0; i < 100 && r.pass; ++i) {
        BiPoly f = random_poly(rng, 6);
        LogDerivation sn = sn_bracket_pi_f(f, n);
        LogDerivation via_ham = -ham_tilde(d_tilde(f, n));
        auto [g1, g2] = d1(spec, f);
        if (sn != via_ham || sn.a != g1 || sn.b != g2) {
            r.pass = false;
            r.counterexample = "f = " + f.to_string();
        }
    }
    return r;
}

SuiteResult suite_z2_structure(int n, const VerifyOptions& opts) {
    WeightWindow clamped{opts.window.min_w, std::min(opts.window.max_w, 20)};
    StructureCheck check = verify_z2_structure(n, clamped);
    return {check.name, check.pass, check.counterexample};
}

SuiteResult suite_b3_structure(int n, const VerifyOptions& opts) {
    StructureCheck check = verify_b3_structure(n, opts.window);
    return {check.name, check.pass, check.counterexample};
}

SuiteResult suite_dims_predicted(int n, const VerifyOptions& opts) {
    SuiteResult r{"dims_predicted(n=" + std::to_string(n) + ")"};
    ComplexSpec spec = ComplexSpec::logarithmic(n);
    for (int k = 0; k <= 3 && r.pass; ++k) {
        for (int w = opts.window.min_w; w <= opts.window.max_w; ++w) {
            CohomologyReport rep = cohomology_at(spec, k, w);
            std::ostringstream at;
            at << "k=" << k << " w=" << w << ": ";
            if (!rep.match) {
                r.pass = false;
                r.counterexample = at.str() + "dim H = " + std::to_string(rep.dim_h) +
                                   ", predicted " + std::to_string(*rep.predicted);
                break;
            }
            if (int(rep.representatives.size()) != rep.dim_h) {
                r.pass = false;
                r.counterexample = at.str() + "representative count mismatch";
                break;
            }
            if (k == 0 && rep.dim_z != (w == 0 ? 1 : 0)) {
                r.pass = false;
                r.counterexample = at.str() + "Ker d1 is not the constants";
                break;
            }
            if (k > 2) continue;
            // every representative is a cocycle and not a coboundary
            std::vector<SparseVec> image;
            if (k >= 1) image = matrix_of_d(spec, k - 1, w - (n - 2)).columns();
            RatMatrix out;
            if (k < 2) out = matrix_of_d(spec, k, w);
            for (const auto& rep_elem : rep.representatives) {
                SparseVec v = cochain_to_vector(spec, k, w, rep_elem);
                if (k < 2 && !out.apply(v).is_zero()) {
                    r.pass = false;
                    r.counterexample = at.str() + cochain_to_string(rep_elem) + " is not a cocycle";
                    break;
                }
                if (membership(v, image)) {
                    r.pass = false;
                    r.counterexample = at.str() + cochain_to_string(rep_elem) + " is a coboundary";
                    break;
                }
            }
        }
    }
    return r;
}

SuiteResult suite_h1_representatives(int n, const VerifyOptions& opts) {
    SuiteResult r{"h1_representatives(n=" + std::to_string(n) + ")"};
    ComplexSpec spec = ComplexSpec::logarithmic(n);
    for (int w = opts.window.min_w; w <= opts.window.max_w && r.pass; ++w) {
        std::ostringstream at;
        at << "n=" << n << " w=" << w << ": ";
        // the closed-form families: mu(y^i x^j) for i <= n-2, and y^k d1 for k <= n-1
        std::vector<std::pair<BiPoly, BiPoly>> family;
        for (Exp2 e : monomial_basis(w, YConstraint::y_exp_le(n - 2)))
            family.push_back(mu(BiPoly::monomial(e.i, e.j), n));
        if (0 <= w + 1 && w + 1 <= n - 1) family.emplace_back(pow_y(w + 1), BiPoly());

        auto image = matrix_of_d(spec, 0, w - (n - 2)).columns();
        IncrementalSpan modulo_b(graded_dim(spec, 1, w));
        for (const auto& col : image) modulo_b.insert(col);
        int image_rank = modulo_b.rank();

        for (const auto& g : family) {
            if (!d2(spec, g).is_zero()) {
                r.pass = false;
                r.counterexample = at.str() + "family member not a cocycle";
                break;
            }
            SparseVec v = cochain_to_vector(spec, 1, w, cochain1(spec, g.first, g.second));
            if (membership(v, image)) {
                r.pass = false;
                r.counterexample = at.str() + "family member (" + g.first.to_string() + ", " +
                                   g.second.to_string() + ") is a coboundary";
                break;
            }
            if (!modulo_b.insert(v)) {
                r.pass = false;
                r.counterexample = at.str() + "family dependent modulo B^2";
                break;
            }
        }
        if (!r.pass) break;
        int dim_z = kernel(matrix_of_d(spec, 1, w)).dimension();
        bool spans = modulo_b.rank() == dim_z &&
                     modulo_b.rank() == image_rank + int(family.size());
        if (!spans) {
            r.pass = false;
            r.counterexample = at.str() + "family does not span H^1 (family " +
                               std::to_string(family.size()) + ", dim Z " +
                               std::to_string(dim_z) + ", rank B " + std::to_string(image_rank) +
                               ")";
        }
        if (int(family.size()) != predicted_log_dims(n, 1, w)) {
            r.pass = false;
            r.counterexample = at.str() + "family size differs from the closed form";
        }
    }
    return r;
}

SuiteResult suite_classical_log_cells(int n, const VerifyOptions& opts) {
    SuiteResult r{"classical_log_cells(n=" + std::to_string(n) + ")"};
    ComparisonReport report = compare_variants(n, opts.window);
    if (!report.cells_match) {
        r.pass = false;
        for (const auto& cell : report.cells)
            if (!cell.match) {
                std::ostringstream os;
                os << "k=" << cell.k << " w=" << cell.w << ": classical " << cell.dim_classical
                   << " vs log " << cell.dim_log << " (grading-refinement issue)";
                r.counterexample = os.str();
                break;
            }
    }
    return r;
}

SuiteResult suite_classical_log_totals(int n, const VerifyOptions& opts) {
    SuiteResult r{"classical_log_totals(n=" + std::to_string(n) + ")"};
    ComparisonReport report = compare_variants(n, opts.window);
    if (!report.totals_match) {
        r.pass = false;
        std::ostringstream os;
        for (int k = 0; k <= 2; ++k)
            os << "k=" << k << ": " << report.totals_classical[std::size_t(k)] << "/"
               << report.totals_log[std::size_t(k)] << " ";
        r.counterexample = os.str();
    }
    return r;
}

SuiteResult suite_complex_dd_custom_phi(const BiPoly& phi, const std::string& phi_text,
                                        const VerifyOptions& opts) {
    SuiteResult r{"complex_dd_phi(" + phi_text + ")"};
    ComplexSpec spec = ComplexSpec::classical(phi);
    SplitMix64 rng = suite_rng(opts, 0, 0xcd);
    for (int i = 0; i < 200 && r.pass; ++i) {
        BiPoly f = random_poly(rng, 6);
        BiPoly composite = d2(spec, d1(spec, f));
        if (!composite.is_zero()) {
            r.pass = false;
            r.counterexample = "f = " + f.to_string() + ": d2(d1(f)) = " + composite.to_string();
        }
    }
    return r;
}

std::vector<std::function<SuiteResult()>> suite_tasks(const std::vector<int>& ns,
                                                      const VerifyOptions& opts) {
    std::vector<std::function<SuiteResult()>> tasks;
    for (int n : ns) {
        tasks.emplace_back([n, opts] { return suite_complex_dd(n, opts); });
        tasks.emplace_back([n, opts] { return suite_oracle_generic(n, opts); });
        tasks.emplace_back([n, opts] { return suite_koszul(n, opts); });
        tasks.emplace_back([n, opts] { return suite_schouten(n, opts); });
        tasks.emplace_back([n, opts] { return suite_z2_structure(n, opts); });
        tasks.emplace_back([n, opts] { return suite_b3_structure(n, opts); });
        tasks.emplace_back([n, opts] { return suite_dims_predicted(n, opts); });
        tasks.emplace_back([n, opts] { return suite_h1_representatives(n, opts); });
        tasks.emplace_back([n, opts] { return suite_classical_log_cells(n, opts); });
        tasks.emplace_back([n, opts] { return suite_classical_log_totals(n, opts); });
    }
    tasks.emplace_back([opts] { return suite_complex_dd_general_phi(opts); });
    return tasks;
}

std::vector<SuiteResult> run_all_suites(const std::vector<int>& ns, const VerifyOptions& opts) {
    std::vector<SuiteResult> results;
    for (const auto& task : suite_tasks(ns, opts)) results.push_back(task());
    return results;
}

}  // namespace logpois
