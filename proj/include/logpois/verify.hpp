#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "logpois/cohomology.hpp"

namespace logpois {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string counterexample;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    WeightWindow window{-2, 25};
    /* test hook: perturb d2 by +y^(n-1) a1 so d2 o d1 != 0, exercising the
     * failure path end to end */
    bool corrupt_d2 = false;
};

/* Identity suites for one divisor exponent. Each runs a fixed number of
 * seeded cases and reports the first counterexample as polynomial text. */
SuiteResult suite_complex_dd(int n, const VerifyOptions& opts);
SuiteResult suite_oracle_generic(int n, const VerifyOptions& opts);
SuiteResult suite_koszul(int n, const VerifyOptions& opts);
SuiteResult suite_schouten(int n, const VerifyOptions& opts);
SuiteResult suite_z2_structure(int n, const VerifyOptions& opts);
SuiteResult suite_b3_structure(int n, const VerifyOptions& opts);
SuiteResult suite_dims_predicted(int n, const VerifyOptions& opts);
SuiteResult suite_h1_representatives(int n, const VerifyOptions& opts);
SuiteResult suite_classical_log_cells(int n, const VerifyOptions& opts);
SuiteResult suite_classical_log_totals(int n, const VerifyOptions& opts);

/* d2 o d1 == 0 for the classical complex with general (non-monomial) phi;
 * independent of n */
SuiteResult suite_complex_dd_general_phi(const VerifyOptions& opts);
SuiteResult suite_complex_dd_custom_phi(const BiPoly& phi, const std::string& phi_text,
                                        const VerifyOptions& opts);

/* the full suite set as independent tasks, in fixed report order */
std::vector<std::function<SuiteResult()>> suite_tasks(const std::vector<int>& ns,
                                                      const VerifyOptions& opts);

std::vector<SuiteResult> run_all_suites(const std::vector<int>& ns, const VerifyOptions& opts);

}  // namespace logpois
