#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gl2skein::verify {

/// Each check runs a randomized or exhaustive property and returns
/// std::nullopt on success, or a rendered counterexample.
using CheckResult = std::optional<std::string>;

CheckResult check_scalar_laws(unsigned long seed, int iterations);
CheckResult check_torus_associativity(unsigned long seed, int triples, long bound);
CheckResult check_torus_identity(unsigned long seed, int iterations, long bound);
CheckResult check_torus_grading(unsigned long seed, int iterations, long bound);
CheckResult check_reverse_orientation(unsigned long seed, int iterations, long bound);
CheckResult check_product_adjoint_form(unsigned long seed, int iterations, long bound);
CheckResult check_standard_curve_recursion(long d_max, long bound);
CheckResult check_annulus_laws(unsigned long seed, int iterations, long bound);
CheckResult check_x_seeds(long n_max, long lead_m_max, long lead_n_max);
CheckResult check_x_winding(long m_max, long n_max);
CheckResult check_tform_roundtrip(unsigned long seed, int iterations, long bound);
CheckResult check_unknot_evaluation(unsigned long seed, int iterations, long bound);
CheckResult check_action_oracle(unsigned long seed, int iterations, long bound);
CheckResult check_module_axioms(unsigned long seed, int iterations, long bound);
CheckResult check_longitude_action(unsigned long seed, int iterations, long bound);
CheckResult check_action_winding(unsigned long seed, int iterations, long bound);
CheckResult check_abs_min_remainder(long p_max, long x_max);
CheckResult check_move_soundness(unsigned long seed, int iterations);
CheckResult check_eta_base_scalar(unsigned long seed, int iterations);
CheckResult check_s3_oracle(unsigned long seed, int iterations, long bound);
CheckResult check_grid_support(unsigned long seed, int per_pair, long p_max,
                               int* fallback_count = nullptr);
CheckResult check_solver_agreement(unsigned long seed, int iterations);
CheckResult check_parse_roundtrip(unsigned long seed, int per_sort);
CheckResult check_parser_fuzz(unsigned long seed, int iterations);

struct SuiteResult {
    std::string name;
    bool passed;
    std::string message;
};

/// Names of the registered suites, in execution order.
std::vector<std::string> suite_names();

/// Runs one suite by name (throws DomainError for unknown names).
SuiteResult run_suite(const std::string& name, unsigned long seed);

/// Runs every suite.
std::vector<SuiteResult> run_all(unsigned long seed);

}  // namespace gl2skein::verify
