// Acceptance suite: runs every exit criterion at its stated size and prints
// one pass/fail line per criterion.  Invoke with the CLI binary path as the
// first argument so the determinism criterion can drive it end to end.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gl2skein/verify.hpp"

namespace {

using gl2skein::verify::CheckResult;

struct Criterion {
    std::string label;
    std::function<CheckResult()> run;
};

std::string g_cli_path;

std::string run_cli(const std::string& args, int* exit_code) {
    std::string out_file = "acceptance_cli_out.tmp";
    std::string command = g_cli_path + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(command.c_str());
    if (exit_code != nullptr) *exit_code = rc;
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_file.c_str());
    return buffer.str();
}

CheckResult table_determinism() {
    if (g_cli_path.empty()) return std::string("CLI path not provided");
    std::string cache = "acceptance_cache.tmp.json";
    std::remove(cache.c_str());
    int rc1 = 0, rc2 = 0, rc3 = 0;
    std::string cold =
        run_cli("table -p 3 -q 1 --n-max 4 --w-max 2 --cache " + cache, &rc1);
    std::string warm =
        run_cli("table -p 3 -q 1 --n-max 4 --w-max 2 --cache " + cache, &rc2);
    std::string nocache = run_cli("table -p 3 -q 1 --n-max 4 --w-max 2", &rc3);
    std::remove(cache.c_str());
    if (rc1 != 0 || rc2 != 0 || rc3 != 0) return std::string("table invocation failed");
    if (cold != warm) return std::string("cold and warm cache runs differ");
    if (cold != nocache) return std::string("cached and uncached runs differ");
    if (cold.empty()) return std::string("table produced no output");

    int rc4 = 0, rc5 = 0;
    std::string r1 = run_cli("reduce -p 2 -q 1 --format json \"w(2) (x) 1\"", &rc4);
    std::string r2 = run_cli("reduce -p 2 -q 1 --format json \"w(2) (x) 1\"", &rc5);
    if (rc4 != 0 || rc5 != 0) return std::string("reduce invocation failed");
    if (r1 != r2) return std::string("reduce output is not deterministic");
    if (r1.find("t^4") == std::string::npos) {
        return std::string("reduce of w(2) at p=2 did not produce t^4");
    }
    return std::nullopt;
}

CheckResult merge(std::initializer_list<CheckResult> results) {
    for (const auto& r : results) {
        if (r.has_value()) return r;
    }
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    using namespace gl2skein::verify;

    int fallbacks = 0;
    std::vector<Criterion> criteria = {
        {"1 presentation consistency: product associativity, 200 random word triples in [-8,8]",
         [] { return check_torus_associativity(1, 200, 8); }},
        {"2 adjoint product form and orientation reversal, 200 random tuples",
         [] {
             return merge({check_product_adjoint_form(2, 200, 8),
                           check_reverse_orientation(2, 200, 8)});
         }},
        {"3 action certification: formula vs multiply-then-project and module axioms, "
         "200 random triples in [-6,6]",
         [] {
             return merge({check_action_oracle(3, 200, 6), check_module_axioms(3, 200, 6)});
         }},
        {"4 projection seeds and unit leading coefficients",
         [] { return check_x_seeds(12, 10, 5); }},
        {"5 sphere end-to-end oracle, 100 random elements",
         [] { return check_s3_oracle(5, 100, 6); }},
        {"6 spanning bound for p in 2..7, 50 random inputs per coprime pair",
         [&fallbacks] { return check_grid_support(6, 50, 7, &fallbacks); }},
        {"7 move soundness and base-case scalar, 500 + 100 random checks",
         [] {
             return merge({check_move_soundness(7, 500), check_eta_base_scalar(7, 100)});
         }},
        {"8 solver and recursive path agreement",
         [] { return check_solver_agreement(8, 100); }},
        {"9 absolute-minimal remainders vs brute force, p <= 50, |x| <= 200",
         [] { return check_abs_min_remainder(50, 200); }},
        {"10 language surface: round trips, fuzzing, byte-identical table runs",
         [] {
             return merge({check_parse_roundtrip(10, 500), check_parser_fuzz(10, 10000),
                           table_determinism()});
         }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        CheckResult result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result = std::string("exception: ") + e.what();
        }
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        bool passed = !result.has_value();
        std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.label << " ("
                  << elapsed.count() << "s)";
        if (!passed) std::cout << "\n       " << *result;
        if (criterion.label[0] == '6' && fallbacks > 0) {
            std::cout << "\n       solver fallback used " << fallbacks << " times";
        }
        std::cout << "\n";
        if (!passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
