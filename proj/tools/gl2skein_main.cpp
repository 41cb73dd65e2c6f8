#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gl2skein/lens.hpp"
#include "gl2skein/parse.hpp"
#include "gl2skein/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace gl2skein;

constexpr const char* kCacheVersion = "gl2skein-cache-1";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitReduction = 4;

struct CommonOptions {
    long p = 1;
    long q = 0;
    long budget = 1000000;
    long window = 0;  // 0: derived from p
    std::string format = "text";
    std::string cache_path;
    unsigned long seed = 0;
};

// Single versioned JSON document holding everything the CLI remembers
// between runs for one gluing matrix.
class Cache {
public:
    Cache(std::string path, const GluingMatrix& G) : path_(std::move(path)) {
        doc_["version"] = kCacheVersion;
        doc_["matrix"] = {{"a", G.a}, {"b", G.b}, {"p", G.p}, {"q", G.q}};
        doc_["x_table"] = json::object();
        doc_["reductions"] = json::object();
        if (path_.empty()) return;
        std::ifstream in(path_);
        if (!in) return;
        json loaded = json::parse(in, nullptr, false);
        if (loaded.is_discarded() || !loaded.is_object()) return;
        if (loaded.value("version", "") != kCacheVersion) return;
        if (loaded["matrix"] != doc_["matrix"]) return;
        doc_ = loaded;
    }

    std::optional<json> lookup(const std::string& key) const {
        const auto& reductions = doc_["reductions"];
        auto it = reductions.find(key);
        if (it == reductions.end()) return std::nullopt;
        return *it;
    }

    void store(const std::string& key, const json& value) {
        doc_["reductions"][key] = value;
        dirty_ = true;
    }

    void note_x(long m, long n, const AnnulusElement& value) {
        std::string key = std::to_string(m) + "," + std::to_string(n);
        if (!doc_["x_table"].contains(key)) {
            doc_["x_table"][key] = print_element(value);
            dirty_ = true;
        }
    }

    void save() {
        if (path_.empty() || !dirty_) return;
        std::ofstream out(path_);
        out << doc_.dump(2) << "\n";
    }

private:
    std::string path_;
    json doc_;
    bool dirty_ = false;
};

json coords_to_json(const SpanningCoordinates& coords) {
    json out = json::array();
    for (const auto& [key, value] : coords.grid()) {
        out.push_back({{"n", key.first}, {"m", key.second}, {"coeff", value.to_string()}});
    }
    return out;
}

struct ReduceOutcome {
    json coords;
    std::string path;
};

ReduceOutcome run_reduction(const LensElement& element, const GluingMatrix& G,
                            const CommonOptions& opt) {
    try {
        SpanningCoordinates coords = reduce(element, G, ReduceOptions{opt.budget});
        return {coords_to_json(coords), "recursive"};
    } catch (const StepLimitExceeded&) {
        long w = opt.window > 0 ? opt.window : 4 * G.p;
        for (int attempt = 0; attempt <= 3; ++attempt) {
            try {
                SpanningCoordinates coords = reduce_solver(element, G, Window{w, w});
                return {coords_to_json(coords), "solver"};
            } catch (const WindowTooSmall&) {
                w *= 2;
            }
        }
        throw StepLimitExceeded("reduction failed within budget and solver window retries");
    }
}

void emit_reduce(const json& coords, const std::string& path, const GluingMatrix& G,
                 const CommonOptions& opt) {
    if (opt.format == "json") {
        json out = {{"p", G.p},
                    {"q", G.q},
                    {"matrix", {{"a", G.a}, {"b", G.b}}},
                    {"path", path},
                    {"coords", coords}};
        std::cout << out.dump(2) << "\n";
        return;
    }
    if (opt.format == "csv") {
        std::cout << "n,m,coeff\n";
        for (const auto& row : coords) {
            std::cout << row["n"].get<long>() << "," << row["m"].get<long>() << ",\""
                      << row["coeff"].get<std::string>() << "\"\n";
        }
        return;
    }
    for (const auto& row : coords) {
        std::cout << "(" << row["n"].get<long>() << "," << row["m"].get<long>()
                  << "): " << row["coeff"].get<std::string>() << "\n";
    }
    if (coords.empty()) std::cout << "0\n";
}

int cmd_reduce(const std::string& expr, const CommonOptions& opt) {
    GluingMatrix G = gluing_for(opt.p, opt.q);
    LensElement element = parse_lens(expr);
    Cache cache(opt.cache_path, G);
    std::string key = print_element(element);
    json coords;
    std::string path;
    if (auto hit = cache.lookup(key)) {
        coords = (*hit)["coords"];
        path = (*hit)["path"].get<std::string>();
    } else {
        ReduceOutcome outcome = run_reduction(element, G, opt);
        coords = outcome.coords;
        path = outcome.path;
        cache.store(key, {{"path", path}, {"coords", coords}});
    }
    cache.save();
    emit_reduce(coords, path, G, opt);
    return kExitOk;
}

int cmd_table(long n_max, long w_max, const CommonOptions& opt) {
    if (n_max < 0 || w_max < 0) throw DomainError("table bounds must be nonnegative");
    GluingMatrix G = gluing_for(opt.p, opt.q);
    Cache cache(opt.cache_path, G);
    std::ostringstream body;
    body << "n1,n2,n,m,coeff\n";
    for (long n1 = 0; n1 <= n_max; ++n1) {
        for (long n2 = -w_max; n2 <= w_max; ++n2) {
            LensElement element =
                LensElement::tensor(mul(core(n1), wedge1(n2)), AnnulusElement::identity());
            std::string key = print_element(element);
            json coords;
            if (auto hit = cache.lookup(key)) {
                coords = (*hit)["coords"];
            } else {
                ReduceOutcome outcome = run_reduction(element, G, opt);
                coords = outcome.coords;
                cache.store(key, {{"path", outcome.path}, {"coords", coords}});
                auto [m, k] = solve_ma_kp(n1, G);
                cache.note_x(n1, G.b * m + G.q * k, x(n1, G.b * m + G.q * k));
            }
            for (const auto& row : coords) {
                body << n1 << "," << n2 << "," << row["n"].get<long>() << ","
                     << row["m"].get<long>() << ",\"" << row["coeff"].get<std::string>()
                     << "\"\n";
            }
        }
    }
    cache.save();
    std::cout << body.str();
    return kExitOk;
}

int cmd_verify(const std::string& suite, const CommonOptions& opt) {
    std::vector<verify::SuiteResult> results;
    if (suite.empty() || suite == "all") {
        results = verify::run_all(opt.seed);
    } else {
        results.push_back(verify::run_suite(suite, opt.seed));
    }
    bool all_passed = true;
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& r : results) {
            out.push_back({{"suite", r.name}, {"passed", r.passed}, {"message", r.message}});
            all_passed = all_passed && r.passed;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.message.empty()) std::cout << " — " << r.message;
            std::cout << "\n";
            all_passed = all_passed && r.passed;
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailure;
}

// Auto-detects the sort of an expression: tensor input goes through the lens
// path, otherwise the torus and annulus readings are tried in that order.
int cmd_simplify(const std::string& expr) {
    if (expr.find("(x)") != std::string::npos) {
        std::cout << print_element(parse_lens(expr)) << "\n";
        return kExitOk;
    }
    try {
        std::cout << print_element(parse_torus(expr)) << "\n";
        return kExitOk;
    } catch (const SortError&) {
    }
    std::cout << print_element(parse_annulus(expr)) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in the gl2 skein algebra of the torus, the solid torus "
                 "module, and lens space reductions"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions opt;
    app.add_option("-p", opt.p, "Lens space parameter p")->envname("GL2SKEIN_P");
    app.add_option("-q", opt.q, "Lens space parameter q")->envname("GL2SKEIN_Q");
    app.add_option("--budget", opt.budget, "Rewrite step budget")->envname("GL2SKEIN_BUDGET");
    app.add_option("--window", opt.window, "Initial solver window (0 = 4p)")
        ->envname("GL2SKEIN_WINDOW");
    app.add_option("--format", opt.format, "Output format: text, json, csv")
        ->envname("GL2SKEIN_FORMAT");
    app.add_option("--cache", opt.cache_path, "Cache file path")->envname("GL2SKEIN_CACHE");
    app.add_option("--seed", opt.seed, "Random seed for verify")->envname("GL2SKEIN_SEED");

    std::string arg_a, arg_b, suite;
    long n_max = 3, w_max = 2;

    auto* sub_mul = app.add_subcommand("mul", "Multiply two torus expressions");
    sub_mul->add_option("A", arg_a)->required();
    sub_mul->add_option("B", arg_b)->required();

    auto* sub_project = app.add_subcommand("project", "Project a torus expression to the annulus");
    sub_project->add_option("A", arg_a)->required();

    auto* sub_act = app.add_subcommand("act", "Act by a torus expression on an annulus expression");
    sub_act->add_option("A", arg_a)->required();
    sub_act->add_option("u", arg_b)->required();

    auto* sub_reduce = app.add_subcommand("reduce", "Reduce a lens element to the spanning grid");
    sub_reduce->add_option("expr", arg_a)->required();

    auto* sub_table = app.add_subcommand("table", "Tabulate reductions of (n1) w(n2) (x) 1");
    sub_table->add_option("--n-max", n_max, "Largest core index");
    sub_table->add_option("--w-max", w_max, "Largest winding magnitude");

    auto* sub_verify = app.add_subcommand("verify", "Run property verification suites");
    sub_verify->add_option("suite", suite, "Suite name or 'all'");

    auto* sub_simplify = app.add_subcommand("simplify", "Parse, canonicalize and print");
    sub_simplify->add_option("expr", arg_a)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_mul->parsed()) {
            std::cout << print_element(mul(parse_torus(arg_a), parse_torus(arg_b))) << "\n";
            return kExitOk;
        }
        if (sub_project->parsed()) {
            std::cout << print_element(project(parse_torus(arg_a))) << "\n";
            return kExitOk;
        }
        if (sub_act->parsed()) {
            std::cout << print_element(act(parse_torus(arg_a), parse_annulus(arg_b))) << "\n";
            return kExitOk;
        }
        if (sub_reduce->parsed()) return cmd_reduce(arg_a, opt);
        if (sub_table->parsed()) return cmd_table(n_max, w_max, opt);
        if (sub_verify->parsed()) return cmd_verify(suite, opt);
        if (sub_simplify->parsed()) return cmd_simplify(arg_a);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SortError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const StepLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitReduction;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitOk;
}
