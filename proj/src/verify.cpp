#include "gl2skein/verify.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "gl2skein/action.hpp"
#include "gl2skein/annulus.hpp"
#include "gl2skein/lens.hpp"
#include "gl2skein/parse.hpp"
#include "gl2skein/scalar.hpp"
#include "gl2skein/torus.hpp"

namespace gl2skein::verify {

namespace {

using Rng = std::mt19937_64;

long rand_range(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Scalar rand_scalar(Rng& rng) {
    long num = 0;
    while (num == 0) num = rand_range(rng, -3, 3);
    long den = rand_range(rng, 0, 3) == 0 ? 2 : 1;
    Scalar s = Scalar(Rational(num, den)) * Scalar::t_pow(rand_range(rng, -4, 4));
    if (rand_range(rng, 0, 3) == 0) {
        s += Scalar(rand_range(rng, 1, 2)) * Scalar::t_pow(rand_range(rng, -4, 4));
    }
    return s;
}

TorusElement rand_torus_word(Rng& rng, long bound) {
    TorusElement e = rand_range(rng, 0, 4) == 0
                         ? wedge(rand_range(rng, -bound, bound), rand_range(rng, -bound, bound))
                         : mul(t_curve(rand_range(rng, -bound, bound), rand_range(rng, -bound, bound)),
                               wedge(rand_range(rng, -bound, bound), rand_range(rng, -bound, bound)));
    return e;
}

TorusElement rand_torus_element(Rng& rng, long bound, int max_terms) {
    TorusElement e;
    int terms = static_cast<int>(rand_range(rng, 1, max_terms));
    for (int i = 0; i < terms; ++i) e += rand_scalar(rng) * rand_torus_word(rng, bound);
    return e;
}

AnnulusElement rand_annulus_element(Rng& rng, long bound, int max_terms) {
    AnnulusElement e;
    int terms = static_cast<int>(rand_range(rng, 1, max_terms));
    for (int i = 0; i < terms; ++i) {
        AnnulusElement word =
            mul(core(rand_range(rng, -bound, bound)), wedge1(rand_range(rng, -bound, bound)));
        e += rand_scalar(rng) * word;
    }
    return e;
}

std::string describe(const TorusElement& e) { return print_element(e); }
std::string describe(const AnnulusElement& e) { return print_element(e); }

std::string coords_text(const SpanningCoordinates& c) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [key, value] : c.grid()) {
        if (!first) os << ", ";
        os << "(" << key.first << "," << key.second << "): " << value.to_string();
        first = false;
    }
    os << "}";
    return os.str();
}

SpanningCoordinates scale_coords(const Scalar& factor, const SpanningCoordinates& c) {
    SpanningCoordinates out(c.p());
    for (const auto& [key, value] : c.grid()) {
        out.add(key.first, key.second, ScalarFraction(factor) * value);
    }
    return out;
}

std::vector<std::pair<long, long>> coprime_pairs(long p_max) {
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p <= p_max; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    return out;
}

}  // namespace

CheckResult check_scalar_laws(unsigned long seed, int iterations) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng), c = rand_scalar(rng);
        if ((a + b) * c != a * c + b * c) return "distributivity failed for " + a.to_string();
        if (a * b != b * a) return "commutativity failed for " + a.to_string();
        if ((a * b) * c != a * (b * c)) return "associativity failed for " + a.to_string();
        if (Scalar(1) * a != a) return "unit law failed for " + a.to_string();
        if ((a + b).evaluate_at_one() != a.evaluate_at_one() + b.evaluate_at_one() ||
            (a * b).evaluate_at_one() != a.evaluate_at_one() * b.evaluate_at_one()) {
            return "evaluation at t=1 is not a homomorphism for " + a.to_string();
        }
        if (!b.is_zero() && div_exact(a * b, b) != a) {
            return "div_exact(a*b, b) != a for a=" + a.to_string() + ", b=" + b.to_string();
        }
        if (!a.is_zero()) {
            ScalarFraction f(b, a);
            if (!b.is_zero() && (f * ScalarFraction(a, b)) != ScalarFraction(Scalar(1))) {
                return "fraction inverse law failed for " + a.to_string();
            }
            ScalarFraction again(f.numerator(), f.denominator());
            if (again != f) return "fraction normalization is not idempotent";
        }
    }
    // Worked examples.
    Scalar ring = Scalar::t_pow(1) + Scalar::t_pow(-1);
    if (ring * ring != Scalar::t_pow(2) + Scalar(2) + Scalar::t_pow(-2)) {
        return "(t + t^-1)^2 expansion failed";
    }
    if (div_exact(ring * ring, ring) != ring) return "exact division regression";
    ScalarFraction f(Scalar(1), ring);
    if (f.denominator() != Scalar::t_pow(2) + Scalar(1) || f.numerator() != Scalar::t_pow(1)) {
        return "fraction normalization of 1/(t + t^-1) failed: " + f.to_string();
    }
    return std::nullopt;
}

CheckResult check_torus_associativity(unsigned long seed, int triples, long bound) {
    Rng rng(seed);
    for (int i = 0; i < triples; ++i) {
        TorusElement a = rand_torus_word(rng, bound);
        TorusElement b = rand_torus_word(rng, bound);
        TorusElement c = rand_torus_word(rng, bound);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            return "associativity failed for A=" + describe(a) + ", B=" + describe(b) +
                   ", C=" + describe(c);
        }
    }
    return std::nullopt;
}

CheckResult check_torus_identity(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    TorusElement one = TorusElement::identity();
    for (int i = 0; i < iterations; ++i) {
        TorusElement a = rand_torus_element(rng, bound, 3);
        Scalar c = rand_scalar(rng);
        if (mul(one, a) != a || mul(a, one) != a) return "identity law failed for " + describe(a);
        if (mul(c * one, a) != mul(a, c * one)) return "scalars are not central: " + describe(a);
        if (mul(c * one, a) != c * a) return "scalar action mismatch for " + describe(a);
    }
    return std::nullopt;
}

CheckResult check_torus_grading(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        TorusElement a = rand_torus_word(rng, bound);
        TorusElement b = rand_torus_word(rng, bound);
        if (a.terms().size() != 1 || b.terms().size() != 1) continue;
        auto ha = homology_class(a.terms().begin()->first);
        auto hb = homology_class(b.terms().begin()->first);
        TorusElement ab = mul(a, b);
        for (const auto& [w, c] : ab.terms()) {
            (void)c;
            auto h = homology_class(w);
            if (h.first != ha.first + hb.first || h.second != ha.second + hb.second) {
                return "grading violated by " + describe(a) + " * " + describe(b);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_reverse_orientation(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        long m = rand_range(rng, -bound, bound);
        long n = rand_range(rng, -bound, bound);
        if (mul(t_curve(m, n), wedge(-m, -n)) != t_curve(-m, -n)) {
            return "orientation reversal failed at (" + std::to_string(m) + "," +
                   std::to_string(n) + ")";
        }
    }
    return std::nullopt;
}

CheckResult check_product_adjoint_form(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        long m = rand_range(rng, -bound, bound);
        long n = rand_range(rng, -bound, bound);
        long r = rand_range(rng, -bound, bound);
        long s = rand_range(rng, -bound, bound);
        TorusElement lhs = mul(t_curve(m, n), t_curve(r, s));
        TorusElement rhs = t_curve(m + r, n + s) + mul(wedge(m, n), t_curve(r - m, s - n));
        if (lhs != rhs) {
            return "adjoint product form failed at (" + std::to_string(m) + "," +
                   std::to_string(n) + ")*(" + std::to_string(r) + "," + std::to_string(s) + ")";
        }
    }
    return std::nullopt;
}

CheckResult check_standard_curve_recursion(long d_max, long bound) {
    for (long d = 3; d <= d_max; ++d) {
        for (long a = -bound; a <= bound; ++a) {
            for (long b = -bound; b <= bound; ++b) {
                if (std::gcd(a < 0 ? -a : a, b < 0 ? -b : b) != 1) continue;
                long m = d * a, n = d * b;
                TorusElement lhs =
                    mul(t_curve(m - a, n - b), t_curve(a, b)) -
                    mul(t_curve(m - 2 * a, n - 2 * b), wedge(a, b));
                if (lhs != t_curve(m, n)) {
                    return "curve recursion failed at d=" + std::to_string(d) + ", (" +
                           std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult check_annulus_laws(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        AnnulusElement a = rand_annulus_element(rng, bound, 3);
        AnnulusElement b = rand_annulus_element(rng, bound, 3);
        AnnulusElement c = rand_annulus_element(rng, bound, 3);
        if (mul(a, b) != mul(b, a)) return "commutativity failed for " + describe(a);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "associativity failed";
        long wa = rand_range(rng, -bound, bound), ra = rand_range(rng, -bound, bound);
        long wb = rand_range(rng, -bound, bound), rb = rand_range(rng, -bound, bound);
        AnnulusElement u = mul(core(wa), wedge1(ra));
        AnnulusElement v = mul(core(wb), wedge1(rb));
        long sum = winding(u.terms().begin()->first) + winding(v.terms().begin()->first);
        if (winding(mul(u, v).terms().begin()->first) != sum) return "winding not additive";
    }
    return std::nullopt;
}

CheckResult check_x_seeds(long n_max, long lead_m_max, long lead_n_max) {
    for (long n = -n_max; n <= n_max; ++n) {
        AnnulusElement expected = (Scalar::t_pow(n) + Scalar::t_pow(-n)) * AnnulusElement::identity();
        if (x(0, n) != expected) return "x(0," + std::to_string(n) + ") seed failed";
        if (x(1, n) != Scalar::t_pow(n) * core(1)) {
            return "x(1," + std::to_string(n) + ") seed failed";
        }
        if (x(-1, n) != Scalar::t_pow(-n) * core(-1)) {
            return "x(-1," + std::to_string(n) + ") seed failed";
        }
    }
    for (long m = -lead_m_max; m <= lead_m_max; ++m) {
        if (m == 0) continue;
        for (long n = -lead_n_max; n <= lead_n_max; ++n) {
            AnnulusWord lead = m > 0 ? AnnulusWord{m, 0} : AnnulusWord{-m, m};
            Scalar c = x(m, n).coefficient(lead);
            Scalar expected = Scalar::t_pow(m > 0 ? n : -n);
            if (c != expected) {
                return "leading coefficient of x(" + std::to_string(m) + "," + std::to_string(n) +
                       ") is " + c.to_string() + ", expected " + expected.to_string();
            }
        }
    }
    return std::nullopt;
}

CheckResult check_x_winding(long m_max, long n_max) {
    for (long m = -m_max; m <= m_max; ++m) {
        for (long n = -n_max; n <= n_max; ++n) {
            AnnulusElement xmn = x(m, n);
            for (const auto& [w, c] : xmn.terms()) {
                (void)c;
                if (winding(w) != m) {
                    return "x(" + std::to_string(m) + "," + std::to_string(n) +
                           ") contains a word of winding " + std::to_string(winding(w));
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult check_tform_roundtrip(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        AnnulusElement u = rand_annulus_element(rng, bound, 4);
        if (from_tform(to_tform(u)) != u) return "T-form round trip failed for " + describe(u);
    }
    for (long k = 0; k <= bound; ++k) {
        TForm tf{{{k, 0}, Scalar(1)}};
        if (to_tform(t_core(k)) != tf) return "t_core(" + std::to_string(k) + ") incoherent";
    }
    AnnulusElement two = core(2);
    TForm expected{{{2, 0}, Scalar(1)}, {{0, 1}, Scalar(1)}};
    if (to_tform(two) != expected) return "T-form of (2) is not {(2,0):1,(0,1):1}";
    return std::nullopt;
}

CheckResult check_unknot_evaluation(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        AnnulusElement u = rand_annulus_element(rng, bound, 3);
        AnnulusElement v = rand_annulus_element(rng, bound, 3);
        if (evaluate_unknots(mul(u, v)) != evaluate_unknots(u) * evaluate_unknots(v)) {
            return "evaluation is not multiplicative for " + describe(u);
        }
        // Core addition is an identity on the nonnegative cone; mixed signs
        // stay as separate strands under the chosen normalization.
        long n = rand_range(rng, 0, bound);
        long m = rand_range(rng, 0, bound);
        if (evaluate_unknots(mul(core(n), core(m))) != evaluate_unknots(core(n + m))) {
            return "evaluation breaks core addition";
        }
        if (evaluate_unknots(mul(core(-n), core(-m))) != evaluate_unknots(core(-n - m))) {
            return "evaluation breaks reversed core addition";
        }
        if (evaluate_unknots(mul(core(n), wedge1(-n))) != evaluate_unknots(core(-n))) {
            return "evaluation breaks orientation reversal";
        }
    }
    return std::nullopt;
}

CheckResult check_action_oracle(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        TorusElement a = rand_torus_element(rng, bound, 2);
        TorusElement b = rand_torus_element(rng, bound, 2);
        if (act(a, project(b)) != act_oracle(a, b)) {
            return "action disagrees with multiply-then-project for A=" + describe(a) +
                   ", B=" + describe(b);
        }
    }
    return std::nullopt;
}

CheckResult check_module_axioms(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        TorusElement a = rand_torus_element(rng, bound, 2);
        TorusElement b = rand_torus_element(rng, bound, 2);
        AnnulusElement u = rand_annulus_element(rng, bound, 2);
        if (act(mul(a, b), u) != act(a, act(b, u))) {
            return "module axiom failed for A=" + describe(a) + ", B=" + describe(b) +
                   ", u=" + describe(u);
        }
        if (act(TorusElement::identity(), u) != u) return "identity action failed";
    }
    return std::nullopt;
}

CheckResult check_longitude_action(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        // No meridian winding anywhere in the actor.
        TorusElement a;
        int terms = static_cast<int>(rand_range(rng, 1, 2));
        for (int j = 0; j < terms; ++j) {
            a += rand_scalar(rng) * mul(t_curve(rand_range(rng, -bound, bound), 0),
                                        wedge(rand_range(rng, -bound, bound), 0));
        }
        AnnulusElement u = rand_annulus_element(rng, bound, 2);
        if (act(a, u) != mul(project(a), u)) {
            return "longitudinal action is not multiplication for " + describe(a);
        }
    }
    return std::nullopt;
}

CheckResult check_action_winding(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        TorusElement a = rand_torus_word(rng, bound);
        if (a.terms().size() != 1) continue;
        auto h = homology_class(a.terms().begin()->first);
        AnnulusElement u = mul(core(rand_range(rng, 0, bound)), wedge1(rand_range(rng, -bound, bound)));
        long base = winding(u.terms().begin()->first);
        AnnulusElement moved = act(a, u);
        for (const auto& [w, c] : moved.terms()) {
            (void)c;
            if (winding(w) != base + h.first) {
                return "action winding shift failed for " + describe(a);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_abs_min_remainder(long p_max, long x_max) {
    for (long p = 1; p <= p_max; ++p) {
        for (long xv = -x_max; xv <= x_max; ++xv) {
            auto [s0, w] = abs_min_remainder(xv, p);
            if (w != xv + p * s0) return "remainder identity failed";
            if (2 * (w < 0 ? -w : w) > p) return "remainder not minimal in magnitude";
            // Brute-force scan.
            long best_s = 0;
            long best = -1;
            for (long s = -x_max - p; s <= x_max + p; ++s) {
                long cand = xv + p * s;
                long mag = cand < 0 ? -cand : cand;
                if (best < 0 || mag < best) {
                    best = mag;
                    best_s = s;
                }
            }
            if ((w < 0 ? -w : w) != best || s0 != best_s) {
                return "brute-force mismatch at x=" + std::to_string(xv) +
                       ", p=" + std::to_string(p) + ": got (s0=" + std::to_string(s0) +
                       ", w=" + std::to_string(w) + ")";
            }
        }
    }
    return std::nullopt;
}

CheckResult check_move_soundness(unsigned long seed, int iterations) {
    Rng rng(seed);
    auto pairs = coprime_pairs(7);
    for (int i = 0; i < iterations; ++i) {
        auto [p, q] = pairs[static_cast<std::size_t>(rand_range(rng, 0, static_cast<long>(pairs.size()) - 1))];
        GluingMatrix g = gluing_for(p, q);
        long k = rand_range(rng, 0, 6);
        long l = rand_range(rng, -8, 8);
        auto [kl_down, c_down] = wedge_period({k, l}, g, PeriodDirection::down);
        auto [kl_up, c_up] = wedge_period(kl_down, g, PeriodDirection::up);
        if (kl_up != std::make_pair(k, l) || !(c_down * c_up).is_one()) {
            return "winding period is not invertible at p=" + std::to_string(p);
        }
        long tw = rand_range(rng, -5, 5);
        if (div_exact(Scalar(1), Scalar(1)) != Scalar(1)) return "scalar unit broken";
        // Index-strip scalars derived from the curve and wedge images.
        AnnulusElement x1k = x(1, tw), x10 = x(1, 0);
        if (x1k != Scalar::t_pow(tw) * x10) return "curve strip scalar is not t^k";
        if (x(-1, tw) != Scalar::t_pow(-tw) * x(-1, 0)) return "mirror strip scalar failed";
        if (y(1, tw) != Scalar::t_pow(-2 * tw) * y(1, 0)) return "wedge strip scalar failed";
        if (i % 10 == 0) {
            // The pushed meridian acts as the scalar t + t^-1.  Coordinates
            // are compared as module elements: for even p the grid carries
            // relations of its own.
            AnnulusElement u = rand_annulus_element(rng, 2, 2);
            LensElement lhs = LensElement::tensor(act(t_curve(g.p, g.q), u),
                                                  AnnulusElement::identity());
            SpanningCoordinates left = fold_grid_relations(reduce(lhs, g), g);
            SpanningCoordinates right = fold_grid_relations(
                scale_coords(Scalar::t_pow(1) + Scalar::t_pow(-1),
                             reduce(LensElement::tensor(u, AnnulusElement::identity()), g)),
                g);
            if (left != right) {
                return "pushed meridian relation failed at p=" + std::to_string(p) +
                       ", q=" + std::to_string(q) + " on " + describe(u);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_eta_base_scalar(unsigned long seed, int iterations) {
    Rng rng(seed);
    auto pairs = coprime_pairs(6);
    for (int i = 0; i < iterations; ++i) {
        auto [p, q] = pairs[static_cast<std::size_t>(rand_range(rng, 0, static_cast<long>(pairs.size()) - 1))];
        GluingMatrix g = gluing_for(p, q);
        long k = rand_range(rng, -4, 4);
        long r = rand_range(rng, -4, 4);
        long s = rand_range(rng, -4, 4);
        long R = g.a * r + g.p * s;
        long S = g.b * r + g.q * s;
        AnnulusElement vy = y(R, S);
        AnnulusElement lhs = mul(x(g.p * k, g.q * k), vy);
        AnnulusElement rhs = act(t_curve(g.p * k, g.q * k), vy);
        Scalar expected = Scalar::t_pow(2 * R * k * g.q);
        if (lhs != expected * rhs) {
            return "base scalar is not t^{2(ar+ps)(kq)} at p=" + std::to_string(p) +
                   ", q=" + std::to_string(q) + ", k=" + std::to_string(k);
        }
        // Through the full reduction: x(kp,kq)*y (x) 1 = t^eta (t^k + t^-k) y (x) 1.
        SpanningCoordinates via_xy = reduce_xy(0, k, r, s, g);
        SpanningCoordinates via_y = scale_coords(
            expected * (Scalar::t_pow(k) + Scalar::t_pow(-k)),
            reduce(LensElement::tensor(vy, AnnulusElement::identity()), g));
        if (via_xy != via_y) {
            return "base-case composition mismatch at p=" + std::to_string(p) +
                   ", q=" + std::to_string(q) + ": " + coords_text(via_xy) + " vs " +
                   coords_text(via_y);
        }
    }
    return std::nullopt;
}

CheckResult check_s3_oracle(unsigned long seed, int iterations, long bound) {
    Rng rng(seed);
    GluingMatrix g = gluing_for(1, 0);
    for (int i = 0; i < iterations; ++i) {
        AnnulusElement u = rand_annulus_element(rng, bound, 3);
        SpanningCoordinates coords = reduce(LensElement::tensor(u, AnnulusElement::identity()), g);
        Scalar expected = evaluate_unknots(u);
        SpanningCoordinates want(1);
        want.add(0, 0, ScalarFraction(expected));
        if (coords != want) {
            return "sphere evaluation failed for " + describe(u) + ": got " + coords_text(coords) +
                   ", expected " + expected.to_string();
        }
    }
    for (long n = 0; n <= bound; ++n) {
        SpanningCoordinates coords =
            reduce(LensElement::tensor(core(n), AnnulusElement::identity()), g);
        if (coords != scale_coords(evaluate_unknots(core(n)),
                                   reduce(LensElement::tensor(AnnulusElement::identity(),
                                                              AnnulusElement::identity()),
                                          g))) {
            return "unknot power failed at n=" + std::to_string(n);
        }
        SpanningCoordinates wcoords =
            reduce(LensElement::tensor(wedge1(n), AnnulusElement::identity()), g);
        SpanningCoordinates one(1);
        one.add(0, 0, ScalarFraction(Scalar(1)));
        if (wcoords != one) return "2-labeled unknot is not 1 at n=" + std::to_string(n);
    }
    return std::nullopt;
}

CheckResult check_grid_support(unsigned long seed, int per_pair, long p_max,
                               int* fallback_count) {
    Rng rng(seed);
    int fallbacks = 0;
    for (const auto& [p, q] : coprime_pairs(p_max)) {
        GluingMatrix g = gluing_for(p, q);
        for (int i = 0; i < per_pair; ++i) {
            long n1 = rand_range(rng, -3 * p, 3 * p);
            long n2 = rand_range(rng, -3 * p, 3 * p);
            AnnulusElement u = mul(core(n1), wedge1(n2));
            LensElement e = LensElement::tensor(u, AnnulusElement::identity());
            SpanningCoordinates coords(p);
            try {
                coords = reduce(e, g);
            } catch (const StepLimitExceeded&) {
                ++fallbacks;
                coords = reduce_solver(e, g, Window{4 * p, 4 * p});
            }
            // Support inside the grid is enforced by construction; check the
            // winding class mod p.
            long input_class = winding(u.terms().begin()->first);
            for (const auto& [key, value] : coords.grid()) {
                (void)value;
                long delta = (key.first + 2 * key.second - input_class) % p;
                if (delta != 0) {
                    return "winding class mod p violated at p=" + std::to_string(p) +
                           ", q=" + std::to_string(q) + " for input (" + std::to_string(n1) +
                           ")w(" + std::to_string(n2) + ")";
                }
            }
            std::size_t bound_size = static_cast<std::size_t>((p / 2 + 1) * (2 * (p / 2) + 1));
            if (coords.grid().size() > bound_size) return "grid support bound exceeded";
        }
    }
    if (fallback_count != nullptr) *fallback_count = fallbacks;
    return std::nullopt;
}

CheckResult check_solver_agreement(unsigned long seed, int iterations) {
    Rng rng(seed);
    {
        GluingMatrix g = gluing_for(1, 0);
        Window window{8, 8};
        for (int i = 0; i < iterations; ++i) {
            AnnulusElement u = rand_annulus_element(rng, 4, 2);
            LensElement e = LensElement::tensor(u, AnnulusElement::identity());
            SpanningCoordinates a = reduce(e, g);
            SpanningCoordinates b = reduce_solver(e, g, window);
            if (a != b) {
                return "solver disagrees with the recursive path at p=1 for " + describe(u) +
                       ": " + coords_text(a) + " vs " + coords_text(b);
            }
        }
    }
    for (long p : {2L, 3L, 4L, 5L}) {
        for (long q : {1L, p - 1}) {
            if (std::gcd(p, q) != 1 || q < 1) continue;
            GluingMatrix g = gluing_for(p, q);
            long f = g.half();
            Window window{3 * f + 4, 2 * p + f + 4};
            for (long n = 0; n <= f; ++n) {
                for (long w = -f; w <= f; ++w) {
                    LensElement e = LensElement::tensor(mul(core(n), wedge1(w)),
                                                        AnnulusElement::identity());
                    SpanningCoordinates a = reduce(e, g);
                    SpanningCoordinates expected(p);
                    expected.add(n, w, ScalarFraction(Scalar(1)));
                    if (a != expected) {
                        return "grid input is not fixed at p=" + std::to_string(p) + ": (" +
                               std::to_string(n) + "," + std::to_string(w) + ")";
                    }
                    SpanningCoordinates b = reduce_solver(e, g, window);
                    if (a != b) return "solver moves a grid input at p=" + std::to_string(p);
                    for (long shift : {p, -p}) {
                        LensElement nb = LensElement::tensor(mul(core(n), wedge1(w + shift)),
                                                             AnnulusElement::identity());
                        SpanningCoordinates ra = reduce(nb, g);
                        SpanningCoordinates rb = reduce_solver(nb, g, window);
                        // Coordinates on the spanning set are only unique up
                        // to the grid's own relations, which exist for even
                        // p; fold both sides before comparing there.
                        if (p % 2 == 0) {
                            ra = fold_grid_relations(ra, g);
                            rb = fold_grid_relations(rb, g);
                        }
                        if (ra != rb) {
                            return "solver disagrees on a one-move neighbor at p=" +
                                   std::to_string(p) + ", q=" + std::to_string(q) + ": (" +
                                   std::to_string(n) + "," + std::to_string(w + shift) + "): " +
                                   coords_text(ra) + " vs " + coords_text(rb);
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult check_parse_roundtrip(unsigned long seed, int per_sort) {
    Rng rng(seed);
    for (int i = 0; i < per_sort; ++i) {
        TorusElement a = rand_torus_element(rng, 5, 3);
        if (parse_torus(print_element(a)) != a) {
            return "torus round trip failed for " + print_element(a);
        }
        AnnulusElement u = rand_annulus_element(rng, 5, 3);
        if (parse_annulus(print_element(u)) != u) {
            return "annulus round trip failed for " + print_element(u);
        }
        LensElement e;
        int terms = static_cast<int>(rand_range(rng, 1, 2));
        for (int j = 0; j < terms; ++j) {
            AnnulusElement left = rand_annulus_element(rng, 3, 2);
            AnnulusElement right = rand_annulus_element(rng, 3, 2);
            e.add_term(left, right, Scalar(1));
        }
        LensElement back = parse_lens(print_element(e));
        // Tensor terms are compared side by side after refolding.
        if (print_element(back) != print_element(e)) {
            return "lens round trip failed for " + print_element(e);
        }
    }
    return std::nullopt;
}

CheckResult check_parser_fuzz(unsigned long seed, int iterations) {
    Rng rng(seed);
    const std::string alphabet = "TWcwxyt()+-*/^, 0123456789.!@[]{}";
    for (int i = 0; i < iterations; ++i) {
        std::string s;
        int len = static_cast<int>(rand_range(rng, 0, 40));
        for (int j = 0; j < len; ++j) {
            if (rand_range(rng, 0, 20) == 0) {
                s.push_back(static_cast<char>(rand_range(rng, 1, 255)));
            } else {
                s.push_back(alphabet[static_cast<std::size_t>(
                    rand_range(rng, 0, static_cast<long>(alphabet.size()) - 1))]);
            }
        }
        try {
            (void)parse_torus(s);
        } catch (const Error&) {
        }
        try {
            (void)parse_annulus(s);
        } catch (const Error&) {
        }
        try {
            (void)parse_lens(s);
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

namespace {

struct Suite {
    std::string name;
    std::function<CheckResult(unsigned long)> run;
};

const std::vector<Suite>& registry() {
    static const std::vector<Suite> suites = {
        {"scalar-laws", [](unsigned long s) { return check_scalar_laws(s, 200); }},
        {"associativity", [](unsigned long s) { return check_torus_associativity(s, 100, 8); }},
        {"identity", [](unsigned long s) { return check_torus_identity(s, 100, 8); }},
        {"grading", [](unsigned long s) { return check_torus_grading(s, 200, 8); }},
        {"revorien", [](unsigned long s) { return check_reverse_orientation(s, 200, 10); }},
        {"fgadj", [](unsigned long s) { return check_product_adjoint_form(s, 200, 8); }},
        {"standard-curve", [](unsigned long) { return check_standard_curve_recursion(6, 3); }},
        {"annulus-laws", [](unsigned long s) { return check_annulus_laws(s, 200, 8); }},
        {"x-seeds", [](unsigned long) { return check_x_seeds(12, 10, 5); }},
        {"x-winding", [](unsigned long) { return check_x_winding(10, 5); }},
        {"tform-roundtrip", [](unsigned long s) { return check_tform_roundtrip(s, 200, 8); }},
        {"unknot-evaluation", [](unsigned long s) { return check_unknot_evaluation(s, 200, 6); }},
        {"action-oracle", [](unsigned long s) { return check_action_oracle(s, 100, 6); }},
        {"module-axioms", [](unsigned long s) { return check_module_axioms(s, 100, 6); }},
        {"longitude-action", [](unsigned long s) { return check_longitude_action(s, 100, 6); }},
        {"action-winding", [](unsigned long s) { return check_action_winding(s, 200, 6); }},
        {"abs-min", [](unsigned long) { return check_abs_min_remainder(50, 200); }},
        {"move-soundness", [](unsigned long s) { return check_move_soundness(s, 500); }},
        {"eta-base", [](unsigned long s) { return check_eta_base_scalar(s, 100); }},
        {"s3-oracle", [](unsigned long s) { return check_s3_oracle(s, 100, 6); }},
        {"grid-support", [](unsigned long s) { return check_grid_support(s, 10, 7); }},
        {"solver-agreement", [](unsigned long s) { return check_solver_agreement(s, 30); }},
        {"parse-roundtrip", [](unsigned long s) { return check_parse_roundtrip(s, 200); }},
        {"parser-fuzz", [](unsigned long s) { return check_parser_fuzz(s, 2000); }},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
}

SuiteResult run_suite(const std::string& name, unsigned long seed) {
    for (const auto& s : registry()) {
        if (s.name == name) {
            CheckResult r = s.run(seed);
            return {name, !r.has_value(), r.value_or("")};
        }
    }
    throw DomainError("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_all(unsigned long seed) {
    std::vector<SuiteResult> out;
    for (const auto& s : registry()) {
        CheckResult r = s.run(seed);
        out.push_back({s.name, !r.has_value(), r.value_or("")});
    }
    return out;
}

}  // namespace gl2skein::verify
