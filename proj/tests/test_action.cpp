#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2skein/action.hpp"
#include "gl2skein/parse.hpp"

using namespace gl2skein;

namespace {

TorusElement rand_torus(std::mt19937_64& rng, long bound, int max_terms) {
    std::uniform_int_distribution<long> idx(-bound, bound), coeff(-2, 2), terms(1, max_terms);
    TorusElement out;
    long n = terms(rng);
    for (long i = 0; i < n; ++i) {
        long c = coeff(rng);
        if (c == 0) c = 1;
        out += Scalar(c) * mul(t_curve(idx(rng), idx(rng)), wedge(idx(rng), idx(rng)));
    }
    return out;
}

AnnulusElement rand_annulus(std::mt19937_64& rng, long bound, int max_terms) {
    std::uniform_int_distribution<long> idx(-bound, bound), coeff(-2, 2), terms(1, max_terms);
    AnnulusElement out;
    long n = terms(rng);
    for (long i = 0; i < n; ++i) {
        long c = coeff(rng);
        if (c == 0) c = 1;
        out += Scalar(c) * mul(core(idx(rng)), wedge1(idx(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("projection of generators") {
    CHECK(project(t_curve(0, 1)) ==
          (Scalar::t_pow(1) + Scalar::t_pow(-1)) * AnnulusElement::identity());
    for (long r = -4; r <= 4; ++r) {
        for (long s = -4; s <= 4; ++s) {
            CHECK(project(wedge(r, s)) == Scalar::t_pow(-2 * r * s) * wedge1(r));
        }
    }
    CHECK(project(mul(t_curve(1, 0), wedge(1, 1))) ==
          Scalar::t_pow(-2) * mul(core(1), wedge1(1)));
    CHECK(project(t_curve(2, 0)) == t_core(2));
}

TEST_CASE("action on basis elements") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        AnnulusElement u = rand_annulus(rng, 5, 3);
        CHECK(act(wedge(0, 0), u) == u);
        CHECK(act(TorusElement::identity(), u) == u);
    }
    CHECK(act(t_curve(0, 1), AnnulusElement::identity()) ==
          (Scalar::t_pow(1) + Scalar::t_pow(-1)) * AnnulusElement::identity());
    // act(T(1,1), (1)) = x(2,1) + t^-2 W(1) x(0,1) = t (2) + (t^-3 - t) W(1).
    AnnulusElement expected = Scalar::t_pow(1) * core(2) +
                              (Scalar::t_pow(-3) - Scalar::t_pow(1)) * wedge1(1);
    CHECK(act(t_curve(1, 1), core(1)) == expected);
}

TEST_CASE("action against multiply-then-project") {
    CHECK(act_oracle(t_curve(0, 1), TorusElement::identity()) ==
          (Scalar::t_pow(1) + Scalar::t_pow(-1)) * AnnulusElement::identity());
    CHECK(act_oracle(TorusElement::identity(), wedge(2, 1)) == project(wedge(2, 1)));
    CHECK(act_oracle(t_curve(1, 0), wedge(1, 0)) == mul(core(1), wedge1(1)));

    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        TorusElement a = rand_torus(rng, 4, 2);
        TorusElement b = rand_torus(rng, 4, 2);
        CHECK(act(a, project(b)) == act_oracle(a, b));
    }
}

TEST_CASE("module axioms") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        TorusElement a = rand_torus(rng, 4, 2);
        TorusElement b = rand_torus(rng, 4, 2);
        AnnulusElement u = rand_annulus(rng, 4, 2);
        CHECK(act(mul(a, b), u) == act(a, act(b, u)));
    }
}

TEST_CASE("longitudinal elements act by multiplication") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> idx(-5, 5);
    for (int i = 0; i < 60; ++i) {
        TorusElement a = mul(t_curve(idx(rng), 0), wedge(idx(rng), 0));
        AnnulusElement u = rand_annulus(rng, 4, 3);
        CHECK(act(a, u) == mul(project(a), u));
    }
}

TEST_CASE("action shifts winding by the first homology coordinate") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> idx(-4, 4), nn(0, 4);
    for (int i = 0; i < 80; ++i) {
        TorusElement a = mul(t_curve(idx(rng), idx(rng)), wedge(idx(rng), idx(rng)));
        if (a.terms().size() != 1) continue;
        auto h = homology_class(a.terms().begin()->first);
        AnnulusElement u = mul(core(nn(rng)), wedge1(idx(rng)));
        long base = winding(u.terms().begin()->first);
        AnnulusElement moved = act(a, u);
        for (const auto& [w, c] : moved.terms()) {
            (void)c;
            CHECK(winding(w) == base + h.first);
        }
    }
}
