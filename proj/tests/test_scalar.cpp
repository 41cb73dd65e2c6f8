#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "gl2skein/scalar.hpp"

using namespace gl2skein;

namespace {

// Independent long-division oracle over dense rational coefficient arrays,
// kept apart from the library's implementation on purpose.
struct DensePoly {
    long shift = 0;                  // lowest exponent
    std::vector<Rational> coeffs;    // coeffs[i] multiplies t^(shift + i)
};

DensePoly to_dense(const Scalar& s) {
    DensePoly p;
    if (s.is_zero()) return p;
    p.shift = s.min_exponent();
    p.coeffs.assign(static_cast<std::size_t>(s.max_exponent() - p.shift + 1), Rational(0));
    for (const auto& [e, c] : s.terms()) p.coeffs[static_cast<std::size_t>(e - p.shift)] = c;
    return p;
}

// Returns quotient and remainder of textbook long division.
std::pair<DensePoly, DensePoly> oracle_divmod(DensePoly a, const DensePoly& b) {
    DensePoly q;
    q.shift = a.shift - b.shift;
    if (a.coeffs.size() >= b.coeffs.size()) {
        q.coeffs.assign(a.coeffs.size() - b.coeffs.size() + 1, Rational(0));
    }
    while (a.coeffs.size() >= b.coeffs.size() && !a.coeffs.empty()) {
        Rational factor = a.coeffs.back() / b.coeffs.back();
        std::size_t off = a.coeffs.size() - b.coeffs.size();
        q.coeffs[off] = factor;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) a.coeffs[off + i] -= factor * b.coeffs[i];
        while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
    }
    return {q, a};
}

Scalar from_dense(const DensePoly& p) {
    Scalar out;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i] != 0) {
            out += Scalar(p.coeffs[i]) * Scalar::t_pow(p.shift + static_cast<long>(i));
        }
    }
    return out;
}

Scalar oracle_div(const Scalar& a, const Scalar& b, bool& exact) {
    auto [q, r] = oracle_divmod(to_dense(a), to_dense(b));
    exact = r.coeffs.empty();
    return from_dense(q);
}

Scalar rand_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-4, 4), expo(-5, 5), terms(1, 3);
    Scalar s;
    long n = terms(rng);
    for (long i = 0; i < n; ++i) {
        long c = coeff(rng);
        if (c != 0) s += Scalar(c) * Scalar::t_pow(expo(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("monomials") {
    CHECK(Scalar::t_pow(0) == Scalar(1));
    CHECK(Scalar::t_pow(2) * Scalar::t_pow(-2) == Scalar(1));
    CHECK((Scalar::t_pow(1) + Scalar::t_pow(-1)).to_string() == "t + t^-1");
}

TEST_CASE("ring operations and canonical form") {
    Scalar ring = Scalar::t_pow(1) + Scalar::t_pow(-1);
    CHECK((ring + (-ring)).is_zero());
    CHECK(ring * ring == Scalar::t_pow(2) + Scalar(2) + Scalar::t_pow(-2));

    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        Scalar s = rand_scalar(rng);
        CHECK(Scalar(1) * s == s);
        CHECK((s - s).is_zero());
    }
}

TEST_CASE("exact division against the long-division oracle") {
    Scalar ring = Scalar::t_pow(1) + Scalar::t_pow(-1);
    Scalar square = ring * ring;
    bool exact = false;
    Scalar expected = oracle_div(square, ring, exact);
    REQUIRE(exact);
    CHECK(div_exact(square, ring) == expected);
    CHECK(div_exact(square, ring) == ring);

    // Monomial divisors shift exponents.
    Scalar a = Scalar(3) * Scalar::t_pow(4) + Scalar::t_pow(-1);
    CHECK(div_exact(a, Scalar::t_pow(2)) == Scalar(3) * Scalar::t_pow(2) + Scalar::t_pow(-3));

    Scalar t_plus = Scalar::t_pow(1) + Scalar(1);
    Scalar t_minus = Scalar::t_pow(1) - Scalar(1);
    oracle_div(t_plus, t_minus, exact);
    REQUIRE_FALSE(exact);
    CHECK_THROWS_AS(div_exact(t_plus, t_minus), NotExactDivision);
    CHECK_THROWS_AS(div_exact(t_plus, Scalar()), DivisionByZero);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Scalar x = rand_scalar(rng), y = rand_scalar(rng);
        if (y.is_zero()) continue;
        CHECK(div_exact(x * y, y) == x);
        bool ok = false;
        Scalar q = oracle_div(x * y, y, ok);
        REQUIRE(ok);
        CHECK(q == x);
    }
}

TEST_CASE("fraction normalization") {
    Scalar ring = Scalar::t_pow(1) + Scalar::t_pow(-1);
    ScalarFraction f(Scalar(1), ring);
    CHECK(f.numerator() == Scalar::t_pow(1));
    CHECK(f.denominator() == Scalar::t_pow(2) + Scalar(1));
    CHECK(f.denominator().min_exponent() == 0);
    CHECK(f.denominator().coefficient(0) == 1);
    CHECK(f.to_string() == "(t)/(t^2 + 1)");

    CHECK(ScalarFraction(Scalar(), ring).is_zero());
    CHECK_THROWS_AS(ScalarFraction(Scalar(1), Scalar()), DivisionByZero);
    CHECK_THROWS_AS(ScalarFraction(Scalar(0)).inverse(), DivisionByZero);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng);
        if (a.is_zero() || b.is_zero()) continue;
        ScalarFraction x(a, b);
        CHECK(x * x.inverse() == ScalarFraction(Scalar(1)));
        // Re-normalizing changes nothing.
        CHECK(ScalarFraction(x.numerator(), x.denominator()) == x);
        ScalarFraction sum = x + (-x);
        CHECK(sum.is_zero());
    }

    // Common factors are cancelled: (t^2 - 1)/(t - 1) = t + 1.
    Scalar num = Scalar::t_pow(2) - Scalar(1);
    Scalar den = Scalar::t_pow(1) - Scalar(1);
    ScalarFraction g(num, den);
    CHECK(g == ScalarFraction(Scalar::t_pow(1) + Scalar(1)));
}

TEST_CASE("evaluation at t=1") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng);
        CHECK((a + b).evaluate_at_one() == a.evaluate_at_one() + b.evaluate_at_one());
        CHECK((a * b).evaluate_at_one() == a.evaluate_at_one() * b.evaluate_at_one());
    }
}

TEST_CASE("canonical text") {
    Scalar s = Scalar(Rational(3, 2)) * Scalar::t_pow(2) + Scalar(1) - Scalar::t_pow(-4);
    CHECK(s.to_string() == "3/2*t^2 + 1 - t^-4");
    CHECK(Scalar().to_string() == "0");
    CHECK((-Scalar::t_pow(3)).to_string() == "-t^3");
}
