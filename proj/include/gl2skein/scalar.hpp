#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "gl2skein/errors.hpp"

namespace gl2skein {

using Rational = mpq_class;

/// Laurent polynomial in the quantum parameter t with exact rational
/// coefficients.  The representation is canonical: a map from exponent to a
/// nonzero coefficient, so two values are equal iff the maps are identical.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : Scalar(Rational(value)) {}  // NOLINT: implicit by design
    Scalar(const Rational& value);                   // NOLINT: implicit by design

    /// The monomial t^k.
    static Scalar t_pow(long k);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Exactly one term.
    bool is_monomial() const { return terms_.size() == 1; }

    /// Lowest/highest exponent; both require a nonzero value.
    long min_exponent() const;
    long max_exponent() const;

    /// Coefficient of t^exponent (zero if absent).
    Rational coefficient(long exponent) const;

    const std::map<long, Rational>& terms() const { return terms_; }

    /// Sum of all coefficients; a ring homomorphism to the rationals.
    Rational evaluate_at_one() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.terms_ < b.terms_; }

    /// Canonical text, terms in strictly decreasing exponent order,
    /// e.g. "3/2*t^2 + 1 - t^-4".
    std::string to_string() const;

private:
    std::map<long, Rational> terms_;

    void add_term(long exponent, const Rational& coefficient);
};

/// Exact quotient q with q*b == a in the Laurent ring.
/// Throws DivisionByZero when b == 0 and NotExactDivision when no such q exists.
Scalar div_exact(const Scalar& a, const Scalar& b);

/// Reduced quotient of two Laurent polynomials.  Normal form: the denominator
/// is an ordinary polynomial with lowest exponent 0 and constant coefficient 1,
/// and shares no non-unit polynomial factor with the numerator.  Equality is a
/// plain component comparison.
class ScalarFraction {
public:
    ScalarFraction() : numerator_(), denominator_(Scalar(1)) {}
    ScalarFraction(const Scalar& value) : numerator_(value), denominator_(Scalar(1)) {}  // NOLINT
    ScalarFraction(const Scalar& numerator, const Scalar& denominator);

    const Scalar& numerator() const { return numerator_; }
    const Scalar& denominator() const { return denominator_; }

    bool is_zero() const { return numerator_.is_zero(); }
    bool is_one() const { return numerator_.is_one() && denominator_.is_one(); }

    ScalarFraction inverse() const;

    friend ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b);
    friend ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b);
    friend ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b);
    friend ScalarFraction operator-(const ScalarFraction& a);

    friend bool operator==(const ScalarFraction& a, const ScalarFraction& b) {
        return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
    }
    friend bool operator!=(const ScalarFraction& a, const ScalarFraction& b) { return !(a == b); }

    /// "(num)/(den)", or the plain numerator text when the denominator is 1.
    std::string to_string() const;

private:
    Scalar numerator_;
    Scalar denominator_;

    void normalize();
};

inline ScalarFraction frac(const Scalar& numerator, const Scalar& denominator) {
    return ScalarFraction(numerator, denominator);
}

}  // namespace gl2skein
