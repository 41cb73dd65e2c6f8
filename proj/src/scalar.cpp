#include "gl2skein/scalar.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace gl2skein {

namespace {

// Dense ordinary polynomial in t, nonzero leading coefficient, used only for
// the division/gcd internals.  poly[0] is the constant term.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Splits a nonzero Laurent polynomial as t^shift * P with P(0) != 0.
std::pair<long, Poly> split_shift(const Scalar& s) {
    long shift = s.min_exponent();
    Poly p(static_cast<std::size_t>(s.max_exponent() - shift + 1), Rational(0));
    for (const auto& [e, c] : s.terms()) p[static_cast<std::size_t>(e - shift)] = c;
    return {shift, p};
}

Scalar from_poly(const Poly& p, long shift) {
    Scalar out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) out += Scalar(p[i]) * Scalar::t_pow(shift + static_cast<long>(i));
    }
    return out;
}

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        Rational factor = a.back() / b.back();
        std::size_t offset = a.size() - b.size();
        q[offset] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[offset + i] -= factor * b[i];
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    return {q, a};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.empty()) {
        auto [q, r] = poly_divmod(std::move(a), b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.empty()) throw NotExactDivision();
    return q;
}

}  // namespace

Scalar::Scalar(const Rational& value) {
    // Two-argument mpq construction does not reduce; everything funnels
    // through here, so canonicalize once.
    Rational v = value;
    v.canonicalize();
    if (v != 0) terms_[0] = v;
}

Scalar Scalar::t_pow(long k) {
    Scalar s;
    s.terms_[k] = 1;
    return s;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long Scalar::min_exponent() const {
    if (is_zero()) throw DomainError("min_exponent of zero");
    return terms_.begin()->first;
}

long Scalar::max_exponent() const {
    if (is_zero()) throw DomainError("max_exponent of zero");
    return terms_.rbegin()->first;
}

Rational Scalar::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Scalar::evaluate_at_one() const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        (void)e;
        sum += c;
    }
    return sum;
}

void Scalar::add_term(long exponent, const Rational& coefficient) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        if (coefficient != 0) terms_.emplace(exponent, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

Scalar& Scalar::operator+=(const Scalar& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    *this = *this * other;
    return *this;
}

Scalar operator-(const Scalar& a) {
    Scalar out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Decreasing exponent order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long e = it->first;
        Rational c = it->second;
        bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        Rational mag = negative ? Rational(-c) : c;
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            if (e == 1) {
                os << 't';
            } else {
                os << "t^" << e;
            }
        }
        first = false;
    }
    return os.str();
}

Scalar div_exact(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Scalar();
    auto [sa, pa] = split_shift(a);
    auto [sb, pb] = split_shift(b);
    Poly q = poly_div_exact(pa, pb);
    return from_poly(q, sa - sb);
}

ScalarFraction::ScalarFraction(const Scalar& numerator, const Scalar& denominator)
    : numerator_(numerator), denominator_(denominator) {
    if (denominator_.is_zero()) throw DivisionByZero("fraction with zero denominator");
    normalize();
}

void ScalarFraction::normalize() {
    if (numerator_.is_zero()) {
        denominator_ = Scalar(1);
        return;
    }
    auto [sn, pn] = split_shift(numerator_);
    auto [sd, pd] = split_shift(denominator_);
    Poly g = poly_gcd(pn, pd);
    if (g.size() > 1) {
        pn = poly_div_exact(pn, g);
        pd = poly_div_exact(pd, g);
    }
    // Scale so the denominator has constant coefficient 1.
    Rational c = pd[0];
    for (auto& v : pn) v /= c;
    for (auto& v : pd) v /= c;
    numerator_ = from_poly(pn, sn - sd);
    denominator_ = from_poly(pd, 0);
}

ScalarFraction ScalarFraction::inverse() const {
    if (numerator_.is_zero()) throw DivisionByZero("inverse of zero fraction");
    return ScalarFraction(denominator_, numerator_);
}

ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b) {
    return ScalarFraction(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                          a.denominator_ * b.denominator_);
}

ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b) {
    return ScalarFraction(a.numerator_ * b.denominator_ - b.numerator_ * a.denominator_,
                          a.denominator_ * b.denominator_);
}

ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b) {
    return ScalarFraction(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

ScalarFraction operator-(const ScalarFraction& a) {
    ScalarFraction out = a;
    out.numerator_ = -out.numerator_;
    return out;
}

std::string ScalarFraction::to_string() const {
    if (denominator_.is_one()) return numerator_.to_string();
    return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

}  // namespace gl2skein
