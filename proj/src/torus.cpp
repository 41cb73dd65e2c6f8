#include "gl2skein/torus.hpp"

#include <numeric>
#include <string>

namespace gl2skein {

TorusElement TorusElement::single(const TorusWord& word, const Scalar& coefficient) {
    TorusElement e;
    e.add(word, coefficient);
    return e;
}

Scalar TorusElement::coefficient(const TorusWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Scalar() : it->second;
}

void TorusElement::add(const TorusWord& word, const Scalar& coefficient) {
    if (coefficient.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(word, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

TorusElement operator*(const Scalar& c, const TorusElement& e) {
    TorusElement out;
    for (const auto& [w, coeff] : e.terms_) out.add(w, c * coeff);
    return out;
}

TorusElement operator-(const TorusElement& e) {
    return Scalar(-1) * e;
}

TorusElement t_curve(long m, long n) {
    if (m == 0 && n == 0) return Scalar(2) * TorusElement::identity();
    TorusWord w;
    w.has_t = true;
    if (m > 0 || (m == 0 && n > 0)) {
        w.tm = m;
        w.tn = n;
    } else {
        // T(m,n) = T(-m,-n) * W(m,n) for pairs outside the cone.
        w.tm = -m;
        w.tn = -n;
        w.wr = m;
        w.ws = n;
    }
    return TorusElement::single(w, Scalar(1));
}

TorusElement wedge(long r, long s) {
    TorusWord w;
    w.wr = r;
    w.ws = s;
    return TorusElement::single(w, Scalar(1));
}

namespace {

// Right-multiplies every word by W(r,s).  The 2-labeled part is the rightmost
// factor of a word, so merging contributes t^{2(wr*s - ws*r)} per word.
TorusElement append_wedge(const TorusElement& e, long r, long s) {
    if (r == 0 && s == 0) return e;
    TorusElement out;
    for (const auto& [w, c] : e.terms()) {
        TorusWord merged = w;
        merged.wr += r;
        merged.ws += s;
        out.add(merged, c * Scalar::t_pow(2 * (w.wr * s - w.ws * r)));
    }
    return out;
}

// Product of two curve generators by the product-to-sum rule:
// T(m,n)*T(r,s) = T(m+r,n+s) + T(m-r,n-s)*W(r,s).
TorusElement t_mul(long m, long n, long r, long s) {
    return t_curve(m + r, n + s) + append_wedge(t_curve(m - r, n - s), r, s);
}

TorusElement word_mul(const TorusWord& a, const TorusWord& b, const Scalar& coefficient) {
    Scalar c = coefficient;
    // Commute the left word's 2-labeled part past the right word's curve part:
    // W(r,s)*T(m,n) = t^{-2(ms - nr)} T(m,n)*W(r,s).
    if (b.has_t && (a.wr != 0 || a.ws != 0)) {
        c *= Scalar::t_pow(-2 * (b.tm * a.ws - b.tn * a.wr));
    }
    TorusElement core;
    if (a.has_t && b.has_t) {
        core = t_mul(a.tm, a.tn, b.tm, b.tn);
    } else if (a.has_t) {
        core = t_curve(a.tm, a.tn);
    } else if (b.has_t) {
        core = t_curve(b.tm, b.tn);
    } else {
        core = TorusElement::identity();
    }
    core = append_wedge(core, a.wr, a.ws);
    core = append_wedge(core, b.wr, b.ws);
    return c * core;
}

}  // namespace

TorusElement mul(const TorusElement& a, const TorusElement& b) {
    TorusElement out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            out += word_mul(wa, wb, ca * cb);
        }
    }
    return out;
}

std::pair<long, long> homology_class(const TorusWord& word) {
    long m = word.has_t ? word.tm : 0;
    long n = word.has_t ? word.tn : 0;
    return {m + 2 * word.wr, n + 2 * word.ws};
}

TorusElement standard_curve(long m, long n) {
    long d = std::gcd(m < 0 ? -m : m, n < 0 ? -n : n);
    if (d == 1) return t_curve(m, n);
    if (d == 2) return t_curve(m, n) + Scalar(2) * wedge(m / 2, n / 2);
    throw UnsupportedGcd("standard_curve undefined for gcd " + std::to_string(d));
}

}  // namespace gl2skein
