#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "gl2skein/scalar.hpp"

namespace gl2skein {

/// Basis word of the torus algebra: an optional oriented-curve part T(m,n)
/// followed by a 2-labeled part W(r,s).  The curve part is kept inside the
/// cone m > 0, or m == 0 and n > 0; everything else is rewritten on
/// construction through t_curve.
struct TorusWord {
    bool has_t = false;
    long tm = 0;
    long tn = 0;
    long wr = 0;
    long ws = 0;

    bool is_identity() const { return !has_t && wr == 0 && ws == 0; }

    friend bool operator==(const TorusWord& a, const TorusWord& b) {
        return a.key() == b.key();
    }
    friend bool operator<(const TorusWord& a, const TorusWord& b) { return a.key() < b.key(); }

    // Curve-bearing words order (and print) before pure 2-labeled words.
    std::tuple<bool, long, long, long, long> key() const {
        return {!has_t, tm, tn, wr, ws};
    }
};

/// Finite linear combination of torus basis words over the Laurent ring.
class TorusElement {
public:
    TorusElement() = default;

    static TorusElement zero() { return {}; }
    static TorusElement identity() { return single(TorusWord{}, Scalar(1)); }
    static TorusElement single(const TorusWord& word, const Scalar& coefficient);

    bool is_zero() const { return terms_.empty(); }
    const std::map<TorusWord, Scalar>& terms() const { return terms_; }
    Scalar coefficient(const TorusWord& word) const;

    void add(const TorusWord& word, const Scalar& coefficient);

    TorusElement& operator+=(const TorusElement& other);
    TorusElement& operator-=(const TorusElement& other);

    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const Scalar& c, const TorusElement& e);
    friend TorusElement operator-(const TorusElement& e);

    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

private:
    std::map<TorusWord, Scalar> terms_;
};

/// The curve T(m,n), rewritten into the basis: (0,0) gives twice the
/// identity, cone pairs give the bare word, and the remaining pairs give
/// T(-m,-n)*W(m,n).
TorusElement t_curve(long m, long n);

/// The 2-labeled curve W(r,s); W(0,0) is the identity.
TorusElement wedge(long r, long s);

/// Noncommutative product, fully normalized.
TorusElement mul(const TorusElement& a, const TorusElement& b);

/// Z^2 homology class of a word: (m + 2r, n + 2s).
std::pair<long, long> homology_class(const TorusWord& word);

/// The simple multicurve with homology class (m,n) expressed in the basis.
/// Defined for gcd(m,n) in {1,2} only; throws UnsupportedGcd otherwise.
TorusElement standard_curve(long m, long n);

}  // namespace gl2skein
