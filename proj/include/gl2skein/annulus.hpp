#pragma once

#include <map>
#include <utility>

#include "gl2skein/scalar.hpp"

namespace gl2skein {

/// Basis word of the solid-torus algebra: n parallel copies of the core
/// (n >= 0) together with a 2-labeled winding index r.  A reversed core (-n)
/// is stored as the word (n, -n).
struct AnnulusWord {
    long n = 0;
    long r = 0;

    bool is_identity() const { return n == 0 && r == 0; }

    friend bool operator==(const AnnulusWord& a, const AnnulusWord& b) {
        return a.n == b.n && a.r == b.r;
    }
    friend bool operator<(const AnnulusWord& a, const AnnulusWord& b) {
        return a.n != b.n ? a.n < b.n : a.r < b.r;
    }
};

/// Finite linear combination of annulus words; a commutative algebra.
class AnnulusElement {
public:
    AnnulusElement() = default;

    static AnnulusElement zero() { return {}; }
    static AnnulusElement identity() { return single(AnnulusWord{}, Scalar(1)); }
    static AnnulusElement single(const AnnulusWord& word, const Scalar& coefficient);

    bool is_zero() const { return terms_.empty(); }
    const std::map<AnnulusWord, Scalar>& terms() const { return terms_; }
    Scalar coefficient(const AnnulusWord& word) const;

    void add(const AnnulusWord& word, const Scalar& coefficient);

    AnnulusElement& operator+=(const AnnulusElement& other);
    AnnulusElement& operator-=(const AnnulusElement& other);

    friend AnnulusElement operator+(AnnulusElement a, const AnnulusElement& b) { return a += b; }
    friend AnnulusElement operator-(AnnulusElement a, const AnnulusElement& b) { return a -= b; }
    friend AnnulusElement operator*(const Scalar& c, const AnnulusElement& e);
    friend AnnulusElement operator-(const AnnulusElement& e);

    friend bool operator==(const AnnulusElement& a, const AnnulusElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AnnulusElement& a, const AnnulusElement& b) { return !(a == b); }

private:
    std::map<AnnulusWord, Scalar> terms_;
};

/// The n-fold core; negative n is normalized to (|n|, n).
AnnulusElement core(long n);

/// The 2-labeled winding curve.
AnnulusElement wedge1(long r);

/// Commutative product: words multiply by adding both indices.
AnnulusElement mul(const AnnulusElement& u, const AnnulusElement& v);

/// Power-sum-like core family: p0 = 2, p1 = (1),
/// p_k = (1)*p_{k-1} - W(1)*p_{k-2}; for k < 0, p_k = p_{-k}*W(k).
/// Memoized.
AnnulusElement t_core(long k);

/// Image of the torus curve T(m,n) in the annulus.  Seeds
/// x(0,n) = t^n + t^-n and x(+-1,k) = t^{+-k}*(+-1); the rest follows the
/// two-sided second-order recursion.  Memoized.
AnnulusElement x(long m, long n);

/// Image of the torus curve W(r,s): t^{-2rs}*W(r).
AnnulusElement y(long r, long s);

/// Homology degree n + 2r; additive under mul.
long winding(const AnnulusWord& word);

/// Evaluation in the 3-sphere: (n) -> (t + t^-1)^n, W(r) -> 1.
/// A ring homomorphism to the scalars.
Scalar evaluate_unknots(const AnnulusElement& u);

/// Second presentation of the annulus algebra on words (k)_T * W(l) with
/// k >= 0; the pair (0, l) stands for 2*W(l).
using TForm = std::map<std::pair<long, long>, Scalar>;

/// Change of basis into the T-form; triangular in the core index, exact.
TForm to_tform(const AnnulusElement& u);

/// Inverse change of basis.
AnnulusElement from_tform(const TForm& tf);

}  // namespace gl2skein
