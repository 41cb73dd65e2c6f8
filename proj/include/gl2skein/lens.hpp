#pragma once

#include <utility>
#include <vector>

#include "gl2skein/action.hpp"
#include "gl2skein/annulus.hpp"
#include "gl2skein/torus.hpp"

namespace gl2skein {

/// Integer matrix (a p; b q) of determinant -1 describing how the two solid
/// tori of L(p,q) are glued, with a kept in the absolute-minimal residue
/// class mod p.
struct GluingMatrix {
    long a = 0;
    long b = 1;
    long p = 1;
    long q = 0;

    /// Grid radius floor(p/2).
    long half() const { return p / 2; }
};

/// Builds the normalized gluing matrix for L(p,q).
/// Throws DomainError unless p >= 1 and gcd(p,q) == 1.
GluingMatrix gluing_for(long p, long q);

/// Absolute-minimal remainder: returns (s0, w) with w = x + p*s0,
/// |w| <= floor(p/2), and s0 the lowest integer achieving the minimum.
std::pair<long, long> abs_min_remainder(long x, long p);

/// Writes n = m*a + k*p with m in the absolute-minimal residue class of
/// n*a^{-1} mod p (ties resolved to the positive representative); (0, n)
/// when p == 1.
std::pair<long, long> solve_ma_kp(long n, const GluingMatrix& G);

/// The antihomomorphism induced by the gluing: word factors are reversed and
/// both index pairs are pushed through the matrix.
TorusElement f_push(const TorusElement& element, const GluingMatrix& G);

/// One summand of a formal tensor: coeff * (left (x) right).
struct LensTerm {
    AnnulusElement left;
    AnnulusElement right;
    Scalar coeff;
};

/// Formal sum of tensors of two annulus elements.  The tensor relations are
/// applied by operations (balance, reduce), never stored.
class LensElement {
public:
    LensElement() = default;

    static LensElement tensor(const AnnulusElement& left, const AnnulusElement& right,
                              const Scalar& coeff = Scalar(1));

    void add_term(const AnnulusElement& left, const AnnulusElement& right, const Scalar& coeff);
    const std::vector<LensTerm>& terms() const { return terms_; }
    bool is_zero() const;

    LensElement& operator+=(const LensElement& other);
    friend LensElement operator*(const Scalar& c, const LensElement& e);

private:
    std::vector<LensTerm> terms_;
};

/// Coordinates on the spanning grid {(n) W(m) (x) 1} with 0 <= n <= floor(p/2)
/// and |m| <= floor(p/2).
class SpanningCoordinates {
public:
    explicit SpanningCoordinates(long p) : p_(p) {}

    long p() const { return p_; }
    long half() const { return p_ / 2; }

    void add(long n, long m, const ScalarFraction& value);
    const std::map<std::pair<long, long>, ScalarFraction>& grid() const { return grid_; }

    friend bool operator==(const SpanningCoordinates& a, const SpanningCoordinates& b) {
        return a.p_ == b.p_ && a.grid_ == b.grid_;
    }
    friend bool operator!=(const SpanningCoordinates& a, const SpanningCoordinates& b) {
        return !(a == b);
    }

private:
    long p_;
    std::map<std::pair<long, long>, ScalarFraction> grid_;
};

/// Moves every right tensor factor to the left: the right factor is written
/// in the T-form basis, each word is lifted to the torus with meridian
/// index zero, pushed through f_push and applied to the left factor.
LensElement balance(const LensElement& e, const GluingMatrix& G);

enum class PeriodDirection { down, up };

/// The winding-period identity on T-form words over L(p,q):
///   (k)_T W(l+p) (x) 1  =  t^{2q(p+k+2l)} (k)_T W(l) (x) 1.
/// Down maps (k,l) to (k,l-p); up is its exact inverse.
std::pair<std::pair<long, long>, Scalar> wedge_period(std::pair<long, long> kl,
                                                      const GluingMatrix& G,
                                                      PeriodDirection direction);

struct ReduceOptions {
    long step_budget = 1000000;
};

/// Grid coordinates of x(am+kp, bm+kq) * y(ar+ps, br+qs) (x) 1.
SpanningCoordinates reduce_xy(long m, long k, long r, long s, const GluingMatrix& G,
                              const ReduceOptions& options = {});

/// Full reduction of a lens element to the spanning grid.
/// Throws StepLimitExceeded when the move budget runs out.
SpanningCoordinates reduce(const LensElement& e, const GluingMatrix& G,
                           const ReduceOptions& options = {});

/// Rectangular window of canonical annulus words: cores in [0, core_max],
/// winding indices in [-winding_max, winding_max].
struct Window {
    long core_max = 0;
    long winding_max = 0;
};

/// A linear combination of (x) 1 basis words that is zero in the module.
using Relation = std::map<AnnulusWord, ScalarFraction>;

/// Relations obtained by acting with small pushed-through generators and
/// balancing back, expanded over all T-form words inside the window.  Only
/// relations fully supported inside the window are returned.
std::vector<Relation> relation_set(const GluingMatrix& G, const Window& window);

/// Guaranteed-terminating reduction: Gaussian elimination of relation_set
/// over the fraction field, eliminating every non-grid word in the window.
/// Throws WindowTooSmall when elimination cannot reach the grid.
SpanningCoordinates reduce_solver(const LensElement& e, const GluingMatrix& G,
                                  const Window& window);

/// Eliminates the relations that hold among the grid words themselves (for
/// even p the two boundary winding columns are one period apart, so the
/// spanning set is not independent).  Two coordinate vectors represent the
/// same module element iff their folded forms are identical.
SpanningCoordinates fold_grid_relations(const SpanningCoordinates& coords,
                                        const GluingMatrix& G);

}  // namespace gl2skein
