#pragma once

#include "gl2skein/annulus.hpp"
#include "gl2skein/torus.hpp"

namespace gl2skein {

/// Image of a torus element in the annulus under the inclusion of the
/// boundary.  On a word T(m,n)*W(r,s) this is t^{-2rn-2rs} * x(m,n) * W(r).
/// Linear, but not an algebra map.
AnnulusElement project(const TorusElement& element);

/// Left action of the torus algebra on the annulus.  A word acts as its
/// 2-labeled part first, then its curve part:
///   W(r,s) . (k)_T W(l)  =  t^{-2s(r+k+2l)} (k)_T W(l+r)
///   T(m,n) . (k)_T W(l)  =  t^{-2nl} W(l) x(m+k,n) + t^{-2n(k+l)} W(k+l) x(m-k,n)
AnnulusElement act(const TorusElement& element, const AnnulusElement& u);

/// Independent computation path for act(A, project(B)): multiply in the torus
/// algebra first, then project.
AnnulusElement act_oracle(const TorusElement& a, const TorusElement& b);

}  // namespace gl2skein
