#pragma once

#include <string>

#include "gl2skein/annulus.hpp"
#include "gl2skein/lens.hpp"
#include "gl2skein/torus.hpp"

namespace gl2skein {

/// Expression grammar shared by the CLI and the cache (whitespace
/// insensitive, integers signed decimal):
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | 't' ('^' int)? | atom | '(' expr ')'
///   atom   := 'T(m,n)' | 'W(r,s)'                  torus sort
///           | 'c(n)' | 'w(r)' | 'xT(k)' | 'x(m,n)' | 'y(r,s)'   annulus sort
///
/// Lens inputs add a tensor separator at product level:
///
///   lens   := ['-'] ltens (('+'|'-') ltens)*
///   ltens  := term ['(x)' term]
///
/// Torus and annulus atoms never mix inside one expression (SortError);
/// scalars combine with either sort.
TorusElement parse_torus(const std::string& text);
AnnulusElement parse_annulus(const std::string& text);
LensElement parse_lens(const std::string& text);

/// Deterministic canonical rendering; parse(print(e)) == e.
std::string print_element(const TorusElement& e);
std::string print_element(const AnnulusElement& e);
std::string print_element(const LensElement& e);

}  // namespace gl2skein
