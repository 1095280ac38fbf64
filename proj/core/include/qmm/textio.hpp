#pragma once

#include <string>

#include "qmm/poly.hpp"

namespace qmm {

/// Wire format for words and mixed monomials:
///   generators   "a[i,j]", space separated, left factor first;
///   x variables  "x[i]^e" appended after the word, indices ascending;
///   coefficient  "(<LaurentPoly>)" prefix when not 1.
/// Terms are joined by "  +  " (two spaces around the plus) so that the
/// single-space word separator stays unambiguous.  The empty monomial prints
/// as "1".
std::string to_text(const Word& w);
std::string to_text(const MixedMonomial& m);
std::string to_text(const NCPoly& p);
std::string to_text(const MixedPoly& p);

/// Parse a single monomial "a[1,2] a[2,1] x[1]^-1 x[2]^3" (no coefficient).
/// `rank` sizes the x-exponent vector.  Throws std::invalid_argument on
/// malformed input or indices outside 1..rank.
MixedMonomial parse_monomial(const std::string& text, int rank);

}  // namespace qmm
