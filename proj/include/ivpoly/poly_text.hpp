#ifndef IVPOLY_POLY_TEXT_HPP
#define IVPOLY_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "ivpoly/intpoly.hpp"

namespace ivpoly {

/// Parses either the comma form "2,1,1" (ascending coefficients) or the
/// human form "X^2+X+2". Throws std::invalid_argument with a one-line
/// message on malformed input.
IntPoly parse_poly(std::string_view text);

/// Comma form, ascending coefficients; "0" for the zero polynomial.
std::string emit_poly(const IntPoly& f);

/// Human form with X and ^, for diagnostics.
std::string pretty_poly(const IntPoly& f);

}  // namespace ivpoly

#endif
