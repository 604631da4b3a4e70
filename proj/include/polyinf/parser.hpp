#pragma once

#include <string>

#include "polyinf/multipoly.hpp"

namespace polyinf {

/// Parse a polynomial in x and y. Literals are integers or decimals,
/// products need an explicit '*', exponents are nonnegative integers, and
/// '/' is allowed only by a nonzero constant. Throws ParseError, or
/// UnsupportedInput for any other variable name.
MultiPoly parse_poly(const std::string& text);

}  // namespace polyinf
