#pragma once

#include <string>

#include "gf/poly.hpp"

namespace gf {

/// Parse the interchange grammar: caret powers, explicit '*', integer or a/b
/// coefficients, parentheses, e.g. "(x^3-4*x^2+3*x+1)*(x^4-10*x^3+27*x^2-10*x-27)".
/// Any single variable letter is accepted; mixing two letters is an error.
/// Errors carry the offending position.
Poly parse_poly(const std::string& text);

/// Canonical expanded form, e.g. "x^3-4*x^2+3*x+1". parse(print(f)) == f.
std::string poly_to_string(const Poly& f, char var = 'x');

}  // namespace gf
