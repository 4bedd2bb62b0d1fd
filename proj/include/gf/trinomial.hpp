#pragma once

#include <optional>

#include "gf/numbers.hpp"
#include "gf/poly.hpp"

namespace gf {

/// Curves y^2 = a x^d + b x with d odd, 3 <= d <= 13 and d-1 dividing 12.
/// Their Frobenius eigenvalues are multiplicative character sums, which makes
/// the zeta numerator reachable at primes where enumeration of F_{p^g} is not.
struct TrinomialShape {
  Int a;  // leading coefficient
  Int b;  // linear coefficient
  int d;  // odd exponent
};

std::optional<TrinomialShape> trinomial_shape(const Poly& w);

/// L-polynomial (zeta numerator) coefficients of y^2 = a x^d + b x over F_p,
/// ascending, degree 2g = d - 1, constant term 1. Good odd p only.
std::vector<Int> trinomial_lpoly(const TrinomialShape& shape, uint64_t p);

}  // namespace gf
