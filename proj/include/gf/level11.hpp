#pragma once

#include <optional>

#include "gf/models.hpp"

namespace gf {

/// The rank-1 curve y^2 + y = x^3 - x^2 - 7x + 10 carrying the degree-55
/// map to the j-line, generated by (4, 5).
const EllipticQ& level11_curve();
ECPoint level11_generator();

/// Exact j-value of the degree-55 map at an affine rational point; nullopt at
/// the poles (cusps). Values at common zeros of numerator and denominator
/// factors are resolved by local series expansion, so every affine rational
/// point gets its true value. The point at infinity is rejected.
std::optional<Rat> level11_J(const ECPoint& p);

}  // namespace gf
