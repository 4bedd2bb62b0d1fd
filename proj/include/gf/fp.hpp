#pragma once

#include <cstdint>
#include <vector>

#include "gf/poly.hpp"

namespace gf {

/// Dense polynomial over F_p (p an odd prime < 2^31), coefficients in [0, p).
struct FpPoly {
  uint64_t p = 0;
  std::vector<uint64_t> c;  // index = degree, no trailing zeros

  int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint64_t lc() const { return c.back(); }
  uint64_t coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  uint64_t eval(uint64_t x) const;
};

FpPoly fp_reduce(const Poly& f, uint64_t p);  // throws if a denominator vanishes mod p
FpPoly fp_from_coeffs(uint64_t p, std::vector<uint64_t> coeffs);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, uint64_t s);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic
FpPoly fp_monic(const FpPoly& a);
/// g = gcd(a,b) together with s,t: s*a + t*b = g.
struct FpXgcd {
  FpPoly g, s, t;
};
FpXgcd fp_xgcd(const FpPoly& a, const FpPoly& b);
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod);

uint64_t fp_inv(uint64_t a, uint64_t p);
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p);

bool fp_is_irreducible(const FpPoly& f);
/// Monic irreducible of degree r with the smallest base-p coefficient encoding.
FpPoly fp_least_irreducible(uint64_t p, int r);

/// Arithmetic context for F_{p^r} = F_p[z]/(m), elements as coefficient
/// vectors of length r. Built for the point-counting kernels.
class FqCtx {
 public:
  FqCtx(uint64_t p, int r);  // modulus = least irreducible of degree r

  uint64_t p() const { return p_; }
  int r() const { return r_; }
  const FpPoly& modulus() const { return mod_; }
  uint64_t q_size_check() const;  // p^r, throws on overflow past 2^62

  using Elem = std::vector<uint64_t>;
  Elem zero() const { return Elem(r_, 0); }
  Elem one() const;
  Elem from_fp(uint64_t a) const;
  void mul(const Elem& a, const Elem& b, Elem& out) const;
  void add(const Elem& a, const Elem& b, Elem& out) const;
  Elem pow(Elem base, Int e) const;
  bool is_zero(const Elem& a) const;

  /// Quadratic character via the norm to F_p: 0, 1 or -1.
  int chi(const Elem& a) const;
  /// Norm to F_p (product of Frobenius conjugates).
  uint64_t norm(const Elem& a) const;

  /// Enumeration: advance the coefficient odometer; returns false after the
  /// last element. Start from zero().
  bool next(Elem& a) const;

 private:
  uint64_t p_;
  int r_;
  FpPoly mod_;
  std::vector<std::vector<uint64_t>> red_;   // x^(r+k) reduced, k = 0..r-2
  std::vector<std::vector<uint64_t>> frob_;  // Frobenius matrix columns: (x^j)^p
  std::vector<int8_t> chi_table_;            // Legendre table over F_p
};

}  // namespace gf
