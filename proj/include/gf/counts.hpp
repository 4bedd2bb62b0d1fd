#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gf/fp.hpp"
#include "gf/poly.hpp"

namespace gf {

struct BadPrime : std::domain_error {
  explicit BadPrime(uint64_t p)
      : std::domain_error("bad reduction at p = " + std::to_string(p)) {}
};

/// Point counts and zeta numerator of y^2 = w(x) over F_p.
struct ZetaData {
  uint64_t p = 0;
  int genus = 0;
  std::vector<long> counts;  // N_r, r = 1..genus
  std::vector<Int> p1;       // numerator coefficients, degree 2g, constant 1
  Int p1_at_1() const;
};

/// Good reduction: p odd, p does not divide disc(w) * lc(w).
bool good_reduction(const Poly& w, uint64_t p);

/// #X(F_{p^r}) of the smooth model of y^2 = w(x): affine points plus one point
/// at infinity for odd degree, two (or zero) for even degree depending on
/// whether lc(w) is a square in F_{p^r}.  `max_enum` guards the enumeration.
long count_points(const Poly& w, uint64_t p, int r, uint64_t max_enum = 1000000);
long count_points_serial(const Poly& w, uint64_t p, int r, uint64_t max_enum = 1000000);

/// P1(T) from N_1..N_g via Newton's identities and the functional equation.
ZetaData zeta_numerator(const Poly& w, uint64_t p, uint64_t max_enum = 1000000);

/// P1(1) = #Jac(F_p). Dispatches to the character-sum evaluation for
/// trinomial curves y^2 = a x^d + b x whenever enumeration would overrun.
Int jacobian_order(const Poly& w, uint64_t p, uint64_t max_enum = 1000000);

/// Frobenius characteristic polynomial irreducibility report.
struct FrobeniusReport {
  std::vector<Int> charpoly;  // T^{2g} P1(1/T), integer coefficients
  bool irreducible = false;
  std::vector<std::vector<Int>> factors_found;  // a factor certificate when reducible
};
FrobeniusReport frobenius_charpoly_check(const Poly& w, uint64_t p,
                                         uint64_t max_enum = 1000000);

/// Internal: assemble P1 from power-sum data S_r = p^r + 1 - N_r.
std::vector<Int> p1_from_counts(uint64_t p, int genus, const std::vector<long>& counts);

/// Genus floor((deg-1)/2) without the squarefree check.
int hyperelliptic_genus_unchecked(const Poly& w);

}  // namespace gf
