#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf/catalog.hpp"
#include "gf/ratfunc.hpp"

namespace gf {

/// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct ECPoint {
  bool infinity = true;
  Rat x, y;
  static ECPoint at_infinity() { return ECPoint{}; }
  static ECPoint affine(Rat xx, Rat yy) { return ECPoint{false, std::move(xx), std::move(yy)}; }
  bool operator==(const ECPoint&) const = default;
};

class EllipticQ {
 public:
  EllipticQ(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);
  Rat a1, a2, a3, a4, a6;
  Rat discriminant() const;
  bool on_curve(const ECPoint& p) const;
  ECPoint neg(const ECPoint& p) const;
  ECPoint add(const ECPoint& p, const ECPoint& q) const;  // inputs checked
  ECPoint mul(long n, const ECPoint& p) const;
};

struct ZeroDimensionalFiber : std::domain_error {
  ZeroDimensionalFiber() : std::domain_error("fiber of a constant j-map is zero-dimensional") {}
};

struct HyperellipticModel {
  Poly w;     // squarefree, integer coefficients
  int genus;  // floor((deg w - 1)/2)
};

int hyperelliptic_genus(const Poly& w);

/// Reduce s^2 + 1728 = j(t) to y^2 = w(t); the trace records
/// num(j)*den(j) - 1728*den(j)^2 = (s_factor * h)^2 * w.
struct ReduceTrace {
  Poly f, g, h;
  Rat s_factor;
};
HyperellipticModel hyperelliptic_reduce(const RatFunc& j, ReduceTrace* trace = nullptr);

/// Genus of y^m = f(x) for squarefree f (superelliptic, tame).
int genus_superelliptic(int m, const Poly& f);

/// Ramification multiset of a j-map over 0, 1728 and infinity, including the
/// point at infinity of the source line. Verifies that the map branches only
/// over those three values.
struct RamProfile {
  std::vector<int> over_zero, over_1728, over_infty;
  int degree = 0;
};
RamProfile ramification_profile(const RatFunc& j);

/// Genus of the normalized fiber product of two branch-compatible maps
/// (geometrically irreducible case).
int fiber_product_genus(const RatFunc& j1, const RatFunc& j2);

struct CompositeModel {
  std::string left_ref, right_ref;
  JMapRef left, right;
  std::optional<HyperellipticModel> reduced;
  ReduceTrace trace;                // set when reduced
  std::optional<int> genus_rh;     // ramification-formula genus (both maps rational)
  std::vector<std::string> raw_equations;
};

/// Fiber product of two catalog j-maps; the reduction to y^2 = w(t) is taken
/// automatically when one factor is the square-discriminant level-2 map.
CompositeModel fiber_product(const CatalogEntry& left, const CatalogEntry& right);

/// Explicit fixture models.
struct RegistryModel {
  std::string name;
  std::string kind;  // hyperelliptic | superelliptic | plane_quartic | canonical_g4 | system
  std::vector<std::string> equations;
  std::optional<Poly> w;                         // hyperelliptic
  std::optional<std::pair<int, Poly>> ym_eq_f;   // superelliptic y^m = f
  int genus = -1;
  std::vector<std::string> known_points;
  std::string tag;
  std::string note;
};
const RegistryModel& model_registry(const std::string& name);
std::vector<std::string> model_registry_names();
std::string registry_to_json();

}  // namespace gf
