#pragma once

#include <optional>
#include <string>

#include "gf/poly.hpp"

namespace gf {

/// Rational function in normal form: numerator and denominator coprime,
/// denominator primitive-integer with positive leading coefficient, the
/// rational scale carried by the numerator. The representation is unique.
class RatFunc {
 public:
  RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
  RatFunc(const Poly& n, const Poly& d);
  static RatFunc from_poly(const Poly& p) { return RatFunc(p, Poly::one()); }
  static RatFunc constant(const Rat& v) { return from_poly(Poly::constant(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Degree as a morphism P^1 -> P^1.
  int map_degree() const;

  /// Exact value, or nullopt for a pole.
  std::optional<Rat> eval(const Rat& t) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  /// Substitute a rational function for the variable of a polynomial.
  static RatFunc compose_poly(const Poly& f, const RatFunc& inner);

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

std::optional<Rat> ratfunc_eval(const RatFunc& r, const Rat& t);

/// Parse "num / den" where both sides follow the polynomial grammar; a bare
/// polynomial is also accepted. Top-level '/' splits at depth zero only.
RatFunc parse_ratfunc(const std::string& text);

}  // namespace gf
