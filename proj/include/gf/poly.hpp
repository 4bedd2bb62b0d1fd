#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "gf/numbers.hpp"

namespace gf {

/// Univariate polynomial over Q, stored as a rational content times a
/// primitive integer coefficient vector (index = degree, positive leading
/// coefficient). The split makes equality bit-exact and keeps gcd work over Z.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly one() { return constant(Rat(1)); }
  static Poly variable();  // x
  static Poly constant(const Rat& v);
  static Poly monomial(const Rat& coef, int deg);
  static Poly from_int_coeffs(std::vector<Int> coeffs);
  static Poly from_rat_coeffs(const std::vector<Rat>& coeffs);

  bool is_zero() const { return prim_.empty(); }
  int degree() const { return prim_.empty() ? kZeroDegree : static_cast<int>(prim_.size()) - 1; }
  const Rat& content() const { return content_; }
  const std::vector<Int>& primitive() const { return prim_; }
  Rat coeff(int i) const;
  Rat lc() const;
  bool is_integral() const;  // content has denominator 1

  Rat eval(const Rat& t) const;
  /// Homogeneous evaluation: b^degree * f(a/b), an integer when f is integral.
  Int eval_homogeneous_int(const Int& a, const Int& b) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly derivative() const;
  Poly pow(unsigned e) const;

  /// Quotient and remainder over Q; b nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact division; throws if the remainder is nonzero.
  static Poly div_exact(const Poly& a, const Poly& b);

  /// Monic greatest common divisor (primitive PRS over Z underneath).
  /// gcd(f, 0) = monic(f); gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly monic() const;

  std::string str() const;  // canonical text form, see polytext.hpp

 private:
  void normalize(std::vector<Rat> coeffs);
  Rat content_ = Rat(0);
  std::vector<Int> prim_;  // primitive, ascending, positive leading coeff
};

/// Yun squarefree decomposition of a nonzero f: returns [(P1,1),(P2,2),...]
/// with f = content * prod Pi^i, each Pi primitive squarefree, pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Squarefree part w with f = c * h^2 * w for a rational c > 0: w squarefree,
/// integer coefficients, content 1, leading sign matching f. Rejects f = 0.
Poly squarefree_part(const Poly& f);

/// f = s^2 * h^2 * w exactly: w a squarefree integer polynomial with squarefree
/// content and leading sign matching f; h primitive integer; s rational.
struct SquareDecomposition {
  Poly w;
  Poly h;
  Rat s;
};
SquareDecomposition square_decompose(const Poly& f);

/// Exactly the rational roots of a nonzero f (rational-root theorem on the
/// primitive integer form).
std::vector<Rat> rational_roots(const Poly& f);

bool is_squarefree(const Poly& f);

/// Discriminant of a cubic a*x^3+b*x^2+c*x+d.
Rat cubic_discriminant(const Poly& f);

}  // namespace gf
