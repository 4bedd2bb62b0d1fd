#include "gf/ratfunc.hpp"

#include <stdexcept>

#include "gf/polytext.hpp"

namespace gf {

RatFunc::RatFunc(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (n.is_zero()) {
    num_ = Poly::zero();
    den_ = Poly::one();
    return;
  }
  Poly g = Poly::gcd(n, d);
  Poly nn = Poly::div_exact(n, g);
  Poly dd = Poly::div_exact(d, g);
  // Denominator primitive with positive leading coefficient; scale to numerator.
  Rat dc = dd.content();
  den_ = Poly::from_int_coeffs(dd.primitive());
  num_ = (Rat(1) / dc) * nn;
}

int RatFunc::map_degree() const { return std::max(num_.degree(), den_.degree()); }

std::optional<Rat> RatFunc::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (sign(d) == 0) return std::nullopt;  // coprime normal form: numerator nonzero here
  return num_.eval(t) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::compose_poly(const Poly& f, const RatFunc& inner) {
  RatFunc acc = RatFunc::constant(Rat(0));
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * inner + RatFunc::constant(f.coeff(i));
  }
  return acc;
}

std::string RatFunc::str() const {
  if (den_.degree() == 0 && den_.lc() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::optional<Rat> ratfunc_eval(const RatFunc& r, const Rat& t) { return r.eval(t); }

RatFunc parse_ratfunc(const std::string& text) {
  // A bare polynomial wins; rational coefficients like "1/2*x" stay coefficients.
  try {
    return RatFunc::from_poly(parse_poly(text));
  } catch (const std::invalid_argument&) {
  }
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      std::string lhs = text.substr(0, i), rhs = text.substr(i + 1);
      try {
        return RatFunc(parse_poly(lhs), parse_poly(rhs));
      } catch (const std::invalid_argument&) {
        continue;
      }
    }
  }
  throw std::invalid_argument("cannot parse rational function: " + text);
}

}  // namespace gf
