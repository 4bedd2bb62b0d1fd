#include "gf/level11.hpp"

#include <array>
#include <stdexcept>

namespace gf {

namespace {

// Truncated power series over Q, fixed length.
struct Series {
  std::vector<Rat> c;
  explicit Series(size_t n) : c(n, Rat(0)) {}
};

constexpr size_t kSeriesLen = 48;

Series s_const(const Rat& v) {
  Series s(kSeriesLen);
  s.c[0] = v;
  return s;
}

Series s_add(const Series& a, const Series& b) {
  Series r(kSeriesLen);
  for (size_t i = 0; i < kSeriesLen; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Series s_sub(const Series& a, const Series& b) {
  Series r(kSeriesLen);
  for (size_t i = 0; i < kSeriesLen; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Series s_mul(const Series& a, const Series& b) {
  Series r(kSeriesLen);
  for (size_t i = 0; i < kSeriesLen; ++i) {
    if (sign(a.c[i]) == 0) continue;
    for (size_t j = 0; i + j < kSeriesLen; ++j) {
      if (sign(b.c[j]) == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

Series s_scale(const Rat& v, const Series& a) {
  Series r(kSeriesLen);
  for (size_t i = 0; i < kSeriesLen; ++i) r.c[i] = v * a.c[i];
  return r;
}

int s_order(const Series& a) {
  for (size_t i = 0; i < kSeriesLen; ++i)
    if (sign(a.c[i]) != 0) return static_cast<int>(i);
  return -1;  // vanishes to the whole precision
}

// f1..f6 evaluated through x, y given as series (or plain rationals).
template <typename T>
struct Ops {
  static T add(const T& a, const T& b);
  static T sub(const T& a, const T& b);
  static T mul(const T& a, const T& b);
  static T scale(const Rat& v, const T& a);
  static T constant(const Rat& v);
};

template <>
struct Ops<Rat> {
  static Rat add(const Rat& a, const Rat& b) { return a + b; }
  static Rat sub(const Rat& a, const Rat& b) { return a - b; }
  static Rat mul(const Rat& a, const Rat& b) { return a * b; }
  static Rat scale(const Rat& v, const Rat& a) { return v * a; }
  static Rat constant(const Rat& v) { return v; }
};

template <>
struct Ops<Series> {
  static Series add(const Series& a, const Series& b) { return s_add(a, b); }
  static Series sub(const Series& a, const Series& b) { return s_sub(a, b); }
  static Series mul(const Series& a, const Series& b) { return s_mul(a, b); }
  static Series scale(const Rat& v, const Series& a) { return s_scale(v, a); }
  static Series constant(const Rat& v) { return s_const(v); }
};

template <typename T>
std::array<T, 6> halberstadt_factors(const T& x, const T& y) {
  using O = Ops<T>;
  auto C = [](long v) { return O::constant(Rat(v)); };
  T x2 = O::mul(x, x);
  T x3 = O::mul(x2, x);
  T x4 = O::mul(x2, x2);
  // f1 = x^2 + 3x - 6
  T f1 = O::add(O::add(x2, O::scale(Rat(3), x)), C(-6));
  // f2 = 11(x^2 - 5)y + (2x^4 + 23x^3 - 72x^2 - 28x + 127)
  T f2 = O::add(O::mul(O::scale(Rat(11), O::add(x2, C(-5))), y),
                O::add(O::add(O::scale(Rat(2), x4), O::scale(Rat(23), x3)),
                       O::add(O::scale(Rat(-72), x2), O::add(O::scale(Rat(-28), x), C(127)))));
  // f3 = 6y + 11x - 19
  T f3 = O::add(O::scale(Rat(6), y), O::add(O::scale(Rat(11), x), C(-19)));
  // f4 = 22(x - 2)y + (5x^3 + 17x^2 - 112x + 120)
  T f4 = O::add(O::mul(O::scale(Rat(22), O::add(x, C(-2))), y),
                O::add(O::add(O::scale(Rat(5), x3), O::scale(Rat(17), x2)),
                       O::add(O::scale(Rat(-112), x), C(120))));
  // f5 = 11y + (2x^2 + 17x - 34)
  T f5 = O::add(O::scale(Rat(11), y),
                O::add(O::scale(Rat(2), x2), O::add(O::scale(Rat(17), x), C(-34))));
  // f6 = (x - 4)y - (5x - 9)
  T f6 = O::sub(O::mul(O::add(x, C(-4)), y), O::add(O::scale(Rat(5), x), C(-9)));
  return {f1, f2, f3, f4, f5, f6};
}

}  // namespace

const EllipticQ& level11_curve() {
  static const EllipticQ e(Rat(0), Rat(-1), Rat(1), Rat(-7), Rat(10));
  return e;
}

ECPoint level11_generator() { return ECPoint::affine(Rat(4), Rat(5)); }

std::optional<Rat> level11_J(const ECPoint& p) {
  const EllipticQ& e = level11_curve();
  if (p.infinity) throw std::invalid_argument("level11_J: the point at infinity is excluded");
  if (!e.on_curve(p)) throw std::invalid_argument("level11_J: point not on the curve");

  auto fs = halberstadt_factors<Rat>(p.x, p.y);
  bool any_zero = false;
  for (auto& f : fs) any_zero |= (sign(f) == 0);
  if (!any_zero) {
    Rat numroot = fs[0] * fs[1] * fs[2] * fs[3];
    Rat num = numroot * numroot * numroot;
    Rat d5 = fs[4] * fs[4];
    Rat d6 = fs[5];
    Rat den = d5;
    for (int i = 0; i < 11; ++i) den *= d6;
    return num / den;
  }

  // A factor vanishes at p: expand x = x0 + u, y = y(u) to separate the true
  // zero/pole orders. The local solve needs 2y + a1 x + a3 != 0, which holds
  // at every rational point of this curve.
  Rat tangent = 2 * p.y + e.a1 * p.x + e.a3;
  if (sign(tangent) == 0) throw std::logic_error("level11_J: vertical tangent at rational point");
  Series x(kSeriesLen), y(kSeriesLen);
  x.c[0] = p.x;
  x.c[1] = Rat(1);
  y.c[0] = p.y;
  // Solve y^2 + y = x^3 - x^2 - 7x + 10 coefficient by coefficient:
  // collecting u^k terms, the coefficient y_k appears linearly with factor
  // (2 y_0 + 1); everything else is known from lower degrees.
  for (size_t k = 1; k < kSeriesLen; ++k) {
    Series rhs = s_sub(s_mul(s_mul(x, x), x),
                       s_add(s_mul(x, x), s_add(s_scale(Rat(7), x), s_const(Rat(-10)))));
    Series lhs = s_add(s_mul(y, y), y);
    Rat deficit = rhs.c[k] - lhs.c[k];
    y.c[k] = deficit / tangent;
  }
  auto fser = halberstadt_factors<Series>(x, y);
  long ord_num = 0;
  Rat lead_num(1);
  for (int i = 0; i < 4; ++i) {
    int o = s_order(fser[i]);
    if (o < 0) throw std::logic_error("level11_J: factor vanishes beyond precision");
    ord_num += o;
    lead_num *= fser[i].c[o];
  }
  int o5 = s_order(fser[4]);
  int o6 = s_order(fser[5]);
  if (o5 < 0 || o6 < 0) throw std::logic_error("level11_J: factor vanishes beyond precision");
  long ord = 3 * ord_num - 2 * o5 - 11 * static_cast<long>(o6);
  if (ord < 0) return std::nullopt;  // pole: a cusp of the modular curve
  if (ord > 0) return Rat(0);
  Rat num = lead_num * lead_num * lead_num;
  Rat l5 = fser[4].c[o5];
  Rat l6 = fser[5].c[o6];
  Rat den = l5 * l5;
  for (int i = 0; i < 11; ++i) den *= l6;
  return num / den;
}

}  // namespace gf
