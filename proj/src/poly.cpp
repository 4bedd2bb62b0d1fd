#include "gf/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf/polytext.hpp"

namespace gf {

void Poly::normalize(std::vector<Rat> coeffs) {
  while (!coeffs.empty() && sign(coeffs.back()) == 0) coeffs.pop_back();
  if (coeffs.empty()) {
    content_ = 0;
    prim_.clear();
    return;
  }
  // Common denominator, then integer content.
  Int l = 1;
  for (auto& c : coeffs) l = gf::lcm(l, den(c));
  std::vector<Int> z(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) z[i] = num(coeffs[i]) * (l / den(coeffs[i]));
  Int g = 0;
  for (auto& zi : z) g = gf::gcd(g, zi);
  if (sign(z.back()) < 0) g = -g;
  for (auto& zi : z) zi /= g;
  content_ = Rat(g, l);
  content_.canonicalize();
  prim_ = std::move(z);
}

Poly Poly::variable() { return monomial(Rat(1), 1); }

Poly Poly::constant(const Rat& v) {
  Poly p;
  p.normalize({v});
  return p;
}

Poly Poly::monomial(const Rat& coef, int deg) {
  std::vector<Rat> c(deg + 1, Rat(0));
  c[deg] = coef;
  Poly p;
  p.normalize(std::move(c));
  return p;
}

Poly Poly::from_int_coeffs(std::vector<Int> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (auto& z : coeffs) c.emplace_back(z);
  Poly p;
  p.normalize(std::move(c));
  return p;
}

Poly Poly::from_rat_coeffs(const std::vector<Rat>& coeffs) {
  Poly p;
  p.normalize(coeffs);
  return p;
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(prim_.size())) return Rat(0);
  Rat r = content_ * Rat(prim_[i]);
  r.canonicalize();
  return r;
}

Rat Poly::lc() const {
  if (is_zero()) return Rat(0);
  return coeff(degree());
}

bool Poly::is_integral() const { return is_zero() || den(content_) == 1; }

Rat Poly::eval(const Rat& t) const {
  if (is_zero()) return Rat(0);
  Rat acc(0);
  for (auto it = prim_.rbegin(); it != prim_.rend(); ++it) acc = acc * t + Rat(*it);
  return content_ * acc;
}

Int Poly::eval_homogeneous_int(const Int& a, const Int& b) const {
  if (!is_integral()) throw std::domain_error("eval_homogeneous_int: non-integral polynomial");
  if (is_zero()) return 0;
  // sum_i c_i a^i b^(d-i): Horner in a, multiplying one b in per step.
  Int acc = prim_.back();
  Int bp = b;
  for (int i = static_cast<int>(prim_.size()) - 2; i >= 0; --i) {
    acc = acc * a + prim_[i] * bp;
    bp *= b;
  }
  return acc * num(content_);
}

Poly Poly::operator-() const {
  Poly p = *this;
  p.content_ = -p.content_;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  size_t n = std::max(a.prim_.size(), b.prim_.size());
  std::vector<Rat> c(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    Rat v = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    c[i] = v;
  }
  Poly p;
  p.normalize(std::move(c));
  return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Int> z(a.prim_.size() + b.prim_.size() - 1, Int(0));
  for (size_t i = 0; i < a.prim_.size(); ++i)
    for (size_t j = 0; j < b.prim_.size(); ++j) z[i + j] += a.prim_[i] * b.prim_[j];
  Poly p = Poly::from_int_coeffs(std::move(z));
  p.content_ *= a.content_ * b.content_;
  p.content_.canonicalize();
  return p;
}

Poly operator*(const Rat& s, const Poly& a) {
  if (sign(s) == 0 || a.is_zero()) return Poly();
  Poly p = a;
  p.content_ *= s;
  p.content_.canonicalize();
  return p;
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly();
  std::vector<Rat> c(prim_.size() - 1);
  for (size_t i = 1; i < prim_.size(); ++i) c[i - 1] = content_ * Rat(prim_[i] * static_cast<long>(i));
  Poly p;
  p.normalize(std::move(c));
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::one();
  Poly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r(a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) r[i] = a.coeff(i);
  int db = b.degree();
  Rat blc = b.lc();
  std::vector<Rat> q(a.degree() - db + 1, Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    if (sign(r[i]) == 0) continue;
    Rat f = r[i] / blc;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  return {Poly::from_rat_coeffs(q), Poly::from_rat_coeffs(r)};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("div_exact: inexact polynomial division");
  return q;
}

namespace {

// lc(b)^k * a mod b over Z for some k >= 0 (enough for a primitive PRS).
std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
  int db = static_cast<int>(b.size()) - 1;
  const Int& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    Int head = a[da];
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= head * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

void make_primitive(std::vector<Int>& v) {
  if (v.empty()) return;
  Int g = 0;
  for (auto& c : v) g = gcd(g, c);
  if (sign(v.back()) < 0) g = -g;
  for (auto& c : v) c /= g;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Int> r0 = a.prim_, r1 = b.prim_;
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (!r1.empty()) {
    std::vector<Int> r2 = prem(r0, r1);
    make_primitive(r2);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  Poly g = Poly::from_int_coeffs(std::move(r0));
  return g.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return (Rat(1) / lc()) * (*this);
}

std::string Poly::str() const { return poly_to_string(*this); }

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  Poly a = Poly::from_int_coeffs(f.primitive());
  Poly d = a.derivative();
  Poly g = Poly::gcd(a, d);
  Poly c = Poly::div_exact(a, g);
  Poly w = Poly::div_exact(d, g) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly p = Poly::gcd(c, w);
    if (p.degree() > 0) out.emplace_back(p, i);
    c = Poly::div_exact(c, p);
    w = Poly::div_exact(w, p) - c.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_part of zero");
  // Radical via f / gcd(f, f').
  Poly a = Poly::from_int_coeffs(f.primitive());
  Poly g = Poly::gcd(a, a.derivative());
  Poly w = Poly::div_exact(a, g);
  // Integer, content 1, sign matching f's leading coefficient.
  Poly out = Poly::from_int_coeffs(w.primitive());
  if (sign(f.lc()) < 0) out = -out;
  return out;
}

SquareDecomposition square_decompose(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("square_decompose of zero");
  Poly w0 = Poly::one();
  Poly h = Poly::one();
  for (auto& [p, m] : squarefree_decomposition(f)) {
    Poly pz = Poly::from_int_coeffs(p.primitive());
    if (m % 2 == 1) w0 = w0 * pz;
    h = h * pz.pow(static_cast<unsigned>(m / 2));
  }
  h = Poly::from_int_coeffs(h.primitive());
  w0 = Poly::from_int_coeffs(w0.primitive());
  // f = content * h^2 * w0. Fold the squarefree kernel of the content into w;
  // the leftover is then an exact rational square.
  Rat c = f.content() / (h.content() * h.content() * w0.content());
  c.canonicalize();
  Int kern = squarefree_kernel(num(c) * den(c));
  Poly w = Rat(kern) * w0;
  Rat square = c / Rat(kern);
  square.canonicalize();
  auto sn = perfect_square_root(num(square));
  auto sd = perfect_square_root(den(square));
  if (!sn || !sd) throw std::logic_error("square_decompose: residual factor not a square");
  Rat s(*sn, *sd);
  s.canonicalize();
  SquareDecomposition out{w, h, s};
  if (!((s * s) * (h * h * w) == f)) throw std::logic_error("square_decompose identity failed");
  return out;
}

std::vector<Rat> rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("rational_roots of zero");
  std::vector<Rat> roots;
  if (f.degree() == 0) return roots;
  std::vector<Int> z = f.primitive();
  // Strip x^k: zero roots.
  size_t k = 0;
  while (k < z.size() && z[k] == 0) ++k;
  if (k > 0) {
    roots.emplace_back(0);
    z.erase(z.begin(), z.begin() + k);
  }
  if (z.size() <= 1) return roots;
  const Int a0 = z.front();
  const Int an = z.back();
  Poly g = Poly::from_int_coeffs(z);
  for (const Int& p : divisors(a0)) {
    for (const Int& q : divisors(an)) {
      for (int s : {1, -1}) {
        Rat cand(s * p, q);
        cand.canonicalize();
        if (den(cand) != q || num(cand) != s * p) continue;  // only reduced pairs
        if (sign(g.eval(cand)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 1) return true;
  return Poly::gcd(f, f.derivative()).degree() == 0;
}

Rat cubic_discriminant(const Poly& f) {
  if (f.degree() != 3) throw std::domain_error("cubic_discriminant: degree != 3");
  Rat a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

}  // namespace gf
