#include "gf/fp.hpp"

#include <stdexcept>

namespace gf {

uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = (__uint128_t)r * a % p;
    a = (__uint128_t)a * a % p;
    e >>= 1;
  }
  return r;
}

uint64_t fp_inv(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return fp_pow(a, p - 2, p);
}

uint64_t FpPoly::eval(uint64_t x) const {
  uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ((__uint128_t)acc * x + *it) % p;
  return acc;
}

FpPoly fp_from_coeffs(uint64_t p, std::vector<uint64_t> coeffs) {
  FpPoly f{p, std::move(coeffs)};
  for (auto& x : f.c) x %= p;
  f.trim();
  return f;
}

FpPoly fp_reduce(const Poly& f, uint64_t p) {
  if (f.is_zero()) return FpPoly{p, {}};
  Rat c = f.content();
  Int d = den(c);
  if (mpz_divisible_ui_p(d.get_mpz_t(), p)) throw std::domain_error("content denominator vanishes mod p");
  Int dn = num(c);
  uint64_t cn = mpz_fdiv_ui(dn.get_mpz_t(), p);
  uint64_t cd = mpz_fdiv_ui(d.get_mpz_t(), p);
  uint64_t scale = (__uint128_t)cn * fp_inv(cd, p) % p;
  std::vector<uint64_t> out(f.primitive().size());
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t zi = mpz_fdiv_ui(f.primitive()[i].get_mpz_t(), p);
    out[i] = (__uint128_t)zi * scale % p;
  }
  return fp_from_coeffs(p, std::move(out));
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (a.coeff(i) + b.coeff(i)) % a.p;
  r.trim();
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (a.coeff(i) + a.p - b.coeff(i)) % a.p;
  r.trim();
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
  FpPoly r{a.p, std::vector<uint64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + (__uint128_t)a.c[i] * b.c[j]) % a.p;
  }
  r.trim();
  return r;
}

FpPoly fp_scale(const FpPoly& a, uint64_t s) {
  FpPoly r = a;
  s %= a.p;
  for (auto& x : r.c) x = (__uint128_t)x * s % a.p;
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("fp division by zero");
  uint64_t p = a.p;
  if (a.degree() < b.degree()) return {FpPoly{p, {}}, a};
  std::vector<uint64_t> rem = a.c;
  int db = b.degree();
  uint64_t inv = fp_inv(b.lc(), p);
  std::vector<uint64_t> q(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    uint64_t cur = rem[i];
    if (cur == 0) continue;
    uint64_t f = (__uint128_t)cur * inv % p;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) {
      uint64_t sub = (__uint128_t)f * b.c[j] % p;
      rem[i - db + j] = (rem[i - db + j] + p - sub) % p;
    }
  }
  FpPoly Q{p, std::move(q)}, R{p, std::move(rem)};
  Q.trim();
  R.c.resize(db);
  R.trim();
  return {Q, R};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return fp_scale(a, fp_inv(a.lc(), a.p));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpXgcd fp_xgcd(const FpPoly& a, const FpPoly& b) {
  uint64_t p = a.p;
  FpPoly r0 = a, r1 = b;
  FpPoly s0{p, {1}}, s1{p, {}}, t0{p, {}}, t1{p, {1}};
  while (!r1.is_zero()) {
    auto [q, r2] = fp_divmod(r0, r1);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = s2;
    t0 = std::move(t1);
    t1 = t2;
  }
  // scale to monic gcd
  if (!r0.is_zero()) {
    uint64_t inv = fp_inv(r0.lc(), p);
    r0 = fp_scale(r0, inv);
    s0 = fp_scale(s0, inv);
    t0 = fp_scale(t0, inv);
  }
  return {r0, s0, t0};
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod) {
  FpPoly r{base.p, {1}};
  FpPoly b = fp_mod(base, mod);
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = fp_mod(fp_mul(r, b), mod);
    b = fp_mod(fp_mul(b, b), mod);
    k >>= 1;
  }
  return r;
}

bool fp_is_irreducible(const FpPoly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  uint64_t p = f.p;
  FpPoly x{p, {0, 1}};
  // x^(p^n) == x mod f, and gcd(x^(p^(n/s)) - x, f) == 1 for prime s | n.
  FpPoly xp = fp_powmod(x, Int(p), f);
  std::vector<FpPoly> frob{x, xp};  // x^(p^i)
  for (int i = 2; i <= n; ++i) {
    // compose: previous ^ p
    frob.push_back(fp_powmod(frob.back(), Int(p), f));
  }
  if (!(fp_sub(frob[n], x).is_zero())) return false;
  for (int s = 2; s <= n; ++s) {
    if (n % s != 0) continue;
    bool sprime = true;
    for (int d = 2; d * d <= s; ++d)
      if (s % d == 0) sprime = false;
    if (!sprime) continue;
    FpPoly g = fp_gcd(fp_sub(frob[n / s], x), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

FpPoly fp_least_irreducible(uint64_t p, int r) {
  if (r == 1) return FpPoly{p, {0, 1}};
  // Lowest base-p encoding of the low coefficients, monic of degree r.
  std::vector<uint64_t> c(r + 1, 0);
  c[r] = 1;
  while (true) {
    FpPoly f{p, c};
    f.trim();
    if (f.degree() == r && fp_is_irreducible(f)) return f;
    // increment odometer over c[0..r-1]
    int i = 0;
    while (i < r) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == r) throw std::logic_error("no irreducible found");  // unreachable
  }
}

FqCtx::FqCtx(uint64_t p, int r) : p_(p), r_(r), mod_(fp_least_irreducible(p, r)) {
  // reduction rows: x^(r+k) mod m, k = 0..r-2
  red_.clear();
  std::vector<uint64_t> cur(mod_.c.begin(), mod_.c.end() - 1);  // x^r = -low part
  for (auto& v : cur) v = (p_ - v) % p_;
  for (int k = 0; k <= r - 2; ++k) {
    red_.push_back(cur);
    // multiply by x: shift, reduce the overflow term
    std::vector<uint64_t> nxt(r, 0);
    uint64_t top = cur[r - 1];
    for (int i = r - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top) {
      for (int i = 0; i < r; ++i) nxt[i] = (nxt[i] + (__uint128_t)top * red_[0][i]) % p_;
    }
    cur = nxt;
  }
  // Frobenius matrix: images of basis powers
  frob_.resize(r);
  FpPoly x{p_, {0, 1}};
  FpPoly xp = fp_powmod(x, Int(p), mod_);
  FpPoly acc{p_, {1}};
  for (int j = 0; j < r; ++j) {
    frob_[j].assign(r, 0);
    for (int i = 0; i <= acc.degree(); ++i) frob_[j][i] = acc.c[i];
    acc = fp_mod(fp_mul(acc, xp), mod_);
  }
  chi_table_.assign(p_, -1);
  chi_table_[0] = 0;
  for (uint64_t v = 1; v < p_; ++v) chi_table_[(__uint128_t)v * v % p_] = 1;
}

uint64_t FqCtx::q_size_check() const {
  __uint128_t q = 1;
  for (int i = 0; i < r_; ++i) {
    q *= p_;
    if (q > ((__uint128_t)1 << 62)) throw std::domain_error("field too large");
  }
  return static_cast<uint64_t>(q);
}

FqCtx::Elem FqCtx::one() const {
  Elem e(r_, 0);
  e[0] = 1;
  return e;
}

FqCtx::Elem FqCtx::from_fp(uint64_t a) const {
  Elem e(r_, 0);
  e[0] = a % p_;
  return e;
}

void FqCtx::add(const Elem& a, const Elem& b, Elem& out) const {
  out.resize(r_);
  for (int i = 0; i < r_; ++i) out[i] = (a[i] + b[i]) % p_;
}

void FqCtx::mul(const Elem& a, const Elem& b, Elem& out) const {
  // schoolbook, then reduce degrees r..2r-2
  std::vector<uint64_t> t(2 * r_ - 1, 0);
  for (int i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r_; ++j) t[i + j] = (t[i + j] + (__uint128_t)a[i] * b[j]) % p_;
  }
  out.assign(r_, 0);
  for (int i = 0; i < r_; ++i) out[i] = t[i];
  for (int k = 0; k <= r_ - 2; ++k) {
    uint64_t hi = t[r_ + k];
    if (hi == 0) continue;
    const auto& row = red_[k];
    for (int i = 0; i < r_; ++i) out[i] = (out[i] + (__uint128_t)hi * row[i]) % p_;
  }
}

FqCtx::Elem FqCtx::pow(Elem base, Int e) const {
  Elem r = one(), tmp(r_);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) {
      mul(r, base, tmp);
      r = tmp;
    }
    mul(base, base, tmp);
    base = tmp;
    e >>= 1;
  }
  return r;
}

bool FqCtx::is_zero(const Elem& a) const {
  for (auto v : a)
    if (v) return false;
  return true;
}

uint64_t FqCtx::norm(const Elem& a) const {
  // product over Frobenius orbit
  Elem acc = a, fr = a, tmp(r_);
  for (int i = 1; i < r_; ++i) {
    // fr <- Frobenius(fr)
    Elem img(r_, 0);
    for (int j = 0; j < r_; ++j) {
      if (fr[j] == 0) continue;
      for (int i2 = 0; i2 < r_; ++i2) img[i2] = (img[i2] + (__uint128_t)fr[j] * frob_[j][i2]) % p_;
    }
    fr = img;
    mul(acc, fr, tmp);
    acc = tmp;
  }
  return acc[0];
}

int FqCtx::chi(const Elem& a) const {
  if (is_zero(a)) return 0;
  if (r_ == 1) return chi_table_[a[0]];
  return chi_table_[norm(a)];
}

bool FqCtx::next(Elem& a) const {
  for (int i = 0; i < r_; ++i) {
    if (++a[i] < p_) return true;
    a[i] = 0;
  }
  return false;
}

}  // namespace gf
