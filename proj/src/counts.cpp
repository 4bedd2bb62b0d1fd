#include "gf/counts.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "gf/trinomial.hpp"

namespace gf {

Int ZetaData::p1_at_1() const {
  Int s = 0;
  for (auto& c : p1) s += c;
  return s;
}

bool good_reduction(const Poly& w, uint64_t p) {
  if (p == 2) return false;
  Poly wp = Poly::from_int_coeffs(w.primitive());
  // p | lc or p | disc  <=>  w mod p drops degree or is not squarefree
  FpPoly f;
  try {
    f = fp_reduce(w, p);
  } catch (const std::domain_error&) {
    return false;
  }
  if (f.degree() != w.degree()) return false;
  FpPoly d{p, {}};
  d.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i)
    d.c[i - 1] = static_cast<uint64_t>((__uint128_t)f.c[i] * (i % p) % p);
  d.trim();
  return fp_gcd(f, d).degree() == 0;
}

namespace {

uint64_t pow_check(uint64_t p, int r, uint64_t max_enum) {
  __uint128_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > max_enum) throw std::domain_error("enumeration bound exceeded");
  }
  return static_cast<uint64_t>(q);
}

long infinity_points(const Poly& w, const FqCtx& ctx) {
  if (w.degree() % 2 == 1) return 1;
  // two points at infinity iff lc(w) is a square in F_{p^r}
  FpPoly lcp = fp_reduce(Poly::constant(w.lc()), ctx.p());
  uint64_t lc = lcp.is_zero() ? 0 : lcp.c[0];
  auto e = ctx.from_fp(lc);
  return ctx.chi(e) == 1 ? 2 : 0;
}

template <bool Parallel>
long count_affine(const FpPoly& f, const FqCtx& ctx, uint64_t q) {
  const int r = ctx.r();
  long total = 0;
  if (r == 1) {
    const uint64_t p = ctx.p();
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t v = 1; v < p; ++v) chi[(__uint128_t)v * v % p] = 1;
#pragma omp parallel for reduction(+ : total) schedule(static) if (Parallel && p > 4096)
    for (uint64_t x = 0; x < p; ++x) total += 1 + chi[f.eval(x)];
    return total;
  }
  // enumerate F_{p^r} by coefficient odometer, partitioned on the top digit
  const uint64_t p = ctx.p();
  uint64_t block = q / p;
#pragma omp parallel for reduction(+ : total) schedule(static) if (Parallel)
  for (uint64_t top = 0; top < p; ++top) {
    FqCtx::Elem x = ctx.zero();
    x[r - 1] = top;
    FqCtx::Elem acc(r), tmp(r);
    for (uint64_t i = 0; i < block; ++i) {
      // Horner: acc = f(x)
      std::fill(acc.begin(), acc.end(), 0);
      acc[0] = f.c.empty() ? 0 : f.c.back();
      for (int k = static_cast<int>(f.c.size()) - 2; k >= 0; --k) {
        ctx.mul(acc, x, tmp);
        tmp[0] = (tmp[0] + f.c[k]) % p;
        acc = tmp;
      }
      total += 1 + ctx.chi(acc);
      // advance low digits only
      for (int d = 0; d < r - 1; ++d) {
        if (++x[d] < p) break;
        x[d] = 0;
      }
    }
  }
  return total;
}

long count_points_impl(const Poly& w, uint64_t p, int r, uint64_t max_enum, bool parallel) {
  if (!good_reduction(w, p)) throw BadPrime(p);
  uint64_t q = pow_check(p, r, max_enum);
  FqCtx ctx(p, r);
  FpPoly f = fp_reduce(w, p);
  long affine =
      parallel ? count_affine<true>(f, ctx, q) : count_affine<false>(f, ctx, q);
  return affine + infinity_points(w, ctx);
}

}  // namespace

long count_points(const Poly& w, uint64_t p, int r, uint64_t max_enum) {
  return count_points_impl(w, p, r, max_enum, true);
}

long count_points_serial(const Poly& w, uint64_t p, int r, uint64_t max_enum) {
  return count_points_impl(w, p, r, max_enum, false);
}

std::vector<Int> p1_from_counts(uint64_t p, int genus, const std::vector<long>& counts) {
  // S_r = p^r + 1 - N_r = sum of alpha_i^r; Newton: c_r = -(S_r + sum_{i<r} c_i S_{r-i})/r
  std::vector<Int> s(genus + 1);
  Int pr = 1;
  for (int rr = 1; rr <= genus; ++rr) {
    pr *= static_cast<long>(p);
    s[rr] = pr + 1 - counts[rr - 1];
  }
  std::vector<Int> c(2 * genus + 1);
  c[0] = 1;
  for (int rr = 1; rr <= genus; ++rr) {
    Int acc = s[rr];
    for (int i = 1; i < rr; ++i) acc += c[i] * s[rr - i];
    if (acc % rr != 0) throw std::logic_error("Newton identity divisibility failed");
    c[rr] = -acc / rr;
  }
  // functional equation c_{2g-i} = p^{g-i} c_i
  for (int i = genus - 1; i >= 0; --i) {
    Int scale = 1;
    for (int k = 0; k < genus - i; ++k) scale *= static_cast<long>(p);
    c[2 * genus - i] = scale * c[i];
  }
  return c;
}

int hyperelliptic_genus_unchecked(const Poly& w) {
  if (w.degree() < 3) return w.degree() >= 1 ? 0 : -1;
  return (w.degree() - 1) / 2;
}

ZetaData zeta_numerator(const Poly& w, uint64_t p, uint64_t max_enum) {
  if (!good_reduction(w, p)) throw BadPrime(p);
  ZetaData z;
  z.p = p;
  z.genus = hyperelliptic_genus_unchecked(w);
  for (int r = 1; r <= z.genus; ++r) z.counts.push_back(count_points(w, p, r, max_enum));
  z.p1 = p1_from_counts(p, z.genus, z.counts);
  // Hasse-Weil sanity on every count
  for (int r = 1; r <= z.genus; ++r) {
    double q = 1;
    for (int i = 0; i < r; ++i) q *= static_cast<double>(p);
    double dev = static_cast<double>(z.counts[r - 1]) - (q + 1);
    if (dev * dev > 4.0 * z.genus * z.genus * q + 1e-9)
      throw std::logic_error("count violates the Weil bound");
  }
  return z;
}

Int jacobian_order(const Poly& w, uint64_t p, uint64_t max_enum) {
  int g = hyperelliptic_genus_unchecked(w);
  // enumeration reach: p^g within the guard?
  bool enumerable = true;
  __uint128_t q = 1;
  for (int i = 0; i < g && enumerable; ++i) {
    q *= p;
    if (q > max_enum) enumerable = false;
  }
  if (enumerable) return zeta_numerator(w, p, max_enum).p1_at_1();
  if (auto shape = trinomial_shape(w)) {
    auto l = trinomial_lpoly(*shape, p);
    Int s = 0;
    for (auto& c : l) s += c;
    return s;
  }
  throw std::domain_error("jacobian order out of enumeration reach for this shape");
}

namespace {

// Search a monic integer factor of degree k with Weil-box coefficients:
// every root has |alpha| = sqrt(p), so |c_i| <= binom(k, k-i) p^{(k-i)/2}.
bool find_factor(const std::vector<Int>& phi, int k, uint64_t p, std::vector<Int>& factor_out) {
  int n = static_cast<int>(phi.size()) - 1;
  if (k >= n) return false;
  double sp = std::sqrt(static_cast<double>(p));
  auto binom = [](int a, int b) {
    double r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  std::vector<long> bound(k);
  for (int i = 0; i < k; ++i)
    bound[i] = static_cast<long>(binom(k, k - i) * std::pow(sp, k - i)) + 1;
  Poly f = Poly::from_int_coeffs(std::vector<Int>(phi.begin(), phi.end()));
  std::vector<Int> cand(k + 1);
  cand[k] = 1;
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx < 0) {
      Poly g = Poly::from_int_coeffs(cand);
      if (g.degree() != k) return false;
      auto [q, r] = Poly::divmod(f, g);
      if (r.is_zero()) {
        factor_out = cand;
        return true;
      }
      return false;
    }
    for (long v = -bound[idx]; v <= bound[idx]; ++v) {
      cand[idx] = v;
      if (rec(idx - 1)) return true;
    }
    return false;
  };
  return rec(k - 1);
}

}  // namespace

FrobeniusReport frobenius_charpoly_check(const Poly& w, uint64_t p, uint64_t max_enum) {
  ZetaData z = zeta_numerator(w, p, max_enum);
  FrobeniusReport rep;
  // charpoly(T) = T^{2g} P1(1/T): reversed coefficients, monic
  rep.charpoly.assign(z.p1.rbegin(), z.p1.rend());
  int n = 2 * z.genus;
  Poly phi = Poly::from_int_coeffs(std::vector<Int>(rep.charpoly.begin(), rep.charpoly.end()));
  auto roots = rational_roots(phi);
  if (!roots.empty()) {
    for (auto& r : roots) rep.factors_found.push_back({-num(r), den(r)});
    return rep;
  }
  // quick certificate: irreducible modulo one good small prime
  for (uint64_t ell : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull}) {
    try {
      FpPoly fm = fp_reduce(phi, ell);
      if (fm.degree() == n && fp_is_irreducible(fm)) {
        rep.irreducible = true;
        return rep;
      }
    } catch (const std::domain_error&) {
    }
  }
  for (int k = 2; k <= n / 2; ++k) {
    std::vector<Int> f;
    if (find_factor(rep.charpoly, k, p, f)) {
      rep.factors_found.push_back(f);
      return rep;
    }
  }
  rep.irreducible = true;
  return rep;
}

}  // namespace gf
