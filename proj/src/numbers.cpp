#include "gf/numbers.hpp"

#include <stdexcept>

namespace gf {

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int isqrt(const Int& a) {
  if (sign(a) < 0) throw std::domain_error("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

std::optional<Int> perfect_square_root(const Int& a) {
  if (sign(a) < 0) return std::nullopt;
  if (mpz_perfect_square_p(a.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(a);
}

bool is_rational_square(const Rat& q) {
  if (sign(q) < 0) return false;
  // In lowest terms both numerator and denominator must be squares.
  return perfect_square_root(num(q)).has_value() && perfect_square_root(den(q)).has_value();
}

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // n composite, odd, not a perfect power of interest; returns a nontrivial factor.
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedul);
  while (true) {
    Int x = rng.get_z_range(n - 2) + 2;
    Int y = x;
    Int c = rng.get_z_range(n - 1) + 1;
    Int d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x - y;
      if (sign(diff) < 0) diff = -diff;
      if (diff == 0) break;
      d = gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  // Strip small primes first.
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      n /= static_cast<long>(p);
    }
  }
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  unsigned long d = 17;
  while (d < 100000 && n > 1 && !is_probable_prime(n)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out[Int(d)] += 1;
      n /= static_cast<long>(d);
    }
    d += 2;
  }
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Int f = pollard_rho(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

}  // namespace

std::map<Int, int> factorize(const Int& n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  std::map<Int, int> out;
  Int m = n;
  if (sign(m) < 0) m = -m;
  factor_into(m, out);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  auto f = factorize(n);
  std::vector<Int> divs{Int(1)};
  for (auto& [p, e] : f) {
    size_t sz = divs.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Int squarefree_kernel(const Int& n) {
  if (n == 0) return 0;
  auto f = factorize(n);
  Int s = sign(n) < 0 ? -1 : 1;
  for (auto& [p, e] : f)
    if (e % 2 == 1) s *= p;
  return s;
}

std::string to_string(const Int& a) { return a.get_str(); }
std::string to_string(const Rat& a) { return a.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace gf
