#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gf {

/// Arbitrary-precision integer and rational types used throughout.
using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& q) { return Int(q.get_num()); }
inline Int den(const Rat& q) { return Int(q.get_den()); }

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Floor square root.
Int isqrt(const Int& a);

/// Exact square test; returns the nonnegative root when `a` is a perfect square.
std::optional<Int> perfect_square_root(const Int& a);

/// True iff q is the square of a rational.
bool is_rational_square(const Rat& q);

bool is_probable_prime(const Int& n);

/// Prime factorization (trial division + Pollard rho). Keys ascending.
std::map<Int, int> factorize(const Int& n);

/// All positive divisors, ascending. Guarded by the divisor-count explosion of its input.
std::vector<Int> divisors(const Int& n);

/// Largest squarefree integer s with n = s * (square); sign preserved. squarefree_kernel(0) = 0.
Int squarefree_kernel(const Int& n);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

Rat rat_from_string(const std::string& s);

}  // namespace gf
