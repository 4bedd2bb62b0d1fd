#include <random>

#include "doctest.h"
#include "gf/poly.hpp"
#include "gf/polytext.hpp"
#include "gf/ratfunc.hpp"

using namespace gf;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

Poly random_poly(std::mt19937_64& rng, int max_deg, int coeff_range) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<int> dc(-coeff_range, coeff_range);
  int d = dd(rng);
  std::vector<Rat> c(d + 1);
  for (auto& x : c) x = Rat(dc(rng));
  if (sign(c.back()) == 0) c.back() = Rat(1);
  return Poly::from_rat_coeffs(c);
}

}  // namespace

TEST_CASE("poly basics and text round trip") {
  Poly f = P("x^3-4*x^2+3*x+1");
  CHECK(f.degree() == 3);
  CHECK(f.eval(Rat(2)) == Rat(-1));
  CHECK(f.str() == "x^3-4*x^2+3*x+1");
  CHECK(parse_poly(f.str()) == f);

  Poly g = P("(x+1)^2*(x-2)");
  CHECK(g == P("x^3-3*x-2"));

  CHECK(P("1/2*x^2-3").coeff(2) == Rat(1, 2));
  CHECK(P("0").is_zero());
  CHECK(P("0").degree() == Poly::kZeroDegree);
  CHECK_THROWS_AS(parse_poly("x+y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x+"), std::invalid_argument);
}

TEST_CASE("poly gcd") {
  CHECK(Poly::gcd(P("x^2-1"), P("x-1")) == P("x-1"));
  Poly f = P("3*x^4+3*x^3");
  CHECK(Poly::gcd(f, Poly::zero()) == f.monic());
  // gcd(f, f') = 1 for a squarefree cubic.
  Poly c = P("x^3-4*x^2+3*x+1");
  CHECK(Poly::gcd(c, c.derivative()).degree() == 0);
  CHECK_THROWS_AS(Poly::div_exact(P("x^2+1"), P("x+1")), std::domain_error);
}

TEST_CASE("poly gcd divides both inputs on random pairs") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 1000; ++iter) {
    Poly a = random_poly(rng, 6, 8);
    Poly b = random_poly(rng, 6, 8);
    Poly g = Poly::gcd(a, b);
    if (g.is_zero()) continue;
    auto [qa, ra] = Poly::divmod(a, g);
    auto [qb, rb] = Poly::divmod(b, g);
    CHECK(ra.is_zero());
    CHECK(rb.is_zero());
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(P("(x+1)^2*(x-2)")) == P("(x+1)*(x-2)"));
  CHECK(squarefree_part(P("x^2")) == P("x"));
  Poly f = P("(x^3-4*x^2+3*x+1)*(x^4-10*x^3+27*x^2-10*x-27)");
  CHECK(Poly::gcd(f, f.derivative()).degree() == 0);  // squarefree already
  CHECK(squarefree_part(f) == f);
  CHECK_THROWS_AS(squarefree_part(Poly::zero()), std::domain_error);
  // Sign convention follows the leading coefficient.
  CHECK(squarefree_part(P("-2*x^2")).lc() < 0);
}

TEST_CASE("squarefree reconstruction identity f = s^2 h^2 w on random products") {
  std::mt19937_64 rng(987654);
  int done = 0;
  for (int iter = 0; done < 1000; ++iter) {
    Poly h = random_poly(rng, 3, 5);
    Poly w = random_poly(rng, 3, 5);
    if (h.is_zero() || w.is_zero()) continue;
    std::uniform_int_distribution<int> sc(1, 20);
    Rat c(sc(rng), sc(rng));
    Poly f = c * h * h * w;
    auto dec = square_decompose(f);
    CHECK(f == (dec.s * dec.s) * (dec.h * dec.h * dec.w));
    CHECK(is_squarefree(dec.w));
    ++done;
  }
}

TEST_CASE("rational roots") {
  auto r1 = rational_roots(P("2*x^2-x"));
  CHECK(r1 == std::vector<Rat>{Rat(0), Rat(1, 2)});
  auto r2 = rational_roots(P("(x-4)*(x^2+1)"));
  CHECK(r2 == std::vector<Rat>{Rat(4)});
  auto r3 = rational_roots(P("x^3+x^2+2*x-1"));
  CHECK(r3.empty());
  CHECK_THROWS_AS(rational_roots(Poly::zero()), std::domain_error);
}

TEST_CASE("rational roots exactly match candidate scan") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 200; ++iter) {
    Poly f = random_poly(rng, 5, 6);
    if (f.is_zero() || f.degree() < 1) continue;
    auto roots = rational_roots(f);
    for (auto& r : roots) CHECK(sign(f.eval(r)) == 0);
    // Brute scan over small rationals.
    for (int a = -12; a <= 12; ++a)
      for (int b = 1; b <= 8; ++b) {
        Rat t(a, b);
        t.canonicalize();
        if (sign(f.eval(t)) == 0) {
          CHECK(std::find(roots.begin(), roots.end(), t) != roots.end());
        }
      }
  }
}

TEST_CASE("ratfunc normal form and evaluation") {
  RatFunc j3(P("x^2+1728"), Poly::one());
  CHECK(*j3.eval(Rat(0)) == Rat(1728));
  CHECK(*j3.eval(Rat(12)) == Rat(1872));

  RatFunc r(Rat(27) * P("(x+1)*(x+9)^3"), P("x^3"));
  CHECK(!r.eval(Rat(0)).has_value());  // pole
  CHECK(*RatFunc(P("x^3"), Poly::one()).eval(Rat(12)) == Rat(1728));

  // Normal form unique under scaling.
  RatFunc a(Rat(6) * P("x^2-1"), Rat(6) * P("x-1"));
  RatFunc b(P("x+1"), Poly::one());
  CHECK(a == b);
  RatFunc c(Rat(2, 3) * P("x^2"), Rat(4) * P("x^3+x"));
  RatFunc d(Rat(1, 6) * P("x"), P("x^2+1"));
  CHECK(c == d);
  CHECK(parse_ratfunc("27*(x+1)*(x+9)^3/x^3") == RatFunc(Rat(27) * P("(x+1)*(x+9)^3"), P("x^3")));
  CHECK(parse_ratfunc("1/2*x^2") == RatFunc::from_poly(P("1/2*x^2")));
}

TEST_CASE("zero polynomial behavior") {
  Poly z;
  CHECK(z.is_zero());
  CHECK((z + z).is_zero());
  CHECK((z * P("x")).is_zero());
  CHECK(z.derivative().is_zero());
  CHECK(Poly::gcd(z, z).is_zero());
  CHECK_THROWS_AS(RatFunc(P("x"), z), std::domain_error);
}
