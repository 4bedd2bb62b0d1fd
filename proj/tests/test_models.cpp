#include <set>
#include <random>

#include "doctest.h"
#include "gf/level11.hpp"
#include "gf/models.hpp"
#include "gf/polytext.hpp"

using namespace gf;

namespace {
Poly P(const std::string& s) { return parse_poly(s); }
}

TEST_CASE("elliptic curve group law on the level-11 curve") {
  const EllipticQ& e = level11_curve();
  ECPoint p0 = level11_generator();
  CHECK(e.on_curve(p0));
  CHECK(e.add(p0, ECPoint::at_infinity()) == p0);
  CHECK(e.add(p0, e.neg(p0)).infinity);
  CHECK(e.mul(2, p0) == ECPoint::affine(Rat(2), Rat(0)));
  for (long n = -6; n <= 6; ++n) CHECK(e.on_curve(e.mul(n, p0)));
  CHECK_THROWS_AS(e.add(p0, ECPoint::affine(Rat(0), Rat(0))), std::invalid_argument);
}

TEST_CASE("ec_add group laws on random multiples") {
  const EllipticQ& e = level11_curve();
  ECPoint p0 = level11_generator();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dn(-5, 5);
  for (int iter = 0; iter < 20; ++iter) {
    long a = dn(rng), b = dn(rng), c = dn(rng);
    ECPoint A = e.mul(a, p0), B = e.mul(b, p0), C = e.mul(c, p0);
    CHECK(e.add(A, B) == e.add(B, A));
    CHECK(e.add(e.add(A, B), C) == e.add(A, e.add(B, C)));
    CHECK(e.add(A, B) == e.mul(a + b, p0));
  }
}

TEST_CASE("level-11 j-map values at small multiples") {
  const EllipticQ& e = level11_curve();
  ECPoint p0 = level11_generator();
  // CM values: fourth multiple of the generator hits j = 1728
  CHECK(*level11_J(ECPoint::affine(Rat(2), Rat(0))) == Rat(1728));
  // generator itself: discriminant -67 value
  CHECK(*level11_J(p0) == rat_from_string("-147197952000"));
  // inverse of twice the generator: discriminant -27 value
  CHECK(*level11_J(e.mul(-2, p0)) == rat_from_string("-12288000"));
  // inverse of the generator: discriminant -16 value
  CHECK(*level11_J(e.mul(-1, p0)) == rat_from_string("287496"));
  // triple of the generator lands on j = 0, the quadruple on the
  // discriminant -163 value
  CHECK(*level11_J(e.mul(3, p0)) == Rat(0));
  CHECK(*level11_J(e.mul(4, p0)) == rat_from_string("-262537412640768000"));
  CHECK_THROWS_AS(level11_J(ECPoint::at_infinity()), std::invalid_argument);
  // regression fixture: a non-CM value at -3 times the generator
  CHECK(*level11_J(e.mul(-3, p0)) ==
        rat_from_string("21400770996000000/952809757913927"));
}

TEST_CASE("hyperelliptic reduction of the composite (2,7) split-normalizer curve") {
  auto& g2 = catalog_lookup(7, "G_2");
  ReduceTrace tr;
  auto hm = hyperelliptic_reduce(g2.jmap.func, &tr);
  Poly expect = P("(x^3-4*x^2+3*x+1)*(x^4-10*x^3+27*x^2-10*x-27)");
  CHECK(hm.genus == 3);
  // match up to a squarefree-content unit (the recorded square factor is exact)
  CHECK(squarefree_part(hm.w) == squarefree_part(expect));
  CHECK(hm.w == expect);
  // the defining identity f*g - 1728 g^2 = (s h)^2 w
  Poly lhs = tr.f * tr.g - Rat(1728) * (tr.g * tr.g);
  CHECK(lhs == (tr.s_factor * tr.s_factor) * (tr.h * tr.h * hm.w));
}

TEST_CASE("hyperelliptic reduction identity on random pole-free samples") {
  auto& g2 = catalog_lookup(7, "G_2");
  ReduceTrace tr;
  auto hm = hyperelliptic_reduce(g2.jmap.func, &tr);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dt(-40, 40);
  int done = 0;
  while (done < 50) {
    Rat t(dt(rng), 1 + std::abs(dt(rng)));
    t.canonicalize();
    auto j = g2.jmap.func.eval(t);
    if (!j.has_value()) continue;
    // j - 1728 is a square exactly when w(t) is (after the exact square factor)
    Rat lhs = (*j - 1728);
    Rat g2t = tr.g.eval(t);
    if (sign(g2t) == 0) continue;
    Rat ht = tr.h.eval(t);
    Rat wt = hm.w.eval(t);
    CHECK(lhs * g2t * g2t == (tr.s_factor * ht) * (tr.s_factor * ht) * wt);
    ++done;
  }
}

TEST_CASE("simple reductions") {
  // t^3: w = t^3 - 1728, genus 1
  auto hm = hyperelliptic_reduce(RatFunc(P("x^3"), Poly::one()));
  CHECK(hm.w == P("x^3-1728"));
  CHECK(hm.genus == 1);
  // borel level 3 map gives a genus 0 model
  auto& g3l3 = catalog_lookup(3, "G_3");
  auto hm2 = hyperelliptic_reduce(g3l3.jmap.func);
  CHECK(hm2.genus == 0);
  CHECK_THROWS_AS(hyperelliptic_reduce(RatFunc::constant(Rat(5))), std::invalid_argument);
}

TEST_CASE("superelliptic genus formula") {
  CHECK(genus_superelliptic(3, P("x^4-8*x^2+8")) == 3);
  CHECK(genus_superelliptic(2, P("-x^13+64*x")) == 6);
  CHECK(genus_superelliptic(3, P("x^3-2")) == 1);
  CHECK_THROWS_AS(genus_superelliptic(3, P("(x+1)^2*(x-2)")), std::invalid_argument);
}

TEST_CASE("map degree equals subgroup index for every catalog j-map") {
  for (uint32_t level : catalog_levels()) {
    size_t full = gl2_order(level);
    for (auto& e : catalog_level(level)) {
      if (e.jmap.kind != JMapRef::RATFUNC) continue;
      INFO(level, ":", e.name);
      CHECK(static_cast<size_t>(e.jmap.func.map_degree()) == full / e.group.order());
    }
  }
}

TEST_CASE("every catalog j-map branches only over 0, 1728, infinity") {
  for (uint32_t level : catalog_levels()) {
    for (auto& e : catalog_level(level)) {
      if (e.jmap.kind != JMapRef::RATFUNC) continue;
      INFO(level, ":", e.name);
      CHECK_NOTHROW(ramification_profile(e.jmap.func));
    }
  }
}

TEST_CASE("fiber products and the census genera") {
  auto& left = catalog_lookup(2, "G_3");
  // (2:G_3, 7:G_2): reduced hyperelliptic genus 3, matching the ramification route
  auto cm = fiber_product(left, catalog_lookup(7, "G_2"));
  REQUIRE(cm.reduced.has_value());
  CHECK(cm.reduced->genus == 3);
  REQUIRE(cm.genus_rh.has_value());
  CHECK(*cm.genus_rh == 3);

  // constant factor: zero-dimensional fiber
  CHECK_THROWS_AS(fiber_product(left, catalog_lookup(7, "G_1")), ZeroDimensionalFiber);

  // raw system for (2:G_3, 3:G_4)
  auto cm2 = fiber_product(left, catalog_lookup(3, "G_4"));
  REQUIRE(cm2.reduced.has_value());
  CHECK(cm2.reduced->w == P("x^3-1728"));
  CHECK(cm2.reduced->genus == 1);
  CHECK(*cm2.genus_rh == 1);

  // level-7 census with the square-discriminant factor: {0, 2, 2, 2, 3, 3}
  std::multiset<int> genera;
  for (auto& name : {"G_2", "G_3", "G_4", "G_5", "G_6", "G_7"}) {
    auto c = fiber_product(left, catalog_lookup(7, name));
    REQUIRE(c.reduced.has_value());
    REQUIRE(c.genus_rh.has_value());
    CHECK(c.reduced->genus == *c.genus_rh);
    genera.insert(c.reduced->genus);
  }
  CHECK(genera == std::multiset<int>{0, 2, 2, 2, 3, 3});
}

TEST_CASE("all six composite (2,3) images give genus zero") {
  const std::pair<const char*, const char*> pairs[] = {
      {"G_3", "G_3"}, {"G_2", "G_2"}, {"G_2", "G_1"},
      {"G_2", "G_3"}, {"G_2", "G_4"}, {"G_1", "G_3"},
  };
  for (auto& [l2, l3] : pairs) {
    auto cm = fiber_product(catalog_lookup(2, l2), catalog_lookup(3, l3));
    REQUIRE(cm.genus_rh.has_value());
    INFO("2:", l2, " x 3:", l3);
    CHECK(*cm.genus_rh == 0);
  }
}

TEST_CASE("registry fixtures") {
  auto& h156 = model_registry("X_H156");
  CHECK(h156.w == P("-x^7-8*x"));
  CHECK(h156.genus == 3);

  auto& h171 = model_registry("X_H171");
  CHECK(h171.genus == 6);
  CHECK(h171.known_points == std::vector<std::string>{"infinity", "(0,0)"});

  auto& baran = model_registry("BaranC13");
  CHECK(baran.known_points.size() == 7);
  CHECK(baran.genus == 3);

  auto& h124 = model_registry("X_H124");
  CHECK(h124.equations.size() == 2);  // printed and corrected candidates
  CHECK_THROWS_AS(model_registry("nope"), std::invalid_argument);

  // stated genus matches the computed formula where a formula applies
  for (auto& name : model_registry_names()) {
    auto& m = model_registry(name);
    if (m.w) CHECK(m.genus == hyperelliptic_genus(*m.w));
    if (m.ym_eq_f) CHECK(m.genus == genus_superelliptic(m.ym_eq_f->first, m.ym_eq_f->second));
  }
}

TEST_CASE("covering identity between the split-Cartan maps at level 5") {
  // J_2 factors through J_4 by u = t + 5/t, pinning the corrected
  // normalizer denominator.
  auto& j2 = catalog_lookup(5, "G_2").jmap.func;
  auto& j4 = catalog_lookup(5, "G_4").jmap.func;
  RatFunc u(P("x^2+5"), P("x"));
  RatFunc composed = RatFunc::compose_poly(j4.num(), u) / RatFunc::compose_poly(j4.den(), u);
  CHECK(composed == j2);
}
