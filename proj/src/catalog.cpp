#include "gf/catalog.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gf/polytext.hpp"
#include "json.hpp"

namespace gf {

namespace {

bool is_square_mod(uint32_t a, uint32_t ell) {
  a %= ell;
  for (uint32_t x = 0; x < ell; ++x)
    if (x * x % ell == a) return true;
  return false;
}

FiniteMatrixGroup set_of(uint32_t n, const std::function<bool(const Mat2&)>& pred) {
  std::vector<uint32_t> packed;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c)
        for (uint32_t d = 0; d < n; ++d) {
          Mat2 m{n, a, b, c, d};
          if (m.invertible() && pred(m)) packed.push_back(m.pack());
        }
  return FiniteMatrixGroup::from_elements(n, std::move(packed));
}

/// Greedy small generating set for a closed element set.
std::vector<Mat2> derive_generators(const FiniteMatrixGroup& g) {
  uint32_t n = g.modulus();
  std::vector<Mat2> gens;
  FiniteMatrixGroup cur = FiniteMatrixGroup::closure(n, {});
  for (auto p : g.elements()) {
    if (cur.order() == g.order()) break;
    Mat2 m = Mat2::unpack(p, n);
    if (cur.contains(m)) continue;
    gens.push_back(m);
    cur = FiniteMatrixGroup::closure(n, gens);
  }
  return gens;
}

FiniteMatrixGroup with_generators(FiniteMatrixGroup g) {
  if (!g.generators().empty()) return g;
  auto gens = derive_generators(g);
  return FiniteMatrixGroup::from_elements(g.modulus(), g.elements(), gens);
}

JMapRef jmap_ratfunc(const std::string& num, const std::string& den) {
  JMapRef j;
  j.kind = JMapRef::RATFUNC;
  j.num_text = num;
  j.den_text = den;
  j.func = RatFunc(parse_poly(num), parse_poly(den));
  return j;
}

JMapRef jmap_const(const std::string& value) {
  JMapRef j;
  j.kind = JMapRef::CONSTANT;
  j.constant = rat_from_string(value);
  return j;
}

JMapRef jmap_elliptic11() {
  JMapRef j;
  j.kind = JMapRef::ELLIPTIC11;
  return j;
}

CatalogEntry make_entry(uint32_t level, const std::string& name, FiniteMatrixGroup g, JMapRef j) {
  CatalogEntry e;
  e.level = level;
  e.name = name;
  e.group = with_generators(std::move(g));
  e.contains_minus_I = e.group.contains_minus_identity();
  e.jmap = std::move(j);
  return e;
}

FiniteMatrixGroup gen_group(uint32_t n, std::initializer_list<std::array<long, 4>> gens) {
  std::vector<Mat2> ms;
  for (auto& g : gens) ms.push_back(mat2(n, g[0], g[1], g[2], g[3]));
  return FiniteMatrixGroup::closure(n, ms);
}

std::vector<CatalogEntry> build_level2() {
  std::vector<CatalogEntry> v;
  v.push_back(make_entry(2, "G_1", gen_group(2, {}), jmap_ratfunc("256*(t^2+t+1)^3", "t^2*(t+1)^2")));
  v.push_back(make_entry(2, "G_2", gen_group(2, {{1, 1, 0, 1}}), jmap_ratfunc("256*(t+1)^3", "t")));
  v.push_back(make_entry(2, "G_3", gen_group(2, {{1, 1, 1, 0}}), jmap_ratfunc("t^2+1728", "1")));
  return v;
}

std::vector<CatalogEntry> build_level3() {
  std::vector<CatalogEntry> v;
  v.push_back(make_entry(3, "G_1", standard_group(3, "C_spl"),
                         jmap_ratfunc("27*(t+1)^3*(t+3)^3*(t^2+3)^3", "t^3*(t^2+3*t+3)^3")));
  v.push_back(make_entry(3, "G_2", standard_group(3, "N_spl"),
                         jmap_ratfunc("27*(t+1)^3*(t-3)^3", "t^3")));
  v.push_back(make_entry(3, "G_3", standard_group(3, "B"),
                         jmap_ratfunc("27*(t+1)*(t+9)^3", "t^3")));
  v.push_back(make_entry(3, "G_4", standard_group(3, "N_nsp"), jmap_ratfunc("t^3", "1")));
  v.push_back(make_entry(3, "H_{1,1}",
                         set_of(3, [](const Mat2& m) { return m.a == 1 && m.b == 0 && m.c == 0; }),
                         JMapRef{}));
  v.push_back(make_entry(3, "H_{3,1}",
                         set_of(3, [](const Mat2& m) { return m.a == 1 && m.c == 0; }), JMapRef{}));
  v.push_back(make_entry(3, "H_{3,2}",
                         set_of(3, [](const Mat2& m) { return m.c == 0 && m.d == 1; }), JMapRef{}));
  return v;
}

std::vector<CatalogEntry> build_level5() {
  std::vector<CatalogEntry> v;
  // +-[1 0;0 *]: elements s*diag(1,d) for s = +-1
  auto g1 = set_of(5, [](const Mat2& m) {
    if (m.b != 0 || m.c != 0) return false;
    return m.a == 1 || m.a == 4;
  });
  v.push_back(make_entry(5, "G_1", g1,
                         jmap_ratfunc("(t^20+228*t^15+494*t^10-228*t^5+1)^3",
                                      "t^5*(t^10-11*t^5-1)^5")));
  v.push_back(make_entry(5, "G_2", standard_group(5, "C_spl"),
                         jmap_ratfunc("(t^2+5*t+5)^3*(t^4+5*t^2+25)^3*(t^4+5*t^3+20*t^2+25*t+25)^3",
                                      "t^5*(t^4+5*t^3+15*t^2+25*t+25)^5")));
  v.push_back(make_entry(5, "G_3", gen_group(5, {{2, 0, 0, 2}, {1, 0, 0, -1}, {0, 1, 3, 0}}),
                         jmap_ratfunc("625*t^3*(t^2+5*t+10)^3*(2*t^2+5*t+5)^3*"
                                      "(4*t^4+30*t^3+95*t^2+150*t+100)^3",
                                      "(t^2+5*t+5)^5*(t^4+5*t^3+15*t^2+25*t+25)^5")));
  v.push_back(make_entry(5, "G_4", standard_group(5, "N_spl"),
                         jmap_ratfunc("(t+5)^3*(t^2-5)^3*(t^2+5*t+10)^3", "(t^2+5*t+5)^5")));
  v.push_back(make_entry(5, "G_5", set_of(5, [](const Mat2& m) {
                           if (m.c != 0) return false;
                           return m.d == 1 || m.d == 4;  // +-[* *;0 1]
                         }),
                         jmap_ratfunc("(t^4+228*t^3+494*t^2-228*t+1)^3", "t*(t^2-11*t-1)^5")));
  v.push_back(make_entry(5, "G_6", set_of(5, [](const Mat2& m) {
                           if (m.c != 0) return false;
                           return m.a == 1 || m.a == 4;  // +-[1 *;0 *]
                         }),
                         jmap_ratfunc("(t^4-12*t^3+14*t^2+12*t+1)^3", "t^5*(t^2-11*t-1)")));
  v.push_back(make_entry(5, "G_7", standard_group(5, "N_nsp"),
                         jmap_ratfunc("125*(t+1)*(2*t+1)^3*(2*t^2-3*t+3)^3", "(t^2+t-1)^5")));
  v.push_back(make_entry(5, "G_8", standard_group(5, "B"),
                         jmap_ratfunc("25*(t^2+10*t+5)^3", "t^5")));
  v.push_back(make_entry(5, "G_9",
                         gen_group(5, {{2, 0, 0, 1}, {1, 0, 0, 2}, {0, -1, 1, 0}, {1, 1, 1, -1}}),
                         jmap_ratfunc("t^3*(t^2+5*t+40)", "1")));
  v.push_back(make_entry(5, "H_{1,1}",
                         set_of(5, [](const Mat2& m) { return m.a == 1 && m.b == 0 && m.c == 0; }),
                         JMapRef{}));
  v.push_back(make_entry(5, "H_{1,2}", set_of(5, [&](const Mat2& m) {
                           if (m.b != 0 || m.c != 0) return false;
                           return m.a == m.d * m.d % 5;  // [a^2 0; 0 a]
                         }),
                         JMapRef{}));
  v.push_back(make_entry(5, "H_{5,1}",
                         set_of(5, [](const Mat2& m) { return m.c == 0 && m.d == 1; }), JMapRef{}));
  v.push_back(make_entry(5, "H_{5,2}", set_of(5, [](const Mat2& m) {
                           return m.c == 0 && m.d == m.a * m.a % 5;  // [a *; 0 a^2]
                         }),
                         JMapRef{}));
  v.push_back(make_entry(5, "H_{6,1}",
                         set_of(5, [](const Mat2& m) { return m.c == 0 && m.a == 1; }), JMapRef{}));
  v.push_back(make_entry(5, "H_{6,2}", set_of(5, [](const Mat2& m) {
                           return m.c == 0 && m.a == m.d * m.d % 5;  // [a^2 *; 0 a]
                         }),
                         JMapRef{}));
  return v;
}

std::vector<CatalogEntry> build_level7() {
  auto sq = [](uint32_t x) { return x != 0 && is_square_mod(x, 7); };
  std::vector<CatalogEntry> v;
  v.push_back(make_entry(7, "G_1", gen_group(7, {{2, 0, 0, 4}, {0, 2, 1, 0}, {-1, 0, 0, -1}}),
                         jmap_const("2268945/128")));
  v.push_back(make_entry(7, "G_2", standard_group(7, "N_spl"),
                         jmap_ratfunc("t*(t+1)^3*(t^2-5*t+1)^3*(t^2-5*t+8)^3*"
                                      "(t^4-5*t^3+8*t^2-7*t+7)^3",
                                      "(t^3-4*t^2+3*t+1)^7")));
  v.push_back(make_entry(7, "G_3", set_of(7, [](const Mat2& m) {
                           if (m.c != 0) return false;
                           return m.a == 1 || m.a == 6;  // +-[1 *;0 *]
                         }),
                         jmap_ratfunc("(t^2-t+1)^3*(t^6-11*t^5+30*t^4-15*t^3-10*t^2+5*t+1)^3",
                                      "(t-1)^7*t^7*(t^3-8*t^2+5*t+1)")));
  v.push_back(make_entry(7, "G_4", set_of(7, [](const Mat2& m) {
                           if (m.c != 0) return false;
                           return m.d == 1 || m.d == 6;  // +-[* *;0 1]
                         }),
                         jmap_ratfunc("(t^2-t+1)^3*(t^6+229*t^5+270*t^4-1695*t^3+1430*t^2-235*t+1)^3",
                                      "(t-1)*t*(t^3-8*t^2+5*t+1)^7")));
  v.push_back(make_entry(7, "G_5", set_of(7, [](const Mat2& m) {
                           if (m.c != 0) return false;
                           return m.d == m.a || m.d == (7 - m.a) % 7;  // [a *;0 +-a]
                         }),
                         jmap_ratfunc("-(t^2-3*t-3)^3*(t^2-t+1)^3*(3*t^2-9*t+5)^3*(5*t^2-t-1)^3",
                                      "(t^3-2*t^2-t+1)*(t^3-t^2-2*t+1)^7")));
  v.push_back(make_entry(7, "G_6", standard_group(7, "N_nsp"),
                         jmap_ratfunc("64*t^3*(t^2+7)^3*(t^2-7*t+14)^3*(5*t^2-14*t-7)^3",
                                      "(t^3-7*t^2+7*t+7)^7")));
  v.push_back(make_entry(7, "G_7", standard_group(7, "B"),
                         jmap_ratfunc("(t^2+245*t+2401)^3*(t^2+13*t+49)", "t^7")));
  v.push_back(make_entry(7, "H_{1,1}", gen_group(7, {{2, 0, 0, 4}, {0, 2, 1, 0}}), JMapRef{}));
  v.push_back(make_entry(7, "H_{3,1}",
                         set_of(7, [](const Mat2& m) { return m.c == 0 && m.a == 1; }), JMapRef{}));
  v.push_back(make_entry(7, "H_{3,2}", set_of(7, [sq](const Mat2& m) {
                           return m.c == 0 && (m.a == 1 || m.a == 6) && sq(m.d);
                         }),
                         JMapRef{}));
  v.push_back(make_entry(7, "H_{4,1}",
                         set_of(7, [](const Mat2& m) { return m.c == 0 && m.d == 1; }), JMapRef{}));
  v.push_back(make_entry(7, "H_{4,2}", set_of(7, [sq](const Mat2& m) {
                           return m.c == 0 && sq(m.a) && (m.d == 1 || m.d == 6);
                         }),
                         JMapRef{}));
  v.push_back(make_entry(7, "H_{5,1}", set_of(7, [sq](const Mat2& m) {
                           if (m.c != 0 || !sq(m.d)) return false;
                           return m.a == m.d || m.a == (7 - m.d) % 7;  // [+-a^2 *;0 a^2]
                         }),
                         JMapRef{}));
  v.push_back(make_entry(7, "H_{5,2}", set_of(7, [sq](const Mat2& m) {
                           if (m.c != 0 || !sq(m.a)) return false;
                           return m.d == m.a || m.d == (7 - m.a) % 7;  // [a^2 *;0 +-a^2]
                         }),
                         JMapRef{}));
  v.push_back(make_entry(7, "H_{7,1}",
                         set_of(7, [sq](const Mat2& m) { return m.c == 0 && sq(m.d); }), JMapRef{}));
  v.push_back(make_entry(7, "H_{7,2}",
                         set_of(7, [sq](const Mat2& m) { return m.c == 0 && sq(m.a); }), JMapRef{}));
  return v;
}

std::vector<CatalogEntry> build_level11() {
  std::vector<CatalogEntry> v;
  v.push_back(make_entry(11, "G_1", gen_group(11, {{1, 1, 0, 1}, {-1, -1, 0, -1}, {4, 0, 0, 6}}),
                         JMapRef{}));
  v.push_back(make_entry(11, "G_2", gen_group(11, {{1, 1, 0, 1}, {-1, -1, 0, -1}, {5, 0, 0, 7}}),
                         JMapRef{}));
  v.push_back(make_entry(11, "G_3", standard_group(11, "N_nsp"), jmap_elliptic11()));
  v.push_back(make_entry(11, "H_{1,1}", gen_group(11, {{1, 1, 0, 1}, {4, 0, 0, 6}}), JMapRef{}));
  v.push_back(make_entry(11, "H_{1,2}", gen_group(11, {{1, 1, 0, 1}, {7, 0, 0, 5}}), JMapRef{}));
  v.push_back(make_entry(11, "H_{2,1}", gen_group(11, {{1, 1, 0, 1}, {5, 0, 0, 7}}), JMapRef{}));
  v.push_back(make_entry(11, "H_{2,2}", gen_group(11, {{1, 1, 0, 1}, {6, 0, 0, 4}}), JMapRef{}));
  return v;
}

std::vector<CatalogEntry> build_level13() {
  auto cube = [](uint32_t x) {
    for (uint32_t y = 1; y < 13; ++y)
      if (y * y % 13 * y % 13 == x) return true;
    return false;
  };
  auto sq = [](uint32_t x) { return x != 0 && is_square_mod(x, 13); };
  auto fourth = [](uint32_t x) { return x == 1 || x == 3 || x == 9; };
  std::vector<CatalogEntry> v;
  v.push_back(make_entry(
      13, "G_1", set_of(13, [cube](const Mat2& m) { return m.c == 0 && cube(m.d); }),
      jmap_ratfunc("(t^2-t+1)^3*(t^12+231*t^11+269*t^10-3160*t^9+6022*t^8-9616*t^7+21880*t^6"
                   "-34102*t^5+28297*t^4-12455*t^3+2876*t^2-243*t+1)^3",
                   "(t-1)*t*(t^3-4*t^2+t+1)^13")));
  v.push_back(make_entry(
      13, "G_2", set_of(13, [cube](const Mat2& m) { return m.c == 0 && cube(m.a); }),
      jmap_ratfunc("(t^2-t+1)^3*(t^12-9*t^11+29*t^10-40*t^9+22*t^8-16*t^7+40*t^6-22*t^5"
                   "-23*t^4+25*t^3-4*t^2-3*t+1)^3",
                   "(t-1)^13*t^13*(t^3-4*t^2+t+1)")));
  // fourth roots of unity mod 13 (kernel of the 4th-power map)
  auto root4 = [](uint32_t x) { return x == 1 || x == 5 || x == 8 || x == 12; };
  v.push_back(make_entry(
      13, "G_3", set_of(13, [root4](const Mat2& m) {
        if (m.c != 0) return false;
        uint32_t inv_d = 0;
        for (uint32_t y = 1; y < 13; ++y)
          if (m.d * y % 13 == 1) inv_d = y;
        return root4(m.a * inv_d % 13);
      }),
      jmap_ratfunc("-28561*(t^2-t+1)^3*((t^4-t^3+2*t^2-9*t+3)*(3*t^4-3*t^3-7*t^2+12*t-4)*"
                   "(4*t^4-4*t^3-5*t^2+3*t-1))^3",
                   "(t^3-4*t^2+t+1)^13*(5*t^3-7*t^2-8*t+5)")));
  v.push_back(make_entry(
      13, "G_4", set_of(13, [sq](const Mat2& m) { return m.c == 0 && sq(m.d); }),
      jmap_ratfunc("(t^4-t^3+5*t^2+t+1)*(t^8+235*t^7+1207*t^6+955*t^5+3840*t^4-955*t^3"
                   "+1207*t^2-235*t+1)^3",
                   "t*(t^2-3*t-1)^13")));
  v.push_back(make_entry(
      13, "G_5", set_of(13, [sq](const Mat2& m) { return m.c == 0 && sq(m.a); }),
      jmap_ratfunc("(t^4-t^3+5*t^2+t+1)*(t^8-5*t^7+7*t^6-5*t^5+5*t^3+7*t^2+5*t+1)^3",
                   "t^13*(t^2-3*t-1)")));
  v.push_back(make_entry(13, "G_6", standard_group(13, "B"),
                         jmap_ratfunc("(t^2+5*t+13)*(t^4+7*t^3+20*t^2+19*t+1)^3", "t")));
  v.push_back(make_entry(13, "G_7",
                         gen_group(13, {{2, 0, 0, 2}, {2, 0, 0, 3}, {0, -1, 1, 0}, {1, 1, -1, 1}}),
                         JMapRef{}));
  {
    auto base41 = set_of(13, [fourth](const Mat2& m) { return m.c == 0 && fourth(m.d); });
    v.push_back(make_entry(13, "H_{4,1}", base41, JMapRef{}));
    auto base42 = set_of(13, [fourth, sq](const Mat2& m) {
      return m.c == 0 && sq(m.a) && fourth(m.d);
    });
    std::vector<Mat2> gens = derive_generators(base42);
    gens.push_back(mat2(13, 2, 0, 0, 4));
    v.push_back(make_entry(13, "H_{4,2}", FiniteMatrixGroup::closure(13, gens), JMapRef{}));
    auto base51 = set_of(13, [fourth](const Mat2& m) { return m.c == 0 && fourth(m.a); });
    v.push_back(make_entry(13, "H_{5,1}", base51, JMapRef{}));
    auto base52 = set_of(13, [fourth, sq](const Mat2& m) {
      return m.c == 0 && fourth(m.a) && sq(m.d);
    });
    std::vector<Mat2> gens52 = derive_generators(base52);
    gens52.push_back(mat2(13, 4, 0, 0, 2));
    v.push_back(make_entry(13, "H_{5,2}", FiniteMatrixGroup::closure(13, gens52), JMapRef{}));
  }
  return v;
}

struct CatalogStore {
  std::map<uint32_t, std::vector<CatalogEntry>> levels;
  CatalogStore() {
    levels[2] = build_level2();
    levels[3] = build_level3();
    levels[5] = build_level5();
    levels[7] = build_level7();
    levels[11] = build_level11();
    levels[13] = build_level13();
  }
};

const CatalogStore& store() {
  static CatalogStore s;
  return s;
}

}  // namespace

std::vector<uint32_t> catalog_levels() { return {2, 3, 5, 7, 11, 13}; }

const std::vector<CatalogEntry>& catalog_level(uint32_t level) {
  auto it = store().levels.find(level);
  if (it == store().levels.end())
    throw std::invalid_argument("no catalog level " + std::to_string(level));
  return it->second;
}

bool catalog_has(uint32_t level, const std::string& name) {
  auto it = store().levels.find(level);
  if (it == store().levels.end()) return false;
  for (auto& e : it->second)
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& catalog_lookup(uint32_t level, const std::string& name) {
  for (auto& e : catalog_level(level))
    if (e.name == name) return e;
  // standard-name fallback, cached
  static std::map<std::pair<uint32_t, std::string>, CatalogEntry> extra;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(level, name);
  auto it = extra.find(key);
  if (it == extra.end()) {
    CatalogEntry e;
    e.level = level;
    e.name = name;
    e.group = standard_group(level, name);  // throws on unknown names
    e.contains_minus_I = e.group.contains_minus_identity();
    it = extra.emplace(key, std::move(e)).first;
  }
  return it->second;
}

FiniteMatrixGroup standard_group(uint32_t ell, const std::string& name) {
  if (name == "I") return FiniteMatrixGroup::closure(ell, {});
  if (name == "GL2") return FiniteMatrixGroup::full_gl2(ell);
  if (name == "SL2") return set_of(ell, [](const Mat2& m) { return m.det() == 1; });
  if (name == "B") return set_of(ell, [](const Mat2& m) { return m.c == 0; });
  if (name == "C_spl") return set_of(ell, [](const Mat2& m) { return m.b == 0 && m.c == 0; });
  if (name == "N_spl")
    return set_of(ell, [](const Mat2& m) {
      return (m.b == 0 && m.c == 0) || (m.a == 0 && m.d == 0);
    });
  uint32_t eps = epsilon_nonresidue(ell);
  if (name == "C_nsp")
    return set_of(ell, [ell, eps](const Mat2& m) {
      return m.a == m.d && m.b == m.c * eps % ell;
    });
  if (name == "N_nsp") {
    // C_nsp together with its coset by [1 0; 0 -1]
    return set_of(ell, [ell, eps](const Mat2& m) {
      bool in_c = (m.a == m.d && m.b == m.c * eps % ell);
      // m * [1 0;0 -1] = [a -b; c -d]
      uint32_t nb = (ell - m.b) % ell, nd = (ell - m.d) % ell;
      bool in_coset = (m.a == nd && nb == m.c * eps % ell);
      return in_c || in_coset;
    });
  }
  if (name == "N_theta" && ell == 3) {
    // the order-8 normal subgroup of GL2(F_3): [x -y; y x] with x^2+y^2 = 1,
    // union [x y; y -x] with x^2+y^2 = -1
    return set_of(3, [](const Mat2& m) {
      uint32_t s = (m.a * m.a + m.b * m.b) % 3;
      bool first = (m.d == m.a) && (m.b == (3 - m.c) % 3) && s == 1;
      bool second = (m.b == m.c) && (m.d == (3 - m.a) % 3) && s == 2;
      return first || second;
    });
  }
  if (name == "G_prime" && ell == 3) return gen_group(3, {{2, 0, 0, 2}});
  throw std::invalid_argument("unknown group name " + name + " at level " + std::to_string(ell));
}

uint32_t epsilon_nonresidue(uint32_t ell) {
  if (ell % 4 == 3) return ell - 1;  // -1
  for (uint32_t e = 2; e < ell; ++e)
    if (!is_square_mod(e, ell)) return e;
  throw std::invalid_argument("no non-residue mod " + std::to_string(ell));
}

Int composite_index(const CatalogEntry& h0, const CatalogEntry& h1) {
  uint32_t n0 = h0.level, n1 = h1.level;
  Int g;
  mpz_gcd_ui(g.get_mpz_t(), Int(n0).get_mpz_t(), n1);
  if (g != 1) throw std::invalid_argument("composite_index: moduli not coprime");
  Int full = Int(static_cast<unsigned long>(gl2_order(n0))) *
             Int(static_cast<unsigned long>(gl2_order(n1)));
  Int sub = Int(static_cast<unsigned long>(h0.group.order())) *
            Int(static_cast<unsigned long>(h1.group.order()));
  return full / sub;
}

Int composite_index(uint32_t level0, const std::string& name0, uint32_t level1,
                    const std::string& name1) {
  return composite_index(catalog_lookup(level0, name0), catalog_lookup(level1, name1));
}

const std::vector<LatticeEdge>& lattice_edges() {
  static const std::vector<LatticeEdge> real_edges = [] {
    std::vector<LatticeEdge> e = {
        // level 2
        {2, "G_2", "G_1", 2},
        {2, "G_3", "G_1", 3},
        {2, "GL2", "G_2", 3},
        {2, "GL2", "G_3", 2},
        // level 3 (figure 2)
        {3, "H_{1,1}", "I", 2},
        {3, "H_{3,1}", "H_{1,1}", 3},
        {3, "H_{3,2}", "H_{1,1}", 3},
        {3, "G_1", "H_{1,1}", 2},
        {3, "G_4", "I", 16},
        {3, "G_3", "H_{3,1}", 2},
        {3, "G_3", "H_{3,2}", 2},
        {3, "G_2", "G_1", 2},
        {3, "GL2", "G_2", 6},
        {3, "GL2", "G_4", 3},
        {3, "GL2", "G_1", 12},
        {3, "GL2", "G_3", 4},
        // level 5 (figure 3)
        {5, "H_{1,1}", "I", 4},
        {5, "H_{1,2}", "I", 4},
        {5, "H_{5,1}", "I", 20},
        {5, "H_{5,2}", "I", 20},
        {5, "H_{6,1}", "I", 20},
        {5, "H_{6,2}", "I", 20},
        {5, "H_{6,1}", "H_{1,1}", 5},
        {5, "H_{6,2}", "H_{1,2}", 5},
        {5, "G_1", "H_{1,1}", 2},
        {5, "G_1", "H_{1,2}", 2},
        {5, "G_3", "I", 16},
        {5, "G_5", "H_{5,1}", 2},
        {5, "G_5", "H_{5,2}", 2},
        {5, "G_6", "H_{6,1}", 2},
        {5, "G_6", "H_{6,2}", 2},
        {5, "G_2", "G_1", 2},
        {5, "G_8", "G_5", 2},
        {5, "G_8", "G_6", 2},
        {5, "G_8", "G_1", 10},
        {5, "G_4", "G_2", 2},
        {5, "G_7", "G_3", 3},
        {5, "G_9", "G_4", 3},
        {5, "GL2", "G_8", 6},
        {5, "GL2", "G_7", 10},
        {5, "GL2", "G_9", 5},
        {5, "GL2", "G_4", 15},
        // level 7 (figure 4)
        {7, "H_{4,1}", "I", 42},
        {7, "H_{4,2}", "I", 42},
        {7, "H_{1,1}", "I", 18},
        {7, "H_{5,2}", "I", 42},
        {7, "H_{5,1}", "I", 42},
        {7, "H_{3,2}", "I", 42},
        {7, "H_{3,1}", "I", 42},
        {7, "G_1", "H_{1,1}", 2},
        {7, "G_5", "H_{5,1}", 2},
        {7, "G_5", "H_{5,2}", 2},
        {7, "H_{7,2}", "H_{5,2}", 3},
        {7, "H_{7,2}", "H_{4,2}", 3},
        {7, "H_{7,2}", "H_{3,1}", 3},
        {7, "H_{7,1}", "H_{3,2}", 3},
        {7, "G_4", "H_{4,1}", 2},
        {7, "G_4", "H_{4,2}", 2},
        {7, "H_{7,1}", "H_{5,1}", 3},
        {7, "H_{7,1}", "H_{4,1}", 3},
        {7, "G_3", "H_{3,1}", 2},
        {7, "G_3", "H_{3,2}", 2},
        {7, "G_2", "G_1", 2},
        {7, "G_7", "G_3", 3},
        {7, "G_7", "G_4", 3},
        {7, "G_7", "G_5", 3},
        {7, "G_7", "H_{7,1}", 2},
        {7, "G_7", "H_{7,2}", 2},
        {7, "G_6", "I", 96},
        {7, "GL2", "G_2", 28},
        {7, "GL2", "G_6", 21},
        {7, "GL2", "G_7", 8},
        // level 11 (figure 5)
        {11, "H_{2,1}", "I", 110},
        {11, "H_{2,2}", "I", 110},
        {11, "H_{1,1}", "I", 110},
        {11, "H_{1,2}", "I", 110},
        {11, "G_2", "H_{2,1}", 2},
        {11, "G_2", "H_{2,2}", 2},
        {11, "G_3", "I", 240},
        {11, "G_1", "H_{1,1}", 2},
        {11, "G_1", "H_{1,2}", 2},
        {11, "GL2", "G_3", 55},
        {11, "GL2", "G_1", 60},
        {11, "GL2", "G_2", 60},
        // level 13 (figure 6)
        {13, "H_{5,1}", "I", 468},
        {13, "H_{5,2}", "I", 468},
        {13, "H_{4,1}", "I", 468},
        {13, "H_{4,2}", "I", 468},
        {13, "G_3", "I", 624},
        {13, "G_2", "I", 624},
        {13, "G_1", "I", 624},
        {13, "G_5", "H_{5,1}", 2},
        {13, "G_5", "H_{5,2}", 2},
        {13, "G_4", "H_{4,1}", 2},
        {13, "G_4", "H_{4,2}", 2},
        {13, "G_7", "I", 288},
        {13, "G_6", "G_3", 3},
        {13, "G_6", "G_5", 2},
        {13, "G_6", "G_2", 3},
        {13, "G_6", "G_4", 2},
        {13, "G_6", "G_1", 3},
        {13, "GL2", "G_7", 91},
        {13, "GL2", "G_6", 14},
    };
    return e;
  }();
  return real_edges;
}

std::vector<std::pair<std::string, std::string>> plus_minus_pairs(uint32_t level) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& e : catalog_level(level)) {
    if (e.name.rfind("H_{", 0) != 0) continue;
    // H_{i,j} pairs with G_i
    auto comma = e.name.find(',');
    std::string gi = "G_" + e.name.substr(3, comma - 3);
    out.emplace_back(gi, e.name);
  }
  return out;
}

std::string catalog_to_json() {
  nlohmann::json root;
  root["schema"] = 1;
  for (uint32_t level : catalog_levels()) {
    nlohmann::json jl = nlohmann::json::array();
    for (auto& e : catalog_level(level)) {
      nlohmann::json je;
      je["name"] = e.name;
      je["order"] = e.group.order();
      je["contains_minus_I"] = e.contains_minus_I;
      nlohmann::json gens = nlohmann::json::array();
      for (auto& g : e.group.generators())
        gens.push_back({g.a, g.b, g.c, g.d});
      je["generators"] = gens;
      switch (e.jmap.kind) {
        case JMapRef::NONE:
          je["jmap"] = nullptr;
          break;
        case JMapRef::RATFUNC:
          je["jmap"] = {{"num", e.jmap.num_text}, {"den", e.jmap.den_text}};
          break;
        case JMapRef::CONSTANT:
          je["jmap"] = {{"const", to_string(e.jmap.constant)}};
          break;
        case JMapRef::ELLIPTIC11:
          je["jmap"] = {{"elliptic11", true}};
          break;
      }
      jl.push_back(je);
    }
    root["levels"][std::to_string(level)] = jl;
  }
  return root.dump(2);
}

std::pair<uint32_t, std::string> parse_group_ref(const std::string& ref) {
  auto colon = ref.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group reference must look like 2:G_3, got " + ref);
  uint32_t level = static_cast<uint32_t>(std::stoul(ref.substr(0, colon)));
  return {level, ref.substr(colon + 1)};
}

}  // namespace gf
