#include "gf/models.hpp"

#include <map>
#include <numeric>

#include "gf/polytext.hpp"
#include "json.hpp"

namespace gf {

EllipticQ::EllipticQ(Rat a1_, Rat a2_, Rat a3_, Rat a4_, Rat a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
      a6(std::move(a6_)) {
  if (sign(discriminant()) == 0) throw std::domain_error("singular Weierstrass equation");
}

Rat EllipticQ::discriminant() const {
  Rat b2 = a1 * a1 + 4 * a2;
  Rat b4 = 2 * a4 + a1 * a3;
  Rat b6 = a3 * a3 + 4 * a6;
  Rat b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool EllipticQ::on_curve(const ECPoint& p) const {
  if (p.infinity) return true;
  Rat lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
  Rat rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
  return lhs == rhs;
}

ECPoint EllipticQ::neg(const ECPoint& p) const {
  if (p.infinity) return p;
  return ECPoint::affine(p.x, -p.y - a1 * p.x - a3);
}

ECPoint EllipticQ::add(const ECPoint& p, const ECPoint& q) const {
  if (!on_curve(p) || !on_curve(q)) throw std::invalid_argument("point not on curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x && q.y == -p.y - a1 * p.x - a3) return ECPoint::at_infinity();
  Rat lambda;
  if (p.x == q.x) {
    lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / (2 * p.y + a1 * p.x + a3);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Rat x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
  Rat y3 = lambda * (p.x - x3) - p.y - a1 * x3 - a3;
  return ECPoint::affine(x3, y3);
}

ECPoint EllipticQ::mul(long n, const ECPoint& p) const {
  ECPoint base = n < 0 ? neg(p) : p;
  unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  ECPoint acc = ECPoint::at_infinity();
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

int hyperelliptic_genus(const Poly& w) {
  if (!is_squarefree(w)) throw std::invalid_argument("hyperelliptic model requires squarefree w");
  if (w.degree() < 1) throw std::invalid_argument("constant w");
  return (w.degree() - 1) / 2;
}

HyperellipticModel hyperelliptic_reduce(const RatFunc& j, ReduceTrace* trace) {
  if (j.is_constant()) throw std::invalid_argument("hyperelliptic_reduce of a constant map");
  const Poly& f = j.num();
  const Poly& g = j.den();
  Poly F = f * g - Rat(1728) * (g * g);
  if (F.is_zero()) throw std::logic_error("f*g - 1728 g^2 vanishes identically");
  auto dec = square_decompose(F);
  if (trace) *trace = ReduceTrace{f, g, dec.h, dec.s};
  return HyperellipticModel{dec.w, hyperelliptic_genus(dec.w)};
}

int genus_superelliptic(int m, const Poly& f) {
  if (m < 2) throw std::invalid_argument("superelliptic exponent must be >= 2");
  if (!is_squarefree(f)) throw std::invalid_argument("superelliptic model requires squarefree f");
  int d = f.degree();
  long g2 = static_cast<long>(m - 1) * (d - 1) + 1 - std::gcd(m, d);
  if (g2 % 2 != 0) throw std::logic_error("superelliptic genus formula parity");
  return static_cast<int>(g2 / 2);
}

namespace {

// multiplicity multiset of the roots of f (over Q-bar) via Yun decomposition
std::vector<int> root_multiplicities(const Poly& f) {
  std::vector<int> out;
  if (f.degree() <= 0) return out;
  for (auto& [p, m] : squarefree_decomposition(f))
    for (int i = 0; i < p.degree(); ++i) out.push_back(m);
  return out;
}

}  // namespace

RamProfile ramification_profile(const RatFunc& j) {
  const Poly& n = j.num();
  const Poly& d = j.den();
  if (j.is_constant()) throw std::invalid_argument("constant map has no ramification profile");
  int deg = j.map_degree();
  Poly m = n - Rat(1728) * d;
  RamProfile prof;
  prof.degree = deg;
  prof.over_zero = root_multiplicities(n);
  if (d.degree() > n.degree()) prof.over_zero.push_back(d.degree() - n.degree());
  prof.over_infty = root_multiplicities(d);
  if (n.degree() > d.degree()) prof.over_infty.push_back(n.degree() - d.degree());
  prof.over_1728 = root_multiplicities(m);
  if (m.degree() < deg) prof.over_1728.push_back(deg - m.degree());
  auto total = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  if (total(prof.over_zero) != deg || total(prof.over_1728) != deg ||
      total(prof.over_infty) != deg)
    throw std::logic_error("ramification profile does not sum to the degree");
  // branch locus check: critical points lie over {0, 1728, infinity}
  Poly w = n.derivative() * d - n * d.derivative();
  if (!w.is_zero()) {
    Poly r = squarefree_part(w);
    Poly prod = n * m * d;
    auto [q, rem] = Poly::divmod(prod, r);
    if (!rem.is_zero())
      throw std::logic_error("map branches outside {0, 1728, infinity}");
  }
  return prof;
}

int fiber_product_genus(const RatFunc& j1, const RatFunc& j2) {
  RamProfile p1 = ramification_profile(j1);
  RamProfile p2 = ramification_profile(j2);
  long contribution = 0;
  auto add_contrib = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int e1 : a)
      for (int e2 : b) {
        long g = std::gcd(e1, e2);
        long l = static_cast<long>(e1) * e2 / g;
        contribution += g * (l - 1);
      }
  };
  add_contrib(p1.over_zero, p2.over_zero);
  add_contrib(p1.over_1728, p2.over_1728);
  add_contrib(p1.over_infty, p2.over_infty);
  long two_g_minus_2 = -2L * p1.degree * p2.degree + contribution;
  if (two_g_minus_2 % 2 != 0) throw std::logic_error("fiber product genus parity");
  long g = two_g_minus_2 / 2 + 1;
  if (g < 0) throw std::logic_error("negative fiber product genus (reducible product?)");
  return static_cast<int>(g);
}

CompositeModel fiber_product(const CatalogEntry& left, const CatalogEntry& right) {
  CompositeModel out;
  out.left_ref = std::to_string(left.level) + ":" + left.name;
  out.right_ref = std::to_string(right.level) + ":" + right.name;
  out.left = left.jmap;
  out.right = right.jmap;
  if (left.jmap.kind == JMapRef::NONE || right.jmap.kind == JMapRef::NONE)
    throw std::invalid_argument("factor carries no j-map");
  if (left.jmap.kind == JMapRef::CONSTANT || right.jmap.kind == JMapRef::CONSTANT)
    throw ZeroDimensionalFiber();

  auto describe = [](const JMapRef& j, const char* var) -> std::string {
    if (j.kind == JMapRef::ELLIPTIC11) return std::string("J(x,y) on y^2+y=x^3-x^2-7*x+10");
    std::string s = "(" + j.num_text + ")/(" + j.den_text + ")";
    std::string r;
    for (char c : s) {
      if (c == 't')
        r += var;
      else
        r += c;
    }
    return r;
  };
  out.raw_equations.push_back("J = " + describe(left.jmap, "t"));
  out.raw_equations.push_back("J = " + describe(right.jmap, "u"));

  RatFunc square_disc_map(parse_poly("t^2+1728"), Poly::one());
  const JMapRef* other = nullptr;
  if (left.jmap.kind == JMapRef::RATFUNC && left.jmap.func == square_disc_map)
    other = &right.jmap;
  else if (right.jmap.kind == JMapRef::RATFUNC && right.jmap.func == square_disc_map)
    other = &left.jmap;
  if (other && other->kind == JMapRef::RATFUNC && !other->func.is_constant()) {
    ReduceTrace tr;
    HyperellipticModel hm = hyperelliptic_reduce(other->func, &tr);
    out.reduced = hm;
    out.trace = tr;
  }
  if (left.jmap.kind == JMapRef::RATFUNC && right.jmap.kind == JMapRef::RATFUNC)
    out.genus_rh = fiber_product_genus(left.jmap.func, right.jmap.func);
  return out;
}

namespace {

RegistryModel hyper(const std::string& name, const std::string& eq, const std::string& wtext,
                    const std::string& tag, std::vector<std::string> pts = {},
                    std::string note = {}) {
  RegistryModel m;
  m.name = name;
  m.kind = "hyperelliptic";
  m.equations = {eq};
  m.w = parse_poly(wtext);
  m.genus = hyperelliptic_genus(*m.w);
  m.known_points = std::move(pts);
  m.tag = tag;
  m.note = std::move(note);
  return m;
}

RegistryModel superell(const std::string& name, const std::string& eq, int mm,
                       const std::string& ftext, const std::string& tag,
                       std::vector<std::string> pts = {}, std::string note = {}) {
  RegistryModel m;
  m.name = name;
  m.kind = "superelliptic";
  m.equations = {eq};
  m.ym_eq_f = {mm, parse_poly(ftext)};
  m.genus = genus_superelliptic(mm, m.ym_eq_f->second);
  m.known_points = std::move(pts);
  m.tag = tag;
  m.note = std::move(note);
  return m;
}

RegistryModel plain(const std::string& name, const std::string& kind,
                    std::vector<std::string> eqs, int genus, const std::string& tag,
                    std::vector<std::string> pts = {}, std::string note = {}) {
  RegistryModel m;
  m.name = name;
  m.kind = kind;
  m.equations = std::move(eqs);
  m.genus = genus;
  m.known_points = std::move(pts);
  m.tag = tag;
  m.note = std::move(note);
  return m;
}

const std::map<std::string, RegistryModel>& registry() {
  static const std::map<std::string, RegistryModel> reg = [] {
    std::map<std::string, RegistryModel> r;
    auto put = [&r](RegistryModel m) { r.emplace(m.name, std::move(m)); };
    put(hyper("X_H40", "y^2 = 2*x^6+2", "2*x^6+2", "rank2-descent",
              {"(1,2)", "(-1,2)", "(1,-2)", "(-1,-2)"},
              "isomorphic copy: X_H97; factors 2*(x^2+1)*(x^4-x^2+1)"));
    put(hyper("X_H97", "y^2 = 2*x^6+2", "2*x^6+2", "rank2-descent", {},
              "same model as X_H40"));
    put(hyper("X_H156", "y^2 = -x^7-8*x", "-x^7-8*x", "quotient-chabauty", {"(0,0)"},
              "four CM points with j = -3375 and j = 16581375"));
    put(superell("X_H109", "y^3 = 4*(x^4-8*x^2+8)", 3, "4*(x^4-8*x^2+8)", "quotient-rank0", {},
                 "no rational points; canonical image -4*v^4+u^3*w+32*v^2*w^2-32*w^4"));
    put(plain("X_H124", "superelliptic",
              {"y^3 = 2*(x^4+4*x^4+2)^2", "y^3 = 2*(x^4+4*x^2+2)^2"}, 3, "prym", {},
              "first equation as printed repeats the x^4 term; the second is the "
              "corrected candidate; genus stated"));
    put(superell("X_H106", "y^3 = x^4+8*x^2+8", 3, "x^4+8*x^2+8", "chabauty",
                 {"[2:0:1]", "[1:0:0]"},
                 "canonical image u^4+8*u^2*v^2+8*v^4+v*w^3"));
    put(superell("X_H105", "y^3 = x^4-8*x^2+8", 3, "x^4-8*x^2+8", "unresolved", {},
                 "rational points not provably determined"));
    put(superell("X_H107", "y^3 = 8*x^4-8*x^2+1", 3, "8*x^4-8*x^2+1", "unresolved", {},
                 "rational points not provably determined"));
    put(hyper("X_H171", "y^2 = -x^13+64*x", "-x^13+64*x", "genus6-torsion",
              {"infinity", "(0,0)"}));
    put(hyper("X_H172", "y^2 = -x^13-64*x", "-x^13-64*x", "genus6-torsion",
              {"infinity", "(0,0)"}));
    put(plain("BaranC13", "plane_quartic",
              {"(y-z)*x^3+(2*y^2+z*y)*x^2+(-y^3+z*y^2-2*z^2*y+z^3)*x+(2*z^2*y^2-3*z^3*y)"}, 3,
              "level13-open",
              {"[0:0:1]", "[0:1:0]", "[1:0:0]", "[1:0:1]", "[1:0:-1]", "[0:3:2]", "[1:3:2]"},
              "7 known points cited; a height-60 search on this transcription also finds "
              "[7:16:-1] and [25:-3:-2], so the printed coefficients are suspect"));
    put(plain("BanwaitCremonaC13", "plane_quartic",
              {"4*x^3*y-3*x^2*y^2+3*x*y^3-x^3*z+16*x^2*y*z-11*x*y^2*z+5*y^3*z+3*x^2*z^2"
               "+9*x*y*z^2+y^2*z^2+x*z^3+2*y*z^3"},
              3, "level13-open", {"[0:0:1]", "[0:1:0]", "[1:0:0]", "[1:3:-2]"}));
    put(plain("X_H150", "canonical_g4", {"A*C+3*B*C-D^2", "A^2*B-2*A*B^2-7*B^3-C^3"}, 4,
              "genus4-open"));
    put(plain("X_H153", "canonical_g4", {"A*C-B*C-D^2", "A^2*B+2*A*B^2-B^3-65536*C^3"}, 4,
              "genus4-open"));
    put(plain("X_H165", "canonical_g4", {"A*C+3*B*C+D^2", "A^2*B-2*A*B^2-7*B^3+C^3"}, 4,
              "genus4-open"));
    put(plain("X_H166", "canonical_g4", {"16*A*C-16*B*C+D^2", "A^2*B+2*A*B^2-B^3+16*C^3"}, 4,
              "genus4-open"));
    put(plain("X22", "system", {"y^2+y = x^3-x^2-7*x+10", "s^2+1728 = J(x,y)"}, 7, "level22",
              {"[x:y:s:z] = [2:0:0:1]"},
              "composite (2,11) curve; J is the degree-55 map on the rank-1 curve"));
    return r;
  }();
  return reg;
}

}  // namespace

const RegistryModel& model_registry(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown registry model " + name);
  return it->second;
}

std::vector<std::string> model_registry_names() {
  std::vector<std::string> names;
  for (auto& [k, v] : registry()) names.push_back(k);
  return names;
}

std::string registry_to_json() {
  nlohmann::json root;
  root["schema"] = 1;
  for (auto& name : model_registry_names()) {
    const RegistryModel& m = model_registry(name);
    nlohmann::json jm;
    jm["kind"] = m.kind;
    jm["equations"] = m.equations;
    jm["genus"] = m.genus;
    jm["known_points"] = m.known_points;
    jm["tag"] = m.tag;
    if (!m.note.empty()) jm["note"] = m.note;
    root["models"][name] = jm;
  }
  return root.dump(2);
}

}  // namespace gf
