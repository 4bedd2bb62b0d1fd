#include "gf/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gf {

namespace {

uint32_t umod(long v, uint32_t n) {
  long m = v % static_cast<long>(n);
  if (m < 0) m += n;
  return static_cast<uint32_t>(m);
}

uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t n) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % n);
}

// gcd for machine ints
uint32_t ugcd(uint32_t a, uint32_t b) {
  while (b) {
    uint32_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<uint32_t> inv_mod(uint32_t a, uint32_t n) {
  long t = 0, newt = 1, r = n, newr = a % n;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) return std::nullopt;
  return umod(t, n);
}

}  // namespace

Mat2 mat2(uint32_t n, long a, long b, long c, long d) {
  return Mat2{n, umod(a, n), umod(b, n), umod(c, n), umod(d, n)};
}

bool Mat2::invertible() const { return ugcd(det(), n) == 1; }

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  r.n = n;
  r.a = (mul_mod(a, o.a, n) + mul_mod(b, o.c, n)) % n;
  r.b = (mul_mod(a, o.b, n) + mul_mod(b, o.d, n)) % n;
  r.c = (mul_mod(c, o.a, n) + mul_mod(d, o.c, n)) % n;
  r.d = (mul_mod(c, o.b, n) + mul_mod(d, o.d, n)) % n;
  return r;
}

Mat2 Mat2::inverse() const {
  auto idet = inv_mod(det(), n);
  if (!idet) throw std::domain_error("matrix not invertible mod " + std::to_string(n));
  Mat2 r;
  r.n = n;
  r.a = mul_mod(d, *idet, n);
  r.b = mul_mod((n - b) % n, *idet, n);
  r.c = mul_mod((n - c) % n, *idet, n);
  r.d = mul_mod(a, *idet, n);
  return r;
}

Mat2 Mat2::unpack(uint32_t code, uint32_t n) {
  Mat2 m;
  m.n = n;
  m.d = code % n;
  code /= n;
  m.c = code % n;
  code /= n;
  m.b = code % n;
  m.a = code / n;
  return m;
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[" << a << " " << b << "; " << c << " " << d << "]";
  return os.str();
}

FiniteMatrixGroup FiniteMatrixGroup::closure(uint32_t n, const std::vector<Mat2>& gens) {
  for (auto& g : gens) {
    if (g.n != n) throw std::invalid_argument("generator modulus mismatch");
    if (!g.invertible())
      throw std::invalid_argument("generator not invertible mod " + std::to_string(n) + ": " + g.str());
  }
  std::unordered_set<uint32_t> seen;
  std::vector<Mat2> frontier{Mat2::identity(n)};
  seen.insert(Mat2::identity(n).pack());
  std::vector<Mat2> all{Mat2::identity(n)};
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        Mat2 prod = m * g;
        if (seen.insert(prod.pack()).second) {
          next.push_back(prod);
          all.push_back(prod);
        }
      }
    }
    frontier = std::move(next);
  }
  // Products by generators reach the whole subgroup (finite group: closure
  // under multiplication implies inverses).
  std::vector<uint32_t> packed;
  packed.reserve(all.size());
  for (auto& m : all) packed.push_back(m.pack());
  std::sort(packed.begin(), packed.end());
  FiniteMatrixGroup g;
  g.n_ = n;
  g.gens_ = gens;
  g.elems_ = std::move(packed);
  return g;
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(uint32_t n, std::vector<uint32_t> packed,
                                                   std::vector<Mat2> gens, bool verify) {
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
  FiniteMatrixGroup g;
  g.n_ = n;
  g.gens_ = std::move(gens);
  g.elems_ = std::move(packed);
  if (verify) {
    for (auto pa : g.elems_) {
      Mat2 a = Mat2::unpack(pa, n);
      if (!a.invertible()) throw std::invalid_argument("element not invertible");
      if (!g.contains(a.inverse())) throw std::invalid_argument("set not closed under inverse");
    }
  }
  return g;
}

FiniteMatrixGroup FiniteMatrixGroup::full_gl2(uint32_t n) {
  std::vector<uint32_t> all;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c)
        for (uint32_t d = 0; d < n; ++d) {
          Mat2 m{n, a, b, c, d};
          if (m.invertible()) all.push_back(m.pack());
        }
  return from_elements(n, std::move(all));
}

bool FiniteMatrixGroup::contains(const Mat2& m) const {
  return std::binary_search(elems_.begin(), elems_.end(), m.pack());
}

bool FiniteMatrixGroup::contains_group(const FiniteMatrixGroup& h) const {
  return std::includes(elems_.begin(), elems_.end(), h.elems_.begin(), h.elems_.end());
}

bool FiniteMatrixGroup::same_elements(const FiniteMatrixGroup& o) const {
  return n_ == o.n_ && elems_ == o.elems_;
}

bool FiniteMatrixGroup::contains_minus_identity() const {
  return contains(mat2(n_, -1, 0, 0, -1));
}

std::vector<uint32_t> units_mod(uint32_t n) {
  std::vector<uint32_t> u;
  for (uint32_t a = 1; a < n; ++a)
    if (ugcd(a, n) == 1) u.push_back(a);
  if (n == 1) u.push_back(0);
  return u;
}

std::vector<uint32_t> FiniteMatrixGroup::det_image() const {
  std::set<uint32_t> dets;
  for (auto p : elems_) dets.insert(Mat2::unpack(p, n_).det());
  return {dets.begin(), dets.end()};
}

bool FiniteMatrixGroup::det_surjective() const { return det_image() == units_mod(n_); }

std::vector<Mat2> FiniteMatrixGroup::element_list() const {
  std::vector<Mat2> out;
  out.reserve(elems_.size());
  for (auto p : elems_) out.push_back(Mat2::unpack(p, n_));
  return out;
}

size_t gl2_order(uint32_t n) {
  // multiplicative over prime powers: |GL2(Z/p^k)| = p^(4k-4) (p^2-1)(p^2-p)
  size_t total = 1;
  uint32_t m = n;
  for (uint32_t p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    uint32_t k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    size_t pk = 1;
    for (uint32_t i = 0; i < 4 * (k - 1); ++i) pk *= p;
    total *= pk * (static_cast<size_t>(p) * p - 1) * (static_cast<size_t>(p) * p - p);
  }
  return total;
}

Applicability is_applicable(const FiniteMatrixGroup& g) {
  Applicability out;
  uint32_t n = g.modulus();
  if (g.order() == gl2_order(n)) {
    out.reason = "equals GL2";
    return out;
  }
  if (!g.contains_minus_identity()) {
    out.reason = "-I missing";
    return out;
  }
  if (!g.det_surjective()) {
    out.reason = "determinant not surjective";
    return out;
  }
  for (auto p : g.elements()) {
    Mat2 m = Mat2::unpack(p, n);
    if (m.trace() != 0) continue;
    if (m.det() != n - 1 && !(n == 2 && m.det() == 1)) continue;
    // fixed point of additive order n: (M - I)v = 0 with gcd(v, n) = 1
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y) {
        if (x == 0 && y == 0) continue;
        if (ugcd(ugcd(x, y), n) != 1) continue;
        uint32_t r1 = (mul_mod(m.a, x, n) + mul_mod(m.b, y, n)) % n;
        uint32_t r2 = (mul_mod(m.c, x, n) + mul_mod(m.d, y, n)) % n;
        if (r1 == x && r2 == y) {
          out.applicable = true;
          out.witness = m;
          return out;
        }
      }
  }
  out.reason = "no trace-0 det=-1 element with an order-n fixed point";
  return out;
}

bool has_rzb_conditions(const FiniteMatrixGroup& g) {
  uint32_t n = g.modulus();
  if ((n & (n - 1)) != 0) throw std::invalid_argument("modulus must be a power of 2");
  if (!g.det_surjective()) return false;
  for (auto p : g.elements()) {
    Mat2 m = Mat2::unpack(p, n);
    if (m.trace() == 0 && m.det() == (n - 1) % n) return true;
    if (n == 2 && m.trace() == 0 && m.det() == 1) return true;
  }
  return false;
}

namespace {

FiniteMatrixGroup normal_closure_of(const FiniteMatrixGroup& g, const std::vector<Mat2>& seed) {
  uint32_t n = g.modulus();
  // Conjugation stability under a generating set suffices.
  std::vector<Mat2> conj = g.generators();
  if (conj.empty()) conj = g.element_list();
  std::vector<Mat2> conj_inv;
  conj_inv.reserve(conj.size());
  for (auto& m : conj) conj_inv.push_back(m.inverse());

  std::unordered_set<uint32_t> in;
  std::vector<Mat2> members;
  std::vector<Mat2> to_conjugate;

  // Insert one element and re-close under multiplication (worklist; every
  // pair is handled at the later element's turn).
  auto add_and_close = [&](const Mat2& c0) {
    if (!in.insert(c0.pack()).second) return;
    members.push_back(c0);
    to_conjugate.push_back(c0);
    std::vector<Mat2> frontier{c0};
    while (!frontier.empty()) {
      Mat2 x = frontier.back();
      frontier.pop_back();
      size_t cnt = members.size();
      for (size_t i = 0; i < cnt; ++i) {
        for (const Mat2& pr : {x * members[i], members[i] * x}) {
          if (in.insert(pr.pack()).second) {
            members.push_back(pr);
            to_conjugate.push_back(pr);
            frontier.push_back(pr);
          }
        }
      }
    }
  };

  add_and_close(Mat2::identity(n));
  for (auto& s : seed) add_and_close(s);
  while (!to_conjugate.empty()) {
    Mat2 x = to_conjugate.back();
    to_conjugate.pop_back();
    for (size_t i = 0; i < conj.size(); ++i) add_and_close(conj[i] * x * conj_inv[i]);
  }
  std::vector<uint32_t> packed;
  packed.reserve(members.size());
  for (auto& m : members) packed.push_back(m.pack());
  return FiniteMatrixGroup::from_elements(n, std::move(packed));
}

}  // namespace

std::vector<FiniteMatrixGroup> normal_subgroups(const FiniteMatrixGroup& g, size_t bound) {
  if (g.order() > bound) throw std::domain_error("group order exceeds normal-subgroup bound");
  uint32_t n = g.modulus();
  // normal closures of single elements
  std::map<std::vector<uint32_t>, FiniteMatrixGroup> found;
  auto add = [&](const FiniteMatrixGroup& h) {
    return found.emplace(h.elements(), h).second;
  };
  add(FiniteMatrixGroup::from_elements(n, {Mat2::identity(n).pack()}));
  std::vector<FiniteMatrixGroup> closures;
  for (auto p : g.elements()) {
    FiniteMatrixGroup ncl = normal_closure_of(g, {Mat2::unpack(p, n)});
    if (add(ncl)) closures.push_back(ncl);
  }
  // close the set under joins
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FiniteMatrixGroup> cur;
    cur.reserve(found.size());
    for (auto& [k, v] : found) cur.push_back(v);
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i].contains_group(cur[j]) || cur[j].contains_group(cur[i])) continue;
        std::vector<Mat2> seed;
        for (auto p : cur[i].elements()) seed.push_back(Mat2::unpack(p, n));
        for (auto p : cur[j].elements()) seed.push_back(Mat2::unpack(p, n));
        FiniteMatrixGroup join = normal_closure_of(g, seed);
        if (add(join)) grew = true;
      }
  }
  std::vector<FiniteMatrixGroup> out;
  for (auto& [k, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(),
            [](const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  return out;
}

bool has_normal_subgroup_of_index(const FiniteMatrixGroup& g, size_t index, size_t bound) {
  if (g.order() % index != 0) return false;
  for (auto& nsub : normal_subgroups(g, bound))
    if (nsub.order() * index == g.order()) return true;
  return false;
}

QuotientGroup quotient(const FiniteMatrixGroup& g, const FiniteMatrixGroup& nsub) {
  uint32_t n = g.modulus();
  if (!g.contains_group(nsub)) throw std::invalid_argument("quotient: subgroup not contained");
  const auto& elems = g.elements();
  auto index_of = [&](uint32_t packed) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), packed) - elems.begin());
  };
  std::vector<int> coset(elems.size(), -1);
  std::vector<Mat2> reps;
  auto assign = [&](size_t i) {
    if (coset[i] != -1) return;
    Mat2 rep = Mat2::unpack(elems[i], n);
    int id = static_cast<int>(reps.size());
    reps.push_back(rep);
    for (auto hp : nsub.elements()) {
      Mat2 prod = rep * Mat2::unpack(hp, n);
      coset[index_of(prod.pack())] = id;
    }
  };
  // coset 0 is the identity coset; the order loop below relies on it
  assign(static_cast<size_t>(index_of(Mat2::identity(n).pack())));
  for (size_t i = 0; i < elems.size(); ++i) assign(i);
  QuotientGroup q;
  q.order = reps.size();
  q.coset_of = coset;
  q.table.assign(q.order, std::vector<int>(q.order, -1));
  for (size_t i = 0; i < q.order; ++i)
    for (size_t j = 0; j < q.order; ++j) q.table[i][j] = coset[index_of((reps[i] * reps[j]).pack())];
  q.elem_order.assign(q.order, 0);
  for (size_t i = 0; i < q.order; ++i) {
    int x = static_cast<int>(i), ord = 1;
    while (x != 0) {  // identity coset is index 0 (contains I, the smallest packed? ensure below)
      x = q.table[x][i];
      ++ord;
    }
    q.elem_order[i] = ord;
  }
  return q;
}

std::vector<std::vector<int>> table_isomorphisms(const QuotientGroup& a, const QuotientGroup& b,
                                                 size_t max_count) {
  std::vector<std::vector<int>> isos;
  if (a.order != b.order) return isos;
  size_t q = a.order;
  // order profiles must match
  {
    auto pa = a.elem_order, pb = b.elem_order;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return isos;
  }
  // generators of a: greedy
  std::vector<int> gens;
  {
    std::vector<char> in(q, 0);
    in[0] = 1;
    size_t size = 1;
    while (size < q) {
      int pick = -1;
      for (size_t x = 1; x < q; ++x)
        if (!in[x]) {
          pick = static_cast<int>(x);
          break;
        }
      gens.push_back(pick);
      // close
      bool grew = true;
      in[pick] = 1;
      ++size;
      while (grew) {
        grew = false;
        for (size_t x = 0; x < q; ++x)
          if (in[x])
            for (size_t y = 0; y < q; ++y)
              if (in[y] && !in[a.table[x][y]]) {
                in[a.table[x][y]] = 1;
                ++size;
                grew = true;
              }
      }
    }
  }
  // backtracking on generator images
  std::vector<int> map(q, -1), inv(q, -1);
  map[0] = 0;
  inv[0] = 0;
  std::function<bool()> extend = [&]() -> bool {
    // closure of current partial map under multiplication
    bool changed = true;
    std::vector<std::pair<int, int>> added;
    while (changed) {
      changed = false;
      for (size_t x = 0; x < q; ++x) {
        if (map[x] == -1) continue;
        for (size_t y = 0; y < q; ++y) {
          if (map[y] == -1) continue;
          int xy = a.table[x][y];
          int im = b.table[map[x]][map[y]];
          if (map[xy] == -1) {
            if (inv[im] != -1) return false;
            map[xy] = im;
            inv[im] = static_cast<int>(xy);
            added.emplace_back(xy, im);
            changed = true;
          } else if (map[xy] != im) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (isos.size() >= max_count) return;
    if (gi == gens.size()) {
      bool total = std::find(map.begin(), map.end(), -1) == map.end();
      if (total) isos.push_back(map);
      return;
    }
    int gsrc = gens[gi];
    if (map[gsrc] != -1) {
      rec(gi + 1);
      return;
    }
    for (size_t im = 0; im < q; ++im) {
      if (inv[im] != -1) continue;
      if (b.elem_order[im] != a.elem_order[gsrc]) continue;
      auto save_map = map;
      auto save_inv = inv;
      map[gsrc] = static_cast<int>(im);
      inv[im] = gsrc;
      if (extend()) rec(gi + 1);
      map = save_map;
      inv = save_inv;
    }
  };
  rec(0);
  return isos;
}

std::vector<CommonQuotient> common_quotients(const FiniteMatrixGroup& g0,
                                             const FiniteMatrixGroup& g1, size_t bound) {
  auto n0s = normal_subgroups(g0, bound);
  auto n1s = normal_subgroups(g1, bound);
  std::vector<CommonQuotient> out;
  for (auto& n0 : n0s) {
    size_t q0 = g0.order() / n0.order();
    if (q0 <= 1) continue;
    QuotientGroup qa = quotient(g0, n0);
    for (auto& n1 : n1s) {
      size_t q1 = g1.order() / n1.order();
      if (q1 != q0) continue;
      QuotientGroup qb = quotient(g1, n1);
      auto isos = table_isomorphisms(qa, qb, 10000);
      if (isos.empty()) continue;
      CommonQuotient cq;
      cq.n0 = n0;
      cq.n1 = n1;
      cq.quotient_order = q0;
      cq.iso_count = isos.size();
      cq.iso = isos.front();
      out.push_back(std::move(cq));
    }
  }
  return out;
}

Mat2 crt_pair(const Mat2& m0, const Mat2& m1) {
  uint32_t n0 = m0.n, n1 = m1.n, n = n0 * n1;
  if (ugcd(n0, n1) != 1) throw std::invalid_argument("crt_pair: moduli not coprime");
  auto lift = [&](uint32_t a0, uint32_t a1) -> uint32_t {
    // x = a0 mod n0, x = a1 mod n1
    auto inv = inv_mod(n0 % n1, n1);
    uint64_t k = (static_cast<uint64_t>((a1 + n1 - a0 % n1) % n1) * *inv) % n1;
    return static_cast<uint32_t>((a0 + k * n0) % n);
  };
  Mat2 r;
  r.n = n;
  r.a = lift(m0.a, m1.a);
  r.b = lift(m0.b, m1.b);
  r.c = lift(m0.c, m1.c);
  r.d = lift(m0.d, m1.d);
  return r;
}

FiniteMatrixGroup graph_subgroup(const FiniteMatrixGroup& g0, const FiniteMatrixGroup& g1,
                                 const CommonQuotient& cq) {
  uint32_t n0 = g0.modulus(), n1 = g1.modulus();
  if (ugcd(n0, n1) != 1) throw std::invalid_argument("graph_subgroup: moduli not coprime");
  QuotientGroup qa = quotient(g0, cq.n0);
  QuotientGroup qb = quotient(g1, cq.n1);
  const auto& e0 = g0.elements();
  const auto& e1 = g1.elements();
  std::vector<uint32_t> packed;
  for (size_t i = 0; i < e0.size(); ++i) {
    int target = cq.iso[qa.coset_of[i]];
    for (size_t j = 0; j < e1.size(); ++j) {
      if (qb.coset_of[j] != target) continue;
      packed.push_back(crt_pair(Mat2::unpack(e0[i], n0), Mat2::unpack(e1[j], n1)).pack());
    }
  }
  return FiniteMatrixGroup::from_elements(n0 * n1, std::move(packed));
}

bool is_conjugate_subgroup(const FiniteMatrixGroup& low, const FiniteMatrixGroup& up,
                           size_t bound) {
  if (low.modulus() != up.modulus()) return false;
  if (up.order() % low.order() != 0) return false;
  uint32_t n = low.modulus();
  if (gl2_order(n) > bound) throw std::domain_error("conjugacy search exceeds bound");
  FiniteMatrixGroup gl = FiniteMatrixGroup::full_gl2(n);
  for (auto pg : gl.elements()) {
    Mat2 t = Mat2::unpack(pg, n);
    Mat2 ti = t.inverse();
    bool ok = true;
    for (auto pa : low.elements()) {
      if (!up.contains(t * Mat2::unpack(pa, n) * ti)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool are_conjugate(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b, size_t bound) {
  if (a.modulus() != b.modulus() || a.order() != b.order()) return false;
  uint32_t n = a.modulus();
  if (gl2_order(n) > bound) throw std::domain_error("conjugacy search exceeds bound");
  FiniteMatrixGroup gl = FiniteMatrixGroup::full_gl2(n);
  for (auto pg : gl.elements()) {
    Mat2 t = Mat2::unpack(pg, n);
    Mat2 ti = t.inverse();
    bool ok = true;
    for (auto pa : a.elements()) {
      if (!b.contains(t * Mat2::unpack(pa, n) * ti)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace gf
