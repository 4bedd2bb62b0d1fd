#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gf/numbers.hpp"

namespace gf {

/// 2x2 matrix over Z/n, entries in [0, n).
struct Mat2 {
  uint32_t n = 0;
  uint32_t a = 0, b = 0, c = 0, d = 0;

  static Mat2 identity(uint32_t n) { return {n, 1 % n, 0, 0, 1 % n}; }
  uint32_t det() const {
    uint64_t ad = static_cast<uint64_t>(a) * d % n;
    uint64_t bc = static_cast<uint64_t>(b) * c % n;
    return static_cast<uint32_t>((ad + n - bc) % n);
  }
  uint32_t trace() const { return (a + d) % n; }
  bool invertible() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  bool operator==(const Mat2&) const = default;
  uint32_t pack() const { return ((a * n + b) * n + c) * n + d; }
  static Mat2 unpack(uint32_t code, uint32_t n);
  std::string str() const;
};

Mat2 mat2(uint32_t n, long a, long b, long c, long d);

/// Subgroup of GL_2(Z/n): generators plus the closed, sorted element set.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;
  /// Breadth-first closure of the generators. Rejects non-invertible input.
  static FiniteMatrixGroup closure(uint32_t n, const std::vector<Mat2>& gens);
  /// Wrap an already-closed element set (verified when verify = true).
  static FiniteMatrixGroup from_elements(uint32_t n, std::vector<uint32_t> packed,
                                         std::vector<Mat2> gens = {}, bool verify = false);
  static FiniteMatrixGroup full_gl2(uint32_t n);

  uint32_t modulus() const { return n_; }
  size_t order() const { return elems_.size(); }
  const std::vector<uint32_t>& elements() const { return elems_; }
  const std::vector<Mat2>& generators() const { return gens_; }
  bool contains(const Mat2& m) const;
  bool contains_group(const FiniteMatrixGroup& h) const;
  bool same_elements(const FiniteMatrixGroup& o) const;
  bool contains_minus_identity() const;

  /// Determinant image as a sorted set of units.
  std::vector<uint32_t> det_image() const;
  bool det_surjective() const;

  std::vector<Mat2> element_list() const;

 private:
  uint32_t n_ = 0;
  std::vector<Mat2> gens_;
  std::vector<uint32_t> elems_;  // packed, sorted
};

size_t gl2_order(uint32_t n);
std::vector<uint32_t> units_mod(uint32_t n);

/// Applicability test: proper subgroup, -I present, full determinant, and a
/// trace-0 determinant--1 element fixing a point of order n. Returns the
/// witness matrix when applicable.
struct Applicability {
  bool applicable = false;
  std::optional<Mat2> witness;
  std::string reason;  // set when not applicable
};
Applicability is_applicable(const FiniteMatrixGroup& g);

/// First two arithmetic-maximality bullets at finite 2-power level:
/// surjective determinant and a trace-0 det--1 element. Genus is not checked.
bool has_rzb_conditions(const FiniteMatrixGroup& g);

/// All normal subgroups (joins of conjugation closures), sorted by order.
/// Throws when |g| exceeds the bound.
std::vector<FiniteMatrixGroup> normal_subgroups(const FiniteMatrixGroup& g,
                                                size_t bound = 10000);

bool has_normal_subgroup_of_index(const FiniteMatrixGroup& g, size_t index,
                                  size_t bound = 10000);

/// Quotient of g by a normal subgroup: multiplication table on cosets.
struct QuotientGroup {
  size_t order = 0;
  std::vector<int> coset_of;            // indexed by position in g's element list
  std::vector<std::vector<int>> table;  // coset multiplication
  std::vector<int> elem_order;          // order of each coset
};
QuotientGroup quotient(const FiniteMatrixGroup& g, const FiniteMatrixGroup& n);

/// All isomorphisms between two small groups given by multiplication tables
/// (backtracking on generator images, order-profile pruned). Capped.
std::vector<std::vector<int>> table_isomorphisms(const QuotientGroup& a, const QuotientGroup& b,
                                                 size_t max_count = 64);

/// One matched pair of normal subgroups with a common quotient.
struct CommonQuotient {
  FiniteMatrixGroup n0, n1;
  size_t quotient_order = 0;
  size_t iso_count = 0;
  std::vector<int> iso;  // quotient(g0,n0) -> quotient(g1,n1), one representative
};

/// All pairs (N0, N1) with G0/N0 iso G1/N1 of order > 1, one row per pair.
std::vector<CommonQuotient> common_quotients(const FiniteMatrixGroup& g0,
                                             const FiniteMatrixGroup& g1, size_t bound = 10000);

/// Entrywise CRT embedding GL2(Z/n0) x GL2(Z/n1) -> GL2(Z/n0n1), coprime moduli.
Mat2 crt_pair(const Mat2& m0, const Mat2& m1);

/// Fiber product {(g0,g1) : psi0(g0) = psi1(g1)} realized mod n0*n1.
/// psi_i are given by the quotient data of a common quotient row.
FiniteMatrixGroup graph_subgroup(const FiniteMatrixGroup& g0, const FiniteMatrixGroup& g1,
                                 const CommonQuotient& cq);

/// Bounded conjugacy test inside GL2(Z/n): tries all conjugators.
bool are_conjugate(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b, size_t bound = 10000);

/// Some GL2(Z/n)-conjugate of `low` lies inside `up` (bounded search).
bool is_conjugate_subgroup(const FiniteMatrixGroup& low, const FiniteMatrixGroup& up,
                           size_t bound = 10000);

}  // namespace gf
