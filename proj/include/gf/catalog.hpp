#pragma once

#include <string>
#include <vector>

#include "gf/group.hpp"
#include "gf/ratfunc.hpp"

namespace gf {

struct JMapRef {
  enum Kind { NONE, RATFUNC, CONSTANT, ELLIPTIC11 } kind = NONE;
  RatFunc func;       // RATFUNC
  Rat constant;       // CONSTANT
  std::string num_text, den_text;
};

struct CatalogEntry {
  uint32_t level = 0;
  std::string name;
  FiniteMatrixGroup group;
  bool contains_minus_I = false;
  JMapRef jmap;
};

/// Levels carried by the built-in catalog.
std::vector<uint32_t> catalog_levels();

/// All entries at one level, in list order (G_i first, then H_{i,j}).
const std::vector<CatalogEntry>& catalog_level(uint32_t level);

/// Lookup by name; falls back to the standard subgroup names
/// (C_spl, N_spl, C_nsp, N_nsp, B, GL2) at any supported prime level.
const CatalogEntry& catalog_lookup(uint32_t level, const std::string& name);
bool catalog_has(uint32_t level, const std::string& name);

/// Standard subgroups of GL2(F_ell).
FiniteMatrixGroup standard_group(uint32_t ell, const std::string& name);

/// Smallest quadratic non-residue convention for the non-split Cartan:
/// -1 when ell = 3 mod 4, else the least non-residue >= 2.
uint32_t epsilon_nonresidue(uint32_t ell);

/// |GL2(Z/n0)| * |GL2(Z/n1)| / (|H0| * |H1|), coprime moduli.
Int composite_index(const CatalogEntry& h0, const CatalogEntry& h1);
Int composite_index(uint32_t level0, const std::string& name0, uint32_t level1,
                    const std::string& name1);

/// Subgroup-lattice edge with the figure label; label equals the index.
struct LatticeEdge {
  uint32_t level;
  std::string upper, lower;  // upper contains lower
  size_t label;
};
const std::vector<LatticeEdge>& lattice_edges();

/// For G_i entries the matching H_{i,j} names (same i), per level.
std::vector<std::pair<std::string, std::string>> plus_minus_pairs(uint32_t level);

/// Serialize the catalog to the shipped JSON format.
std::string catalog_to_json();

/// Parse "2:G_3"-style references.
std::pair<uint32_t, std::string> parse_group_ref(const std::string& ref);

}  // namespace gf
