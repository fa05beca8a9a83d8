#pragma once

#include <string>
#include <vector>

#include "eqh/fp_matrix.hpp"

namespace eqh {

// Dense constructions downstream (Hochschild spaces have dimension |G|^n |G|)
// stay tractable only for small tables; larger input is rejected outright.
inline constexpr int kDefaultOrderCap = 64;

// Multiplication-table group. The identity always sits at index 0; every
// table is fully validated at construction (associativity included).
struct FiniteGroup {
  int order = 1;
  std::vector<int> mult;  // order x order, row-major: mult[a*order+b] = a.b
  std::vector<int> inv;
  std::vector<std::string> labels;  // empty, or one label per element

  int mul(int a, int b) const { return mult[size_t(a) * order + b]; }
  int invert(int a) const { return inv[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv[g]); }  // ^g x
  std::string label(int g) const {
    return labels.empty() ? std::to_string(g) : labels[g];
  }
};

FiniteGroup from_mult_table(const std::vector<std::vector<int>>& table,
                            std::vector<std::string> labels = {},
                            int order_cap = kDefaultOrderCap);

// Subgroup as a sorted index set into a parent group. The parent must
// outlive the subgroup.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  // sorted ascending, contains 0

  int order() const { return int(elements.size()); }
  bool contains(int g) const;
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // ordered by representative
  std::vector<int> representatives;       // smallest index per class
};

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);

// Smallest subgroup of `within` containing `seed` and closed under
// conjugation by every element of `within`.
Subgroup normal_closure(const FiniteGroup& g, const Subgroup& within,
                        const std::vector<int>& seed);

Subgroup centralizer(const FiniteGroup& g, int x);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup derived_of(const Subgroup& h);
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;  // element -> coset index
};
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n);

// All normal subgroups of g of index p that contain `floor` (floor must be
// normal). Found through the additive characters vanishing on floor, in a
// fixed enumeration order.
std::vector<Subgroup> index_p_normal_subgroups_above(const FiniteGroup& g,
                                                     const Subgroup& floor,
                                                     uint32_t p);

// Basis of the homomorphisms (G,.) -> (GF(p),+) vanishing on `floor`,
// as rows of residues indexed by group element.
FpMat additive_hom_basis(const FiniteGroup& g, const Subgroup& floor,
                         PrimeField field);

std::vector<int> minimal_generating_set(const FiniteGroup& g);

struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_parent;    // sub index -> parent index
  std::vector<int> from_parent;  // parent index -> sub index, -1 outside
};
SubgroupAsGroup subgroup_as_group(const Subgroup& h);

}  // namespace eqh
