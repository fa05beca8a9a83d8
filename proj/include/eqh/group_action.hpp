#pragma once

#include <optional>

#include "eqh/finite_group.hpp"

namespace eqh {

// An action of Gamma on G by group automorphisms, stored as one permutation
// of G's indices per element of Gamma. Fully validated at construction.
struct GroupAction {
  FiniteGroup gamma;
  FiniteGroup g;
  std::vector<std::vector<int>> perms;  // perms[s][x] = ^s x

  int apply(int s, int x) const { return perms[s][x]; }
};

GroupAction make_action(FiniteGroup gamma, FiniteGroup g,
                        std::vector<std::vector<int>> perms);

// { s in Gamma : ^s x = x }
Subgroup stabilizer(const GroupAction& act, int x);

// The set { h . ^s(h^-1) | h in H, s in Omega }; Omega must stabilize H
// setwise.
std::vector<int> inassaridze_set(const GroupAction& act, const Subgroup& h,
                                 const Subgroup& omega);

struct InassaridzeSubgroups {
  Subgroup generated;       // [H, Omega]: generated by the set
  Subgroup normal_closure;  // Omega H: its normal closure inside H
};
InassaridzeSubgroups inassaridze_subgroups(const GroupAction& act,
                                           const Subgroup& h,
                                           const Subgroup& omega);

struct SemidirectProduct {
  FiniteGroup group;             // order |G| * |Gamma|
  std::vector<int> embed_g;      // G -> product indices
  std::vector<int> embed_gamma;  // Gamma -> product indices
};
SemidirectProduct semidirect_product(const GroupAction& act);

// A system of representatives of the cosets C_G(x)gamma, containing the
// identity, whose set is stable under the stabilizer Gamma_x.
struct StableTransversal {
  int x = 0;
  std::vector<int> reps;  // ascending; reps[0] = identity
};

// Search outcome: either a stable transversal, or the coset orbit on which
// no representative fixed by the orbit stabilizer exists. Absence is a
// value, not an error.
struct StableTransversalResult {
  std::optional<StableTransversal> transversal;
  std::vector<std::vector<int>> obstruction_orbit;  // cosets as element lists
  bool found() const { return transversal.has_value(); }
};
StableTransversalResult stable_transversal(const GroupAction& act, int x);

// Alternate deterministic choice (largest admissible representatives); used
// to probe whether downstream maps depend on the choice.
StableTransversalResult stable_transversal_alt(const GroupAction& act, int x);

// Iterated coset rewriting gamma_j g_1 = h_{j,1} gamma_{s_j^1},
// gamma_{s_j^1} g_2 = h_{j,2} gamma_{s_j^2}, ... for each start index j.
struct CosetWalk {
  std::vector<std::vector<int>> h;  // h[j][i]: elements of C_G(x)
  std::vector<std::vector<int>> s;  // s[j][i]: 0-based transversal indices
};
CosetWalk coset_walk_data(const GroupAction& act, int x,
                          const StableTransversal& gamma_x,
                          const std::vector<int>& g_tuple);

// Gamma' <= Gamma acting on the same G.
struct GammaRestrictedAction {
  GroupAction action;
  SubgroupAsGroup gamma_group;
};
GammaRestrictedAction restrict_to_gamma_subgroup(const GroupAction& act,
                                                 const Subgroup& gamma_sub);

// Gamma' <= Gamma acting on a setwise-stable subgroup H <= G, both sides
// reindexed as standalone groups.
struct RestrictedAction {
  GroupAction action;
  SubgroupAsGroup gamma_group;
  SubgroupAsGroup h_group;
};
RestrictedAction restrict_action(const GroupAction& act,
                                 const Subgroup& gamma_sub, const Subgroup& h);

}  // namespace eqh
