#pragma once

#include "eqh/cochain.hpp"
#include "eqh/group_action.hpp"

namespace eqh {

// A kG-module carrying a compatible Gamma-action: ^s(g.m) = (^s g).(^s m).
struct EquivariantGModule {
  PrimeField field;
  int dim = 0;
  std::vector<FpMat> gmats;    // one per element of G
  std::vector<FpMat> gammats;  // one per element of Gamma
};

EquivariantGModule make_equivariant_g_module(const FiniteGroup& g,
                                             const GroupAction& act, int dim,
                                             std::vector<FpMat> gmats,
                                             std::vector<FpMat> gammats);

// k with both actions trivial.
EquivariantGModule trivial_g_module(const GroupAction& act, PrimeField field);

// The group cochain complex C^n(G,N) = Maps(G^n, N) for n = 0..nmax+1 with
// the standard differential, plus the Gamma-action
// (^s f)(g_1..g_n) = ^s(f(^{s^-1}g_1, ..., ^{s^-1}g_n)).
// Basis order: lexicographic in (g_1..g_n), module index fastest.
struct GroupCochainComplex {
  CochainComplexOverFp complex;
  ComplexGammaAction action;
};
GroupCochainComplex group_cochain_complex(const GroupAction& act,
                                          const EquivariantGModule& module,
                                          int nmax,
                                          int dim_cap = kDefaultDimCap);

// H^n of the subcomplex of Gamma-equivariant cochains (degree 0 is N^Gamma).
CohomologyResult equivariant_group_cohomology(const GroupAction& act,
                                              const EquivariantGModule& module,
                                              int n,
                                              int dim_cap = kDefaultDimCap);

// Homomorphisms (G,.) -> (GF(p),+) vanishing on a normal subgroup, as
// degree-1 cochains (rows); every row is a 1-cocycle of the trivial module.
FpMat hom_to_additive_group(const FiniteGroup& g, const Subgroup& floor,
                            uint32_t p);

}  // namespace eqh
