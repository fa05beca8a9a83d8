#pragma once

#include <string>

#include "eqh/group_action.hpp"
#include "eqh/subspace.hpp"

namespace eqh {

// Finite dimensional associative unital algebra over GF(p), given by dense
// structure constants: e_i e_j = sum_k c[i][j][k] e_k. Associativity and the
// unit laws are validated on every basis triple at construction.
struct StructureAlgebra {
  PrimeField field;
  int dim = 0;
  std::vector<uint8_t> c;     // dim^3, index (i*dim + j)*dim + k
  std::vector<uint8_t> unit;  // coefficient vector of 1

  uint8_t sc(int i, int j, int k) const {
    return c[(size_t(i) * dim + j) * dim + k];
  }
  const uint8_t* sc_row(int i, int j) const {
    return c.data() + (size_t(i) * dim + j) * dim;
  }
  // Product of two coefficient vectors.
  std::vector<uint8_t> mul_vec(const std::vector<uint8_t>& x,
                               const std::vector<uint8_t>& y) const;
  FpMat left_mult_matrix(int i) const;   // m -> e_i m on coefficients
  FpMat right_mult_matrix(int i) const;  // m -> m e_i
};

StructureAlgebra make_structure_algebra(PrimeField field, int dim,
                                        std::vector<uint8_t> c,
                                        std::vector<uint8_t> unit);

// Gamma acting on a structure algebra by algebra automorphisms, one
// invertible matrix per element of Gamma.
struct AlgebraGammaAction {
  FiniteGroup gamma;
  std::vector<FpMat> mats;
};

AlgebraGammaAction make_algebra_action(const StructureAlgebra& a,
                                       FiniteGroup gamma,
                                       std::vector<FpMat> mats);

// Gamma-equivariant (A-A)-bimodule: commuting unital left/right actions of A
// plus a compatible linear Gamma-action.
struct EquivariantBimodule {
  PrimeField field;
  int dim = 0;
  std::vector<FpMat> left;   // per algebra basis element
  std::vector<FpMat> right;  // per algebra basis element
  std::vector<FpMat> gmats;  // per element of Gamma

  FpMat left_of(const std::vector<uint8_t>& a) const;
  FpMat right_of(const std::vector<uint8_t>& a) const;
};

EquivariantBimodule make_equivariant_bimodule(const StructureAlgebra& a,
                                              const AlgebraGammaAction& act,
                                              int dim, std::vector<FpMat> left,
                                              std::vector<FpMat> right,
                                              std::vector<FpMat> gmats);

struct GammaAlgebra {
  StructureAlgebra algebra;
  AlgebraGammaAction action;
};

// kG with basis G; Gamma permutes the basis through the group action.
GammaAlgebra group_algebra(const FiniteGroup& g, const GroupAction& act,
                           PrimeField field);

// M = A with multiplication on both sides and the given Gamma-action.
EquivariantBimodule regular_bimodule(const StructureAlgebra& a,
                                     const AlgebraGammaAction& act);

// A (x) A^op with the diagonal Gamma-action; basis (i,j) at i*dim + j.
GammaAlgebra enveloping(const StructureAlgebra& a,
                        const AlgebraGammaAction& act);

// B * Gamma with (b1*s)(b2*t) = b1 ^s(b2) * st; basis (i,s) at i*|Gamma| + s.
// Gamma acts by conjugation with the invertible elements 1*s.
GammaAlgebra skew_group_algebra(const StructureAlgebra& b,
                                const AlgebraGammaAction& bact);

// A (x) kGamma (x) A with (a,s,b)(c,t,d) = (a ^s(c), st, ^s(d) b); basis
// (i,s,j) at (i*|Gamma| + s)*dim + j. Gamma acts by conjugation with 1,s,1.
GammaAlgebra oriented_enveloping(const StructureAlgebra& a,
                                 const AlgebraGammaAction& act);

// Mechanical verification that (i,s,j) -> ((i,j),s) is an isomorphism of
// Gamma-algebras from the oriented enveloping algebra onto the skew group
// algebra of the enveloping algebra.
struct SkewEnvelopingIsoReport {
  bool pass = false;
  int dim = 0;
  std::string counterexample;  // empty on pass
};
SkewEnvelopingIsoReport check_skew_enveloping_iso(const StructureAlgebra& a,
                                                  const AlgebraGammaAction& act);

}  // namespace eqh
