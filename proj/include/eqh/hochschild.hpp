#pragma once

#include "eqh/cochain.hpp"
#include "eqh/gamma_algebra.hpp"

namespace eqh {

// The Hochschild cochain complex C^n(A,M) = Maps(A^{(x)n}, M) for degrees
// 0..nmax+1, with the Gamma-action
// (^s f)(a_1 (x) ... (x) a_n) = ^s(f(^{s^-1}a_1 (x) ... (x) ^{s^-1}a_n)).
// Basis order: lexicographic in the algebra-basis tuple, module index
// fastest. The assembled differential is cross-checked against a pointwise
// evaluation of the defining formula on sampled basis cochains.
struct HochschildComplexBundle {
  CochainComplexOverFp complex;
  ComplexGammaAction action;
  int algebra_dim = 0;
  int module_dim = 0;
  int nmax = 0;
};

HochschildComplexBundle hochschild_complex(const StructureAlgebra& a,
                                           const AlgebraGammaAction& act,
                                           const EquivariantBimodule& m,
                                           int nmax,
                                           int dim_cap = kDefaultDimCap);

// Ordinary Hochschild cohomology HH^n(A,M).
CohomologyResult hh(const StructureAlgebra& a, const AlgebraGammaAction& act,
                    const EquivariantBimodule& m, int n,
                    int dim_cap = kDefaultDimCap);

// Equivariant Hochschild cohomology HH_Gamma^n(A,M): cohomology of the
// subcomplex of Gamma-equivariant cochains (degree 0 is M^Gamma).
CohomologyResult hh_gamma(const StructureAlgebra& a,
                          const AlgebraGammaAction& act,
                          const EquivariantBimodule& m, int n,
                          int dim_cap = kDefaultDimCap);

// The relative-Ext reading of HH_Gamma^n over the pair (enveloping algebra
// with Gamma adjoined, kGamma): the value is HH_Gamma^n, plus an independent
// reconstruction of the degree-n equivariant Hom space as the joint kernel
// of pointwise-built conjugation operators, which must coincide exactly with
// the invariant subspace the cohomology was computed in.
struct RelativeExtResult {
  CohomologyResult cohomology;
  int degree = 0;
  bool hom_space_matches = false;  // always true when returned
};
RelativeExtResult relative_ext(const StructureAlgebra& a,
                               const AlgebraGammaAction& act,
                               const EquivariantBimodule& m, int n,
                               int dim_cap = kDefaultDimCap);

// Matrices of the Gamma-action descended to HH^n(A,M); commutation of every
// operator with the differentials is validated first.
std::vector<FpMat> gamma_action_on_hh(const StructureAlgebra& a,
                                      const AlgebraGammaAction& act,
                                      const EquivariantBimodule& m, int n,
                                      int dim_cap = kDefaultDimCap);

struct SeparableDegreeReport {
  int degree = 0;
  int dim_equivariant = 0;  // dim HH_Gamma^n
  int dim_fixed = 0;        // dim (HH^n)^Gamma
  bool equal = false;
};
struct SeparableCaseReport {
  std::vector<SeparableDegreeReport> degrees;
  bool all_equal = false;
};

// For gcd(|Gamma|, p) = 1 (kGamma separable): per degree, compare
// dim HH_Gamma^n with the dimension of the Gamma-fixed part of HH^n.
SeparableCaseReport separable_case_check(const StructureAlgebra& a,
                                         const AlgebraGammaAction& act,
                                         const EquivariantBimodule& m,
                                         int nmax,
                                         int dim_cap = kDefaultDimCap);

}  // namespace eqh
