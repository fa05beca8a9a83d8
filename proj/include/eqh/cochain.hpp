#pragma once

#include "eqh/finite_group.hpp"
#include "eqh/subspace.hpp"

namespace eqh {

// Ceiling on any single cochain-space dimension a builder will materialize;
// per-degree action operators are dense dim x dim matrices, so this also
// bounds their size.
inline constexpr int kDefaultDimCap = 1 << 14;

// Bounded cochain complex of GF(p)-spaces: dims[0..N+1] and differentials
// diffs[n]: dims[n] -> dims[n+1] for n = 0..N. The relation
// d^{n+1} d^n = 0 is validated for every consecutive pair at construction.
struct CochainComplexOverFp {
  PrimeField field;
  std::vector<int> dims;
  std::vector<FpMat> diffs;

  int top_degree() const { return int(diffs.size()) - 1; }
  int dim(int n) const { return dims[n]; }
};

CochainComplexOverFp make_complex(PrimeField field, std::vector<FpMat> diffs);

struct CohomologyResult {
  int degree = 0;
  int dim = 0;
  Subspace cocycle_reps;  // representatives, independent modulo boundaries
  Subspace boundary_space;
};

// H^n = Ker d^n / Im d^{n-1}, with d^{-1} = 0.
CohomologyResult cohomology(const CochainComplexOverFp& c, int n);

// Coordinates of the class of a cocycle v in the representative basis;
// nullopt when v does not lie in the cocycle space.
std::optional<std::vector<uint8_t>> class_coordinates(
    const CohomologyResult& h, const std::vector<uint8_t>& v);

// A Gamma-action on a complex: one operator per degree and group element.
// Validated: per-degree group law, and that each differential maps the
// joint fixed space into the next one (strict commutation with the action
// is a separate diagnostic, not a requirement). The fixed spaces are joint
// kernels of (op - 1) over a generating set, never averages.
struct ComplexGammaAction {
  FiniteGroup gamma;
  std::vector<std::vector<FpMat>> ops;  // ops[n][sigma], n = 0..N+1
  std::vector<Subspace> invariants;     // per degree
  std::vector<FpMat> restricted_diffs;  // differentials in fixed-space bases
};

ComplexGammaAction make_complex_action(const CochainComplexOverFp& c,
                                       FiniteGroup gamma,
                                       std::vector<std::vector<FpMat>> ops);

struct InvariantSubcomplex {
  CochainComplexOverFp complex;
  std::vector<Subspace> spaces;  // embedding data back into the ambient one
};
InvariantSubcomplex invariant_subcomplex(const CochainComplexOverFp& c,
                                         const ComplexGammaAction& act);

// Matrix of the map induced on H^n by a degree-n map of complexes.
// Validates that f_n sends cocycles to cocycles and boundaries to
// boundaries, and reports a witness vector on failure.
FpMat induced_map_on_cohomology(const CochainComplexOverFp& src,
                                const CochainComplexOverFp& tgt,
                                const FpMat& f_n, int n);

// Diagnostic: whether every operator strictly commutes with the
// differentials.
bool action_commutes_with_differentials(const CochainComplexOverFp& c,
                                        const ComplexGammaAction& act);

}  // namespace eqh
