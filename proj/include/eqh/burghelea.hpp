#pragma once

#include "eqh/group_cohomology.hpp"
#include "eqh/hochschild.hpp"

namespace eqh {

// Shared data for the comparison maps attached to one element x: the
// stabilizer Gamma_x and centralizer C_G(x) as standalone groups, the
// Hochschild complex of kG under the restricted Gamma_x-action, the group
// cochain complex of C_G(x) with trivial coefficients, and the stable
// transversal search outcome.
struct CentralizerContext {
  int x = 0;
  PrimeField field;
  int nmax = 0;
  Subgroup gamma_x;                   // subgroup of Gamma
  Subgroup c;                         // C_G(x) inside G
  GammaRestrictedAction on_g;         // Gamma_x acting on all of G
  RestrictedAction on_c;              // Gamma_x acting on C_G(x)
  GammaAlgebra kg;                    // kG as a Gamma_x-algebra
  EquivariantBimodule kg_bimodule;    // kG over itself
  HochschildComplexBundle hochschild; // C^*(kG, kG)
  GroupCochainComplex group_side;     // C^*(C_G(x), k)
  StableTransversalResult transversal;
};

CentralizerContext make_centralizer_context(const GroupAction& act, int x,
                                            PrimeField field, int nmax,
                                            int dim_cap = kDefaultDimCap);

// The comparison maps in cochain degrees 1..nmax (index 0 unused):
//  pi[n]: C^n(kG,kG) -> C^n(C_G(x), kx),  kx identified with k,
//  nu[n]: C^n(C_G(x), kx) -> C^n(kG,kG),  built from the coset rewriting
// data of the transversal. pi.nu = identity is validated at construction.
struct ComparisonMaps {
  int x = 0;
  StableTransversal gamma_x;
  std::vector<FpMat> pi;
  std::vector<FpMat> nu;
  int nmax = 0;
};

std::vector<FpMat> build_pi(const FiniteGroup& g, int x, PrimeField field,
                            int nmax);
std::vector<FpMat> build_nu(const GroupAction& act, int x,
                            const StableTransversal& gamma_x, PrimeField field,
                            int nmax);
ComparisonMaps build_comparison_maps(const CentralizerContext& ctx);

// Image containments of pi and nu on the Gamma_x-equivariant subspaces, per
// degree. Throws when a containment fails (that would indicate an encoding
// bug, not a property of the input).
struct InvariantContainmentReport {
  std::vector<int> degrees;
  bool all_ok = false;
};
InvariantContainmentReport check_equivariant_containments(
    const CentralizerContext& ctx, const ComparisonMaps& maps);

// The maps induced on the cohomology of the equivariant subcomplexes:
// nu_induced embeds H^n_{Gamma_x}(C_G(x),k) into HH^n_{Gamma_x}(kG) with
// pi_induced a left inverse. Cocycle/boundary preservation is validated
// before either map is descended.
struct CohomologyEmbedding {
  int degree = 0;
  FpMat nu_induced;
  FpMat pi_induced;
  int source_dim = 0;
  int rank_nu = 0;
  bool left_inverse_ok = false;
  // Strict chain-square diagnostic at the ambient cochain level, recorded
  // when degree + 1 is inside the built range.
  bool chain_squares_checked = false;
  bool chain_squares_commute = false;
};
CohomologyEmbedding embedding_on_cohomology(const CentralizerContext& ctx,
                                            const ComparisonMaps& maps, int n);

// Non-equivariant dimension bookkeeping: dim HH^n(kG) against the sum of
// dim H^n(C_G(x), k) over conjugacy class representatives, each side by its
// own engine.
struct BurgheleaDegreeReport {
  int degree = 0;
  int hochschild_dim = 0;
  std::vector<int> class_dims;  // one per class representative
  int sum = 0;
  bool equal = false;
};
struct BurgheleaReport {
  std::vector<int> class_reps;
  std::vector<BurgheleaDegreeReport> degrees;
  bool all_equal = false;
};
BurgheleaReport burghelea_dimension_check(const FiniteGroup& g, uint32_t p,
                                          int nmax,
                                          int dim_cap = kDefaultDimCap);

// Diagnostic for the dependence of the embedding on the transversal choice:
// build nu from two deterministic stable transversals (when they differ)
// and compare the induced ranks.
struct TransversalChoiceReport {
  bool applicable = false;   // a stable transversal exists
  bool choices_differ = false;
  int rank_default = 0;
  int rank_alt = 0;
  bool ranks_equal = false;
};
TransversalChoiceReport compare_transversal_choices(const GroupAction& act,
                                                    int x, int n,
                                                    PrimeField field,
                                                    int dim_cap = kDefaultDimCap);

}  // namespace eqh
