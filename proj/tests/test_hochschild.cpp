#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqh/corpus.hpp"
#include "eqh/hochschild.hpp"

using namespace eqh;

namespace {

struct Setup {
  GammaAlgebra ga;
  EquivariantBimodule m;
};

Setup group_setup(const FiniteGroup& g, const GroupAction& act, uint32_t p) {
  GammaAlgebra ga = group_algebra(g, act, PrimeField(p));
  EquivariantBimodule m = regular_bimodule(ga.algebra, ga.action);
  return Setup{std::move(ga), std::move(m)};
}

Setup trivial_setup(const FiniteGroup& g, uint32_t p) {
  return group_setup(g, trivial_action(trivial_group(), g), p);
}

}  // namespace

TEST_CASE("complex shape and the base field case") {
  Setup k = trivial_setup(trivial_group(), 5);
  CHECK(hh(k.ga.algebra, k.ga.action, k.m, 0).dim == 1);
  CHECK(hh(k.ga.algebra, k.ga.action, k.m, 1).dim == 0);
  CHECK(hh(k.ga.algebra, k.ga.action, k.m, 2).dim == 0);

  Setup z2 = trivial_setup(cyclic_group(2), 2);
  HochschildComplexBundle b =
      hochschild_complex(z2.ga.algebra, z2.ga.action, z2.m, 1);
  CHECK(b.complex.dims == std::vector<int>{2, 4, 8});

  CHECK_THROWS_AS(hochschild_complex(z2.ga.algebra, z2.ga.action, z2.m, 2, 4),
                  SizeCapError);
}

TEST_CASE("first Hochschild cohomology of small group algebras") {
  // GF(2)[Z2] carries two independent outer derivations.
  Setup z2 = trivial_setup(cyclic_group(2), 2);
  CHECK(hh(z2.ga.algebra, z2.ga.action, z2.m, 1).dim == 2);

  // GF(3)[Z2] is semisimple.
  Setup z2_3 = trivial_setup(cyclic_group(2), 3);
  CHECK(hh(z2_3.ga.algebra, z2_3.ga.action, z2_3.m, 1).dim == 0);

  // GF(3)[Z3] = F3[t]/(t^3) has nonzero outer derivations.
  Setup z3 = trivial_setup(cyclic_group(3), 3);
  CHECK(hh(z3.ga.algebra, z3.ga.action, z3.m, 1).dim >= 1);
}

TEST_CASE("degree zero equals the center: one dimension per class") {
  for (uint32_t p : {2u, 3u}) {
    for (const FiniteGroup& g :
         {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          klein_four_group(), symmetric3_group(), dihedral8_group()}) {
      Setup s = trivial_setup(g, p);
      CHECK(hh(s.ga.algebra, s.ga.action, s.m, 0).dim ==
            int(conjugacy_classes(g).classes.size()));
    }
  }
}

TEST_CASE("equivariant cohomology with trivial Gamma reproduces hh exactly") {
  Setup s3 = trivial_setup(symmetric3_group(), 3);
  for (int n = 0; n <= 1; ++n) {
    CohomologyResult plain = hh(s3.ga.algebra, s3.ga.action, s3.m, n);
    CohomologyResult equi = hh_gamma(s3.ga.algebra, s3.ga.action, s3.m, n);
    CHECK(plain.dim == equi.dim);
    CHECK(plain.cocycle_reps.basis == equi.cocycle_reps.basis);
  }
}

TEST_CASE("degree-zero equivariant formula via an independent joint kernel") {
  // HH^0_Gamma = { m in M^Gamma : am = ma for all a }: one joint kernel of
  // the commutation constraints (L_i - R_i) v = 0 and the fixed-vector
  // constraints (g_s - 1) v = 0.
  GroupAction conj = conjugation_action(symmetric3_group());
  Setup s = group_setup(conj.g, conj, 2);
  HochschildComplexBundle b =
      hochschild_complex(s.ga.algebra, s.ga.action, s.m, 0);
  InvariantSubcomplex inv = invariant_subcomplex(b.complex, b.action);
  CohomologyResult h0 = cohomology(inv.complex, 0);

  FpMat identity = FpMat::identity(PrimeField(2), s.m.dim);
  std::vector<FpMat> constraints;
  for (int i = 0; i < s.ga.algebra.dim; ++i)
    constraints.push_back(add(sub(s.m.left[i], s.m.right[i]), identity));
  for (const FpMat& gm : s.m.gmats) constraints.push_back(gm);
  Subspace direct = common_kernel(constraints, identity);

  // For kS3 under conjugation every class sum is fixed: the full center.
  CHECK(direct.dim() == 3);
  CHECK(h0.dim == direct.dim());
  // Exact subspace equality after embedding the subcomplex representatives.
  FpMat ambient_reps = mul(h0.cocycle_reps.basis, inv.spaces[0].basis);
  CHECK(direct.same_space(Subspace::from_rows(ambient_reps)));
}

TEST_CASE("relative ext agrees with the equivariant computation") {
  // Trivial Gamma: plain Hochschild cohomology.
  Setup z2 = trivial_setup(cyclic_group(2), 2);
  RelativeExtResult r = relative_ext(z2.ga.algebra, z2.ga.action, z2.m, 1);
  CHECK(r.hom_space_matches);
  CHECK(r.cohomology.dim == 2);

  // A = k: degree zero is M^Gamma, higher degrees vanish.
  FiniteGroup z3 = cyclic_group(3);
  GammaAlgebra k = group_algebra(
      trivial_group(), trivial_action(z3, trivial_group()), PrimeField(2));
  EquivariantBimodule km = regular_bimodule(k.algebra, k.action);
  CHECK(relative_ext(k.algebra, k.action, km, 0).cohomology.dim == 1);
  CHECK(relative_ext(k.algebra, k.action, km, 1).cohomology.dim == 0);

  // A nontrivial action with p dividing |Gamma|.
  GroupAction inv3 = inversion_action(cyclic_group(3));
  Setup s = group_setup(inv3.g, inv3, 2);
  for (int n = 0; n <= 2; ++n) {
    RelativeExtResult rr = relative_ext(s.ga.algebra, s.ga.action, s.m, n);
    CHECK(rr.hom_space_matches);
    CHECK(rr.cohomology.dim ==
          hh_gamma(s.ga.algebra, s.ga.action, s.m, n).dim);
  }
}

TEST_CASE("the descended Gamma-action on HH") {
  // Trivial action: identity operators.
  Setup s3 = trivial_setup(symmetric3_group(), 3);
  for (const FpMat& op :
       gamma_action_on_hh(s3.ga.algebra, s3.ga.action, s3.m, 0))
    CHECK(op.is_identity());

  // Z2 inverting Z3 over GF(3): HH^0 is the 3-dimensional center and the
  // involution permutes the class sums of z and z^2.
  GroupAction inv3 = inversion_action(cyclic_group(3));
  Setup s = group_setup(inv3.g, inv3, 3);
  std::vector<FpMat> ops = gamma_action_on_hh(s.ga.algebra, s.ga.action, s.m, 0);
  REQUIRE(ops.size() == 2);
  CHECK(ops[0].is_identity());
  CHECK(!ops[1].is_identity());
  CHECK(mul(ops[1], ops[1]).is_identity());  // order divides |Gamma|

  // Every induced operator's order divides |Gamma| across degrees.
  for (int n = 0; n <= 1; ++n) {
    std::vector<FpMat> dops =
        gamma_action_on_hh(s.ga.algebra, s.ga.action, s.m, n);
    for (const FpMat& op : dops) {
      FpMat power = op;
      for (int k = 1; k < inv3.gamma.order; ++k) power = mul(power, op);
      CHECK(power.is_identity());
    }
  }
}

TEST_CASE("separable case: equivariant dimensions equal fixed dimensions") {
  // Z2 on GF(3)[Z3] by inversion, degrees up to 2.
  GroupAction inv3 = inversion_action(cyclic_group(3));
  Setup s = group_setup(inv3.g, inv3, 3);
  SeparableCaseReport rep =
      separable_case_check(s.ga.algebra, s.ga.action, s.m, 2);
  CHECK(rep.all_equal);
  REQUIRE(rep.degrees.size() == 3);
  for (const auto& d : rep.degrees) CHECK(d.equal);

  // Z2 acting trivially on GF(3)[Z2]: equality with the full HH dimensions.
  FiniteGroup z2 = cyclic_group(2);
  GroupAction triv22 = trivial_action(cyclic_group(3), z2);
  Setup t = group_setup(z2, triv22, 2);
  // |Gamma| = 3, p = 2: separable.
  SeparableCaseReport rep2 =
      separable_case_check(t.ga.algebra, t.ga.action, t.m, 2);
  CHECK(rep2.all_equal);
  for (const auto& d : rep2.degrees)
    CHECK(d.dim_equivariant ==
          hh(t.ga.algebra, t.ga.action, t.m, d.degree).dim);

  // Precondition: p dividing |Gamma| is rejected.
  GroupAction inv3_2 = inversion_action(cyclic_group(3));
  Setup bad = group_setup(inv3_2.g, inv3_2, 2);
  CHECK_THROWS_WITH_AS(
      separable_case_check(bad.ga.algebra, bad.ga.action, bad.m, 1),
      doctest::Contains("separable"), ValidationError);
}

TEST_CASE("automorphism-induced operators commute with the differentials") {
  // The Gamma-action on cochains comes from algebra automorphisms and a
  // compatible bimodule, so it strictly commutes, degree by degree.
  for (uint32_t p : {2u, 3u}) {
    GroupAction conj = conjugation_action(symmetric3_group());
    Setup s = group_setup(conj.g, conj, p);
    HochschildComplexBundle b =
        hochschild_complex(s.ga.algebra, s.ga.action, s.m, 1);
    CHECK(action_commutes_with_differentials(b.complex, b.action));
  }
  GroupAction gl2 = gl2_on_klein_action();
  Setup s = group_setup(gl2.g, gl2, 2);
  HochschildComplexBundle b =
      hochschild_complex(s.ga.algebra, s.ga.action, s.m, 2);
  CHECK(action_commutes_with_differentials(b.complex, b.action));
}

TEST_CASE("equivariant dimensions for the matrix-group example") {
  GroupAction gl2 = gl2_on_klein_action();
  Subgroup gx = stabilizer(gl2, 1);
  GammaRestrictedAction rx = restrict_to_gamma_subgroup(gl2, gx);
  Setup s = group_setup(rx.action.g, rx.action, 2);
  CHECK(hh_gamma(s.ga.algebra, s.ga.action, s.m, 1).dim >= 1);
}
