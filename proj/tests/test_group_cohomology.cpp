#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqh/corpus.hpp"
#include "eqh/group_cohomology.hpp"

using namespace eqh;

// Left-regular module kG with Gamma permuting the basis along the action.
static EquivariantGModule regular_g_module(const GroupAction& act,
                                           PrimeField field) {
  const int n = act.g.order;
  std::vector<FpMat> gmats, gammats;
  for (int a = 0; a < n; ++a) {
    FpMat m(field, n, n);
    for (int x = 0; x < n; ++x) m.at(act.g.mul(a, x), x) = 1;
    gmats.push_back(std::move(m));
  }
  for (int s = 0; s < act.gamma.order; ++s) {
    FpMat m(field, n, n);
    for (int x = 0; x < n; ++x) m.at(act.apply(s, x), x) = 1;
    gammats.push_back(std::move(m));
  }
  return make_equivariant_g_module(act.g, act, n, std::move(gmats),
                                   std::move(gammats));
}

TEST_CASE("complex dimensions and degenerate cases") {
  PrimeField f2(2);
  FiniteGroup z2 = cyclic_group(2);
  GroupAction act = trivial_action(trivial_group(), z2);
  GroupCochainComplex gc =
      group_cochain_complex(act, trivial_g_module(act, f2), 2);
  CHECK(gc.complex.dims == std::vector<int>{1, 2, 4, 8});

  // Trivial group: H^0 = N, H^n = 0 for n >= 1.
  GroupAction tact = trivial_action(trivial_group(), trivial_group());
  EquivariantGModule tm = trivial_g_module(tact, f2);
  CHECK(equivariant_group_cohomology(tact, tm, 0).dim == 1);
  CHECK(equivariant_group_cohomology(tact, tm, 1).dim == 0);
  CHECK(equivariant_group_cohomology(tact, tm, 2).dim == 0);

  // The dimension cap is enforced with a named degree.
  CHECK_THROWS_AS(group_cochain_complex(act, trivial_g_module(act, f2), 2, 4),
                  SizeCapError);
}

TEST_CASE("cohomology of small groups with trivial coefficients") {
  PrimeField f2(2), f3(3);

  // H^1(Z2, F2) = Hom(Z2, F2) is one-dimensional.
  GroupAction z2a = trivial_action(trivial_group(), cyclic_group(2));
  CHECK(equivariant_group_cohomology(z2a, trivial_g_module(z2a, f2), 1).dim ==
        1);

  // |G| invertible in k: higher cohomology vanishes.
  GroupAction z3a = trivial_action(trivial_group(), cyclic_group(3));
  EquivariantGModule z3m = trivial_g_module(z3a, f2);
  CHECK(equivariant_group_cohomology(z3a, z3m, 1).dim == 0);
  CHECK(equivariant_group_cohomology(z3a, z3m, 2).dim == 0);

  // H^*(Z2, F2) is one-dimensional in every degree.
  EquivariantGModule z2m = trivial_g_module(z2a, f2);
  for (int n = 0; n <= 3; ++n)
    CHECK(equivariant_group_cohomology(z2a, z2m, n).dim == 1);

  // H^1(S3, F3) = 0 but H^1(Z3, F3) = 1.
  GroupAction s3a = trivial_action(trivial_group(), symmetric3_group());
  CHECK(equivariant_group_cohomology(s3a, trivial_g_module(s3a, f3), 1).dim ==
        0);
  CHECK(equivariant_group_cohomology(z3a, trivial_g_module(z3a, f3), 1).dim ==
        1);
}

TEST_CASE("degree one with trivial coefficients matches the hom basis") {
  for (uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (const FiniteGroup& g :
         {cyclic_group(2), cyclic_group(3), cyclic_group(4),
          klein_four_group(), symmetric3_group(), dihedral8_group()}) {
      GroupAction act = trivial_action(trivial_group(), g);
      const int h1 =
          equivariant_group_cohomology(act, trivial_g_module(act, f), 1).dim;
      CHECK(h1 == additive_hom_basis(g, trivial_subgroup(g), f).rows);
    }
  }
}

TEST_CASE("hom_to_additive_group outputs are equivariant-complex cocycles") {
  PrimeField f2(2);
  FiniteGroup s3 = symmetric3_group();
  GroupAction conj = conjugation_action(s3);
  FpMat homs = hom_to_additive_group(s3, derived_subgroup(s3), 2);
  REQUIRE(homs.rows == 1);

  GroupCochainComplex gc =
      group_cochain_complex(conj, trivial_g_module(conj, f2), 1);
  std::vector<uint8_t> h(homs.row(0), homs.row(0) + 6);
  // A homomorphism is a 1-cocycle of the full complex...
  for (uint8_t v : mat_vec(gc.complex.diffs[1], h)) CHECK(v == 0);
  // ... and this one is conjugation-invariant, hence lies in the
  // equivariant subcomplex.
  CHECK(gc.action.invariants[1].contains_vector(h));

  CHECK_THROWS_AS(
      hom_to_additive_group(s3, subgroup_generated(s3, {2}), 2),
      ValidationError);  // non-normal floor (a transposition's subgroup)
}

TEST_CASE("equivariant cohomology for the matrix-group example") {
  // Gamma = GL2(F2) on G = Z2xZ2, x = e1: restrict to the stabilizer and
  // check H^1 of the centralizer (the whole abelian G) is nonzero.
  GroupAction gl2 = gl2_on_klein_action();
  Subgroup gx = stabilizer(gl2, 1);
  GammaRestrictedAction rx = restrict_to_gamma_subgroup(gl2, gx);
  PrimeField f2(2);
  EquivariantGModule k = trivial_g_module(rx.action, f2);
  CHECK(equivariant_group_cohomology(rx.action, k, 1).dim >= 1);
}

TEST_CASE("degree zero equals the joint fixed space of both groups") {
  PrimeField f2(2);
  GroupAction conj = conjugation_action(symmetric3_group());
  EquivariantGModule reg = regular_g_module(conj, f2);
  GroupCochainComplex gc = group_cochain_complex(conj, reg, 1);
  InvariantSubcomplex sub = invariant_subcomplex(gc.complex, gc.action);
  const int h0 = cohomology(sub.complex, 0).dim;

  std::vector<FpMat> all_ops;
  for (const FpMat& m : reg.gmats) all_ops.push_back(m);
  for (const FpMat& m : reg.gammats) all_ops.push_back(m);
  CHECK(h0 == common_kernel(all_ops, FpMat::identity(f2, reg.dim)).dim());
}

TEST_CASE("module validation rejects incompatible actions") {
  PrimeField f2(2);
  GroupAction conj = conjugation_action(symmetric3_group());
  const int n = conj.g.order;
  std::vector<FpMat> gmats;
  for (int a = 0; a < n; ++a) {
    FpMat m(f2, n, n);
    for (int x = 0; x < n; ++x) m.at(conj.g.mul(a, x), x) = 1;
    gmats.push_back(std::move(m));
  }
  // Identity gammats are not compatible with the conjugation action on a
  // nonabelian group through the regular module.
  std::vector<FpMat> bad(conj.gamma.order, FpMat::identity(f2, n));
  CHECK_THROWS_WITH_AS(
      make_equivariant_g_module(conj.g, conj, n, gmats, bad),
      doctest::Contains("compatible"), ValidationError);
}
