#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqh/burghelea.hpp"
#include "eqh/corpus.hpp"

using namespace eqh;

TEST_CASE("pi on an abelian group at the identity") {
  PrimeField f2(2);
  FiniteGroup z4 = cyclic_group(4);
  std::vector<FpMat> pi = build_pi(z4, 0, f2, 1);
  REQUIRE(pi.size() == 2);
  CHECK(pi[1].rows == 4);
  CHECK(pi[1].cols == 16);
  // The basis cochain g -> [g = h] e_h evaluates to 1 at h.
  for (int h = 0; h < 4; ++h) {
    for (int u = 0; u < 4; ++u)
      CHECK(pi[1].at(h, h * 4 + u) == (u == h ? 1 : 0));
  }
}

TEST_CASE("nu on a central element") {
  PrimeField f2(2);
  GroupAction gl2 = gl2_on_klein_action();
  auto tr = stable_transversal(gl2, 1);
  REQUIRE(tr.found());
  std::vector<FpMat> nu = build_nu(gl2, 1, *tr.transversal, f2, 1);
  // Single coset: nu(psi)(g) = psi(g) e_{x g}.
  const FiniteGroup& g = gl2.g;
  for (int a = 0; a < 4; ++a)
    for (int col = 0; col < 4; ++col)
      for (int u = 0; u < 4; ++u)
        CHECK(nu[1].at(a * 4 + u, col) ==
              ((a == col && u == g.mul(1, a)) ? 1 : 0));
}

TEST_CASE("pi.nu is the identity on multi-coset instances") {
  PrimeField f2(2);
  FiniteGroup s3 = symmetric3_group();
  GroupAction triv = trivial_action(trivial_group(), s3);
  int three_cycle = -1;
  for (int e = 1; e < 6; ++e)
    if (s3.mul(e, e) != 0) three_cycle = e;

  CentralizerContext ctx =
      make_centralizer_context(triv, three_cycle, f2, 2);
  ComparisonMaps maps = build_comparison_maps(ctx);
  for (int n = 1; n <= 2; ++n) CHECK(mul(maps.pi[n], maps.nu[n]).is_identity());

  // Zero cochains map to zero on both sides.
  CHECK(mat_vec(maps.nu[1], std::vector<uint8_t>(maps.nu[1].cols, 0)) ==
        std::vector<uint8_t>(maps.nu[1].rows, 0));
}

TEST_CASE("equivariant containments") {
  PrimeField f2(2);

  // Trivial Gamma: containments hold trivially (full spaces).
  GroupAction triv = trivial_action(trivial_group(), cyclic_group(4));
  CentralizerContext c0 = make_centralizer_context(triv, 1, f2, 2);
  ComparisonMaps m0 = build_comparison_maps(c0);
  CHECK(check_equivariant_containments(c0, m0).all_ok);

  // The matrix-group example, degrees 1..2.
  GroupAction gl2 = gl2_on_klein_action();
  CentralizerContext c1 = make_centralizer_context(gl2, 1, f2, 2);
  ComparisonMaps m1 = build_comparison_maps(c1);
  CHECK(check_equivariant_containments(c1, m1).all_ok);

  // S3 with conjugation at a transposition (three cosets, nontrivial
  // stabilizer), degrees 1..2.
  GroupAction conj = conjugation_action(symmetric3_group());
  int transposition = 1;
  while (conj.g.mul(transposition, transposition) != 0) ++transposition;
  CentralizerContext c2 =
      make_centralizer_context(conj, transposition, f2, 2);
  ComparisonMaps m2 = build_comparison_maps(c2);
  CHECK(check_equivariant_containments(c2, m2).all_ok);
}

TEST_CASE("embedding on cohomology for small instances") {
  PrimeField f2(2);

  // G = Z2, trivial Gamma, x = 1: H^1(Z2,k) is 1-dimensional inside the
  // 2-dimensional HH^1(kZ2).
  GroupAction triv = trivial_action(trivial_group(), cyclic_group(2));
  CentralizerContext ctx = make_centralizer_context(triv, 1, f2, 1);
  ComparisonMaps maps = build_comparison_maps(ctx);
  CohomologyEmbedding emb = embedding_on_cohomology(ctx, maps, 1);
  CHECK(emb.source_dim == 1);
  CHECK(emb.rank_nu == 1);
  CHECK(emb.nu_induced.rows == 2);
  CHECK(emb.left_inverse_ok);

  // Zero-dimensional source: vacuously injective.
  GroupAction z3t = trivial_action(trivial_group(), cyclic_group(3));
  CentralizerContext zctx = make_centralizer_context(z3t, 1, f2, 1);
  ComparisonMaps zmaps = build_comparison_maps(zctx);
  CohomologyEmbedding zemb = embedding_on_cohomology(zctx, zmaps, 1);
  CHECK(zemb.source_dim == 0);
  CHECK(zemb.rank_nu == 0);

  // Degree 0 is excluded by design.
  CHECK_THROWS_AS(embedding_on_cohomology(ctx, maps, 0), ValidationError);
}

TEST_CASE("chain squares for the comparison maps") {
  PrimeField f2(2);
  GroupAction gl2 = gl2_on_klein_action();
  CentralizerContext ctx = make_centralizer_context(gl2, 1, f2, 2);
  ComparisonMaps maps = build_comparison_maps(ctx);
  CohomologyEmbedding emb = embedding_on_cohomology(ctx, maps, 1);
  CHECK(emb.chain_squares_checked);
  CHECK(emb.chain_squares_commute);
}

TEST_CASE("dimension decomposition for small group algebras") {
  // dim HH^n(kG) = sum over class representatives of dim H^n(C_G(x), k).
  BurgheleaReport z2 = burghelea_dimension_check(cyclic_group(2), 2, 3);
  CHECK(z2.all_equal);
  CHECK(z2.degrees[1].hochschild_dim == 2);  // 1 + 1

  BurgheleaReport z3 = burghelea_dimension_check(cyclic_group(3), 3, 2);
  CHECK(z3.all_equal);

  BurgheleaReport s3p3 = burghelea_dimension_check(symmetric3_group(), 3, 1);
  CHECK(s3p3.all_equal);
  CHECK(s3p3.degrees[1].hochschild_dim == 1);  // only the 3-cycle class

  BurgheleaReport triv = burghelea_dimension_check(trivial_group(), 2, 2);
  CHECK(triv.all_equal);
  CHECK(triv.degrees[1].hochschild_dim == 0);
  CHECK(triv.degrees[2].hochschild_dim == 0);
}

TEST_CASE("transversal choice diagnostic") {
  PrimeField f2(2);
  GroupAction conj = conjugation_action(symmetric3_group());
  int transposition = 1;
  while (conj.g.mul(transposition, transposition) != 0) ++transposition;
  TransversalChoiceReport rep =
      compare_transversal_choices(conj, transposition, 1, f2);
  CHECK(rep.applicable);
  CHECK(rep.ranks_equal);

  // Obstructed element: not applicable.
  GroupAction d4 = conjugation_action(dihedral8_group());
  TransversalChoiceReport blocked = compare_transversal_choices(d4, 1, 1, f2);
  CHECK(!blocked.applicable);

  // Trivial Gamma on S3 at a 3-cycle: two cosets, and the alternate pick
  // genuinely differs.
  GroupAction triv = trivial_action(trivial_group(), symmetric3_group());
  int three_cycle = -1;
  for (int e = 1; e < 6; ++e)
    if (triv.g.mul(e, e) != 0) three_cycle = e;
  TransversalChoiceReport tr =
      compare_transversal_choices(triv, three_cycle, 1, f2);
  CHECK(tr.applicable);
  CHECK(tr.choices_differ);
  CHECK(tr.ranks_equal);
}
