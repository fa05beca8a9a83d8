#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "eqh/corpus.hpp"
#include "eqh/group_action.hpp"

using namespace eqh;

TEST_CASE("action validation") {
  FiniteGroup z3 = cyclic_group(3);
  FiniteGroup z2 = cyclic_group(2);

  CHECK_NOTHROW(inversion_action(z3));
  CHECK_NOTHROW(conjugation_action(symmetric3_group()));

  // Not a permutation.
  CHECK_THROWS_AS(make_action(z2, z3, {{0, 1, 2}, {0, 0, 2}}), ValidationError);
  // A bijection that is not an automorphism: x -> x+1.
  CHECK_THROWS_AS(make_action(z2, z3, {{0, 1, 2}, {1, 2, 0}}), ValidationError);
  // Identity of Gamma must act trivially.
  CHECK_THROWS_AS(make_action(z2, z3, {{0, 2, 1}, {0, 1, 2}}), ValidationError);
  // Composition law: sigma^2 = 1 must act as the square of sigma's image.
  FiniteGroup z4 = cyclic_group(4);
  CHECK_THROWS_AS(make_action(z4, z3, {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}, {0, 1, 2}}),
                  ValidationError);
}

TEST_CASE("stabilizers") {
  FiniteGroup s3 = symmetric3_group();
  GroupAction triv = trivial_action(s3, cyclic_group(4));
  for (int x = 0; x < 4; ++x) CHECK(stabilizer(triv, x).order() == 6);

  GroupAction gl2 = gl2_on_klein_action();
  // Automorphisms always fix the identity.
  CHECK(stabilizer(gl2, 0).order() == 6);
  Subgroup gx = stabilizer(gl2, 1);  // x = e1 = (1,0)
  REQUIRE(gx.order() == 2);
  CHECK(gl2_f2_matrix(gx.elements[0]) == std::array<int, 4>{1, 0, 0, 1});
  CHECK(gl2_f2_matrix(gx.elements[1]) == std::array<int, 4>{1, 1, 0, 1});
}

TEST_CASE("inassaridze set and subgroups") {
  // Trivial omega-action gives {identity}.
  FiniteGroup z4 = cyclic_group(4);
  GroupAction triv = trivial_action(cyclic_group(2), z4);
  auto set = inassaridze_set(triv, full_subgroup(triv.g),
                             full_subgroup(triv.gamma));
  CHECK(set == std::vector<int>{0});

  // The GL2 example: H = Z2 x Z2, Omega = Gamma_{e1} gives {0, e1}.
  GroupAction gl2 = gl2_on_klein_action();
  Subgroup gx = stabilizer(gl2, 1);
  auto ina = inassaridze_set(gl2, full_subgroup(gl2.g), gx);
  CHECK(ina == std::vector<int>{0, 1});
  InassaridzeSubgroups subs =
      inassaridze_subgroups(gl2, full_subgroup(gl2.g), gx);
  CHECK(subs.generated.elements == std::vector<int>{0, 1});
  CHECK(subs.normal_closure.elements == std::vector<int>{0, 1});

  // Conjugation: the set consists of commutators, and with H = Omega = G the
  // two subgroups agree and contain the derived subgroup.
  for (const FiniteGroup& g : {symmetric3_group(), dihedral8_group()}) {
    GroupAction conj = conjugation_action(g);
    InassaridzeSubgroups s =
        inassaridze_subgroups(conj, full_subgroup(conj.g),
                              full_subgroup(conj.gamma));
    Subgroup der = derived_subgroup(conj.g);
    CHECK(s.generated.elements == s.normal_closure.elements);
    for (int e : der.elements) CHECK(s.generated.contains(e));
    CHECK(is_normal(conj.g, s.normal_closure));
  }

  // Omega failing to stabilize H is an error.
  GroupAction conj = conjugation_action(symmetric3_group());
  int transposition = 1;
  while (conj.g.mul(transposition, transposition) != 0) ++transposition;
  Subgroup h = subgroup_generated(conj.g, {transposition});
  CHECK_THROWS_AS(inassaridze_set(conj, h, full_subgroup(conj.gamma)),
                  ValidationError);
}

TEST_CASE("conjugation sub-actions on normal subgroups: generated equals "
          "closure and contains the derived subgroup") {
  // For H normal in G with all of Omega = G acting by conjugation, the
  // generated subgroup and the normal closure coincide and contain H'.
  for (const FiniteGroup& g : {symmetric3_group(), dihedral8_group()}) {
    GroupAction conj = conjugation_action(g);
    for (int e = 0; e < g.order; ++e) {
      Subgroup h = normal_closure(g, full_subgroup(g), {e});
      InassaridzeSubgroups s =
          inassaridze_subgroups(conj, h, full_subgroup(conj.gamma));
      CHECK(s.generated.elements == s.normal_closure.elements);
      for (int c : derived_of(h).elements) CHECK(s.generated.contains(c));
    }
  }
}

TEST_CASE("semidirect products") {
  // Trivial action: direct product.
  SemidirectProduct dir =
      semidirect_product(trivial_action(cyclic_group(2), cyclic_group(3)));
  CHECK(dir.group.order == 6);
  CHECK(derived_subgroup(dir.group).order() == 1);

  // Z2 acting on Z3 by inversion: the nonabelian group of order 6.
  SemidirectProduct sd = semidirect_product(inversion_action(cyclic_group(3)));
  CHECK(sd.group.order == 6);
  CHECK(derived_subgroup(sd.group).order() == 3);

  // Gamma trivial: a copy of G.
  SemidirectProduct copy =
      semidirect_product(trivial_action(trivial_group(), symmetric3_group()));
  CHECK(copy.group.order == 6);
  CHECK(copy.group.mult == symmetric3_group().mult);

  // Embeddings are homomorphisms.
  const GroupAction act = inversion_action(cyclic_group(3));
  SemidirectProduct p = semidirect_product(act);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(p.group.mul(p.embed_g[a], p.embed_g[b]) ==
            p.embed_g[act.g.mul(a, b)]);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      CHECK(p.group.mul(p.embed_gamma[s], p.embed_gamma[t]) ==
            p.embed_gamma[act.gamma.mul(s, t)]);
}

static void check_valid_transversal(const GroupAction& act, int x,
                                    const StableTransversal& tr) {
  const FiniteGroup& g = act.g;
  Subgroup c = centralizer(g, x);
  Subgroup gx = stabilizer(act, x);
  REQUIRE(int(tr.reps.size()) * c.order() == g.order);
  CHECK(tr.reps[0] == 0);
  // One representative per coset: pairwise distinct cosets.
  for (size_t i = 0; i < tr.reps.size(); ++i)
    for (size_t j = i + 1; j < tr.reps.size(); ++j)
      CHECK(!c.contains(g.mul(tr.reps[j], g.invert(tr.reps[i]))));
  // Conjugates enumerate the class without repetition.
  std::vector<int> conjs;
  for (int r : tr.reps)
    conjs.push_back(g.mul(g.mul(g.invert(r), x), r));
  std::sort(conjs.begin(), conjs.end());
  CHECK(std::adjacent_find(conjs.begin(), conjs.end()) == conjs.end());
  // Setwise stability under Gamma_x.
  for (int s : gx.elements)
    for (int r : tr.reps)
      CHECK(std::binary_search(tr.reps.begin(), tr.reps.end(),
                               act.apply(s, r)));
}

TEST_CASE("stable transversals") {
  // Central x: single coset, gamma_x = {1}.
  GroupAction gl2 = gl2_on_klein_action();
  auto res = stable_transversal(gl2, 1);
  REQUIRE(res.found());
  CHECK(res.transversal->reps == std::vector<int>{0});

  // Trivial Gamma: always found.
  GroupAction triv = trivial_action(trivial_group(), symmetric3_group());
  for (int x = 0; x < 6; ++x) {
    auto r = stable_transversal(triv, x);
    REQUIRE(r.found());
    check_valid_transversal(triv, x, *r.transversal);
  }

  // S3 under conjugation: the identity and the transpositions admit one
  // (the transpositions exercise a nontrivial coset orbit), while the
  // 3-cycles are obstructed: no transposition is fixed by all of A3.
  GroupAction conj = conjugation_action(symmetric3_group());
  int s3_found = 0, s3_obstructed = 0;
  for (int x = 0; x < 6; ++x) {
    auto r = stable_transversal(conj, x);
    if (r.found()) {
      check_valid_transversal(conj, x, *r.transversal);
      ++s3_found;
    } else {
      ++s3_obstructed;
    }
  }
  CHECK(s3_found == 4);
  CHECK(s3_obstructed == 2);

  // D4 under conjugation: non-central elements are obstructed.
  GroupAction d4conj = conjugation_action(dihedral8_group());
  int found_count = 0, obstructed = 0;
  for (int x = 0; x < 8; ++x) {
    auto r = stable_transversal(d4conj, x);
    if (r.found()) {
      check_valid_transversal(d4conj, x, *r.transversal);
      ++found_count;
    } else {
      CHECK(!r.obstruction_orbit.empty());
      ++obstructed;
    }
  }
  CHECK(found_count == 2);  // exactly the central elements 1 and r^2
  CHECK(obstructed == 6);
}

TEST_CASE("coset walk data") {
  FiniteGroup s3 = symmetric3_group();
  GroupAction triv = trivial_action(trivial_group(), s3);
  int three_cycle = -1;
  for (int g = 1; g < 6; ++g)
    if (s3.mul(g, g) != 0) three_cycle = g;
  int transposition = 1;
  while (s3.mul(transposition, transposition) != 0) ++transposition;

  auto res = stable_transversal(triv, three_cycle);
  REQUIRE(res.found());
  const StableTransversal& tr = *res.transversal;
  REQUIRE(tr.reps.size() == 2);

  Subgroup c = centralizer(s3, three_cycle);
  CosetWalk walk = coset_walk_data(triv, three_cycle, tr, {transposition});
  for (size_t j = 0; j < tr.reps.size(); ++j) {
    REQUIRE(walk.h[j].size() == 1);
    // gamma_j g = h gamma_{s}: re-multiply exactly.
    CHECK(s3.mul(tr.reps[j], transposition) ==
          s3.mul(walk.h[j][0], tr.reps[walk.s[j][0]]));
    CHECK(c.contains(walk.h[j][0]));
  }

  // Single-coset case: h = g, s stays at 0.
  GroupAction gl2 = gl2_on_klein_action();
  auto central = stable_transversal(gl2, 1);
  CosetWalk w1 = coset_walk_data(gl2, 1, *central.transversal, {3, 2});
  CHECK(w1.h[0] == std::vector<int>{3, 2});
  CHECK(w1.s[0] == std::vector<int>{0, 0});

  // Empty tuple: empty walks.
  CosetWalk w0 = coset_walk_data(triv, three_cycle, tr, {});
  CHECK(w0.h[0].empty());
  CHECK(w0.h[1].empty());

  // Longer tuples re-multiply exactly for every start.
  const std::vector<int> tuple = {transposition, three_cycle, 5};
  CosetWalk w2 = coset_walk_data(triv, three_cycle, tr, tuple);
  for (size_t j = 0; j < tr.reps.size(); ++j) {
    int cur = int(j);
    for (size_t i = 0; i < tuple.size(); ++i) {
      CHECK(s3.mul(tr.reps[cur], tuple[i]) ==
            s3.mul(w2.h[j][i], tr.reps[w2.s[j][i]]));
      cur = w2.s[j][i];
    }
  }
}

TEST_CASE("action restriction") {
  GroupAction conj = conjugation_action(symmetric3_group());
  Subgroup a3 = derived_subgroup(conj.g);
  Subgroup gx = centralizer(conj.g, 0);  // whole group as stabilizer

  RestrictedAction ra = restrict_action(conj, full_subgroup(conj.gamma), a3);
  CHECK(ra.action.gamma.order == 6);
  CHECK(ra.action.g.order == 3);

  GammaRestrictedAction gr =
      restrict_to_gamma_subgroup(conj, derived_subgroup(conj.gamma));
  CHECK(gr.action.gamma.order == 3);
  CHECK(gr.action.g.order == 6);

  // Restricting to a non-stable subgroup fails.
  int transposition = 1;
  while (conj.g.mul(transposition, transposition) != 0) ++transposition;
  Subgroup unstable = subgroup_generated(conj.g, {transposition});
  CHECK_THROWS_AS(restrict_action(conj, full_subgroup(conj.gamma), unstable),
                  ValidationError);
}
