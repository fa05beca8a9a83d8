#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "eqh/corpus.hpp"
#include "eqh/json_io.hpp"

using namespace eqh;

namespace {

struct TempDir {
  std::string path;
  TempDir() {
    char tmpl[] = "/tmp/eqh_test_XXXXXX";
    path = mkdtemp(tmpl);
  }
  std::string file(const std::string& name) const { return path + "/" + name; }
};

}  // namespace

TEST_CASE("group documents round-trip") {
  for (const FiniteGroup& g :
       {trivial_group(), cyclic_group(4), symmetric3_group(),
        dihedral8_group(), gl2_f2_group()}) {
    FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back.order == g.order);
    CHECK(back.mult == g.mult);
    CHECK(back.labels == g.labels);
  }
}

TEST_CASE("group document schema errors") {
  CHECK_THROWS_AS(group_from_json(Json{{"order", 2}}), InputError);
  CHECK_THROWS_AS(
      group_from_json(Json{{"order", 2}, {"mult", Json::array({1, 0})}}),
      InputError);
  // A structurally broken table surfaces as a validation error.
  Json j;
  j["order"] = 2;
  j["mult"] = Json::array({Json::array({0, 1}), Json::array({1, 1})});
  CHECK_THROWS_AS(group_from_json(j), ValidationError);
}

TEST_CASE("action documents resolve group references") {
  TempDir dir;
  write_json_file(dir.file("z3.json"), group_to_json(cyclic_group(3)));
  write_json_file(dir.file("z2.json"), group_to_json(cyclic_group(2)));
  GroupAction inv = inversion_action(cyclic_group(3));
  write_json_file(dir.file("inv.json"),
                  action_to_json(inv, "z2.json", "z3.json"));

  GroupAction back = load_action_file(dir.file("inv.json"));
  CHECK(back.gamma.order == 2);
  CHECK(back.g.order == 3);
  CHECK(back.perms == inv.perms);

  // A broken permutation row is rejected with the action axiom named.
  Json bad = action_to_json(inv, "z2.json", "z3.json");
  bad["perms"][1] = Json::array({0, 2, 2});
  write_json_file(dir.file("bad.json"), bad);
  CHECK_THROWS_WITH_AS(load_action_file(dir.file("bad.json")),
                       doctest::Contains("permutation"), InputError);

  // Missing group reference.
  Json missing = action_to_json(inv, "nope.json", "z3.json");
  write_json_file(dir.file("missing.json"), missing);
  CHECK_THROWS_AS(load_action_file(dir.file("missing.json")), InputError);
}

TEST_CASE("module documents") {
  GroupAction act = inversion_action(cyclic_group(3));
  PrimeField f2(2);
  EquivariantGModule trivial = trivial_g_module(act, f2);
  EquivariantGModule back =
      module_from_json(module_to_json(trivial), act, f2);
  CHECK(back.dim == 1);

  // Entries outside GF(p) are rejected.
  Json j = module_to_json(trivial);
  j["g_mats"][1][0][0] = 7;
  CHECK_THROWS_AS(module_from_json(j, act, f2), InputError);
}

TEST_CASE("algebra documents round-trip") {
  FiniteGroup s3 = symmetric3_group();
  GammaAlgebra ks3 = group_algebra(s3, conjugation_action(s3), PrimeField(3));
  StructureAlgebra back = algebra_from_json(algebra_to_json(ks3.algebra));
  CHECK(back.dim == ks3.algebra.dim);
  CHECK(back.c == ks3.algebra.c);
  CHECK(back.unit == ks3.algebra.unit);

  AlgebraGammaAction aback = algebra_action_from_json(
      algebra_action_to_json(ks3.action), back, ks3.action.gamma);
  CHECK(aback.mats.size() == ks3.action.mats.size());
  for (size_t s = 0; s < aback.mats.size(); ++s)
    CHECK(aback.mats[s] == ks3.action.mats[s]);
}

TEST_CASE("report JSON parses back to itself") {
  GroupAction gl2 = gl2_on_klein_action();
  GoodElementReport rep = is_good(gl2, 1, 2);
  Json j = good_report_to_json(rep);
  CHECK(Json::parse(j.dump(2)) == j);
  CHECK(Json::parse(j.dump(2)).dump(2) == j.dump(2));

  NonvanishingCertificate cert = hh1_nonvanishing_certificate(gl2, 1, 2);
  Json cj = certificate_to_json(cert);
  CHECK(Json::parse(cj.dump(2)).dump(2) == cj.dump(2));
}

TEST_CASE("bundled data files match the built-in corpus") {
  const std::string root = DATA_DIR;
  CHECK(load_group_file(root + "/groups/z2.json").mult ==
        cyclic_group(2).mult);
  CHECK(load_group_file(root + "/groups/z3.json").mult ==
        cyclic_group(3).mult);
  CHECK(load_group_file(root + "/groups/z4.json").mult ==
        cyclic_group(4).mult);
  CHECK(load_group_file(root + "/groups/z2xz2.json").mult ==
        klein_four_group().mult);
  CHECK(load_group_file(root + "/groups/s3.json").mult ==
        symmetric3_group().mult);
  CHECK(load_group_file(root + "/groups/d4.json").mult ==
        dihedral8_group().mult);
  CHECK(load_group_file(root + "/groups/gl2f2.json").mult ==
        gl2_f2_group().mult);
  CHECK(load_group_file(root + "/groups/trivial.json").order == 1);

  CHECK(load_action_file(root + "/actions/gl2_on_z2xz2.json").perms ==
        gl2_on_klein_action().perms);
  CHECK(load_action_file(root + "/actions/s3_conjugation.json").perms ==
        conjugation_action(symmetric3_group()).perms);
  CHECK(load_action_file(root + "/actions/d4_conjugation.json").perms ==
        conjugation_action(dihedral8_group()).perms);
  CHECK(load_action_file(root + "/actions/z3_inversion.json").perms ==
        inversion_action(cyclic_group(3)).perms);
  CHECK(load_action_file(root + "/actions/s3_trivial.json").gamma.order == 1);
}
