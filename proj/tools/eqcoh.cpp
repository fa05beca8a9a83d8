// eqcoh: batch front end for the exact equivariant cohomology engines.
//
// Subcommands: check-good, hh, hgamma, hgroup, relext, burghelea, separable,
// verify-suite. Inputs are JSON documents (group tables, actions, modules);
// output is deterministic text or JSON. Exit codes: 0 success, 1 a
// verification-style check failed, 2 malformed input or unsatisfiable
// preconditions.

#include <CLI11.hpp>
#include <iostream>

#include "eqh/json_io.hpp"
#include "eqh/verify_suite.hpp"

using namespace eqh;

namespace {

struct Options {
  uint32_t prime = 2;
  int max_degree = 2;
  std::string group_file;
  std::string action_file;
  std::string module_file;
  bool certify = false;
  std::string format = "text";
  int element = -1;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--prime", o.prime, "prime modulus p (default 2)");
  cmd->add_option("--max-degree", o.max_degree,
                  "largest cohomological degree (default 2)")
      ->check(CLI::Range(0, 3));
  cmd->add_option("--group", o.group_file, "group JSON document");
  cmd->add_option("--action", o.action_file, "action JSON document");
  cmd->add_option("--module", o.module_file, "module JSON document");
  cmd->add_flag("--certify", o.certify, "emit nonvanishing certificates");
  cmd->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--element", o.element, "restrict to one element index");
}

GroupAction resolve_action(const Options& o) {
  if (!o.action_file.empty()) return load_action_file(o.action_file);
  if (!o.group_file.empty()) {
    FiniteGroup g = load_group_file(o.group_file);
    return trivial_action(trivial_group(), std::move(g));
  }
  throw InputError("need --group or --action");
}

void emit(const Options& o, const Json& report,
          const std::string& text_body) {
  if (o.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text_body;
}

Json degree_report(const CohomologyResult& h, bool with_reps) {
  Json j;
  j["n"] = h.degree;
  j["dim"] = h.dim;
  if (with_reps) {
    Json reps = Json::array();
    for (int i = 0; i < h.cocycle_reps.dim(); ++i) {
      std::vector<uint8_t> v(h.cocycle_reps.basis.row(i),
                             h.cocycle_reps.basis.row(i) +
                                 h.cocycle_reps.ambient);
      reps.push_back(residues_to_json(v));
    }
    j["representatives"] = std::move(reps);
  }
  return j;
}

int cmd_check_good(const Options& o) {
  GroupAction act = resolve_action(o);
  Json report;
  report["command"] = "check-good";
  report["prime"] = o.prime;
  report["group_order"] = act.g.order;
  Json reports = Json::array();
  std::string text;
  std::vector<GoodElementReport> all;
  if (o.element >= 0)
    all.push_back(is_good(act, o.element, o.prime));
  else
    all = find_good_elements(act, o.prime);
  for (const auto& r : all) {
    reports.push_back(good_report_to_json(r));
    text += "x=" + std::to_string(r.x) + " [" + act.g.label(r.x) + "]" +
            ": centralizer " + std::to_string(r.centralizer_order) +
            ", closure " + std::to_string(int(r.omega_h.size())) +
            ", index " + std::to_string(r.index) +
            (r.p_divides ? " (p | index)" : " (p does not divide)") +
            (r.derived_contained ? ", derived contained" : ", derived escapes") +
            (r.transversal.found() ? ", stable transversal"
                                   : ", transversal obstructed") +
            " -> " + (r.verdict ? "GOOD" : "not good") + "\n";
  }
  report["reports"] = std::move(reports);
  if (o.certify) {
    Json certs = Json::array();
    for (const auto& r : all) {
      if (!r.verdict) continue;
      NonvanishingCertificate cert =
          hh1_nonvanishing_certificate(act, r.x, o.prime);
      certs.push_back(certificate_to_json(cert));
      text += "certificate x=" + std::to_string(cert.x) +
              ": class nonzero, dim HH^1_Gx = " +
              std::to_string(cert.equivariant_h1_dim) + "\n";
    }
    report["certificates"] = std::move(certs);
  }
  emit(o, report, text);
  return 0;
}

int cmd_cohomology(const Options& o, const std::string& kind) {
  GroupAction act = resolve_action(o);
  PrimeField field(o.prime);
  Json report;
  report["command"] = kind;
  report["prime"] = o.prime;
  report["max_degree"] = o.max_degree;
  report["group_order"] = act.g.order;
  std::string text;
  int exit_code = 0;

  if (kind == "hh" || kind == "hgamma" || kind == "relext") {
    GammaAlgebra kg = group_algebra(act.g, act, field);
    EquivariantBimodule m = regular_bimodule(kg.algebra, kg.action);
    HochschildComplexBundle bundle =
        hochschild_complex(kg.algebra, kg.action, m, o.max_degree);
    Json degrees = Json::array();
    if (kind == "hh") {
      for (int n = 0; n <= o.max_degree; ++n) {
        CohomologyResult h = cohomology(bundle.complex, n);
        degrees.push_back(degree_report(h, o.format == "json"));
        text += "HH^" + std::to_string(n) + " dim " + std::to_string(h.dim) +
                "\n";
      }
    } else if (kind == "hgamma") {
      InvariantSubcomplex inv =
          invariant_subcomplex(bundle.complex, bundle.action);
      for (int n = 0; n <= o.max_degree; ++n) {
        CohomologyResult h = cohomology(inv.complex, n);
        degrees.push_back(degree_report(h, o.format == "json"));
        text += "HH_Gamma^" + std::to_string(n) + " dim " +
                std::to_string(h.dim) + "\n";
      }
    } else {
      for (int n = 0; n <= o.max_degree; ++n) {
        RelativeExtResult r = relative_ext(kg.algebra, kg.action, m, n);
        Json j = degree_report(r.cohomology, o.format == "json");
        j["hom_space_matches"] = r.hom_space_matches;
        degrees.push_back(std::move(j));
        text += "Ext^" + std::to_string(n) + " dim " +
                std::to_string(r.cohomology.dim) + " (hom space check: " +
                (r.hom_space_matches ? "ok" : "FAILED") + ")\n";
      }
    }
    report["degrees"] = std::move(degrees);
  } else if (kind == "hgroup") {
    EquivariantGModule module =
        o.module_file.empty()
            ? trivial_g_module(act, field)
            : module_from_json(load_json_file(o.module_file), act, field);
    GroupCochainComplex gc = group_cochain_complex(act, module, o.max_degree);
    InvariantSubcomplex inv = invariant_subcomplex(gc.complex, gc.action);
    Json degrees = Json::array();
    for (int n = 0; n <= o.max_degree; ++n) {
      CohomologyResult h = cohomology(inv.complex, n);
      degrees.push_back(degree_report(h, o.format == "json"));
      text += "H_Gamma^" + std::to_string(n) + " dim " +
              std::to_string(h.dim) + "\n";
    }
    report["degrees"] = std::move(degrees);
  } else if (kind == "burghelea") {
    BurgheleaReport rep =
        burghelea_dimension_check(act.g, o.prime, o.max_degree);
    Json degrees = Json::array();
    for (const auto& d : rep.degrees) {
      Json j;
      j["n"] = d.degree;
      j["hochschild_dim"] = d.hochschild_dim;
      j["class_dims"] = d.class_dims;
      j["sum"] = d.sum;
      j["equal"] = d.equal;
      degrees.push_back(std::move(j));
      text += "n=" + std::to_string(d.degree) + ": dim HH = " +
              std::to_string(d.hochschild_dim) + ", sum over classes = " +
              std::to_string(d.sum) + (d.equal ? " (equal)" : " (MISMATCH)") +
              "\n";
    }
    report["class_representatives"] = rep.class_reps;
    report["degrees"] = std::move(degrees);
    report["all_equal"] = rep.all_equal;
    if (!rep.all_equal) exit_code = 1;
  } else if (kind == "separable") {
    GammaAlgebra kg = group_algebra(act.g, act, field);
    EquivariantBimodule m = regular_bimodule(kg.algebra, kg.action);
    SeparableCaseReport rep =
        separable_case_check(kg.algebra, kg.action, m, o.max_degree);
    Json degrees = Json::array();
    for (const auto& d : rep.degrees) {
      Json j;
      j["n"] = d.degree;
      j["dim_equivariant"] = d.dim_equivariant;
      j["dim_fixed"] = d.dim_fixed;
      j["equal"] = d.equal;
      degrees.push_back(std::move(j));
      text += "n=" + std::to_string(d.degree) + ": dim HH_Gamma = " +
              std::to_string(d.dim_equivariant) + ", dim (HH)^Gamma = " +
              std::to_string(d.dim_fixed) +
              (d.equal ? " (equal)" : " (MISMATCH)") + "\n";
    }
    report["degrees"] = std::move(degrees);
    report["all_equal"] = rep.all_equal;
    if (!rep.all_equal) exit_code = 1;
  }
  emit(o, report, text);
  return exit_code;
}

int cmd_verify_suite(const Options& o) {
  SuiteReport rep = run_verify_suite(bundled_corpus(), o.max_degree);
  Json report;
  report["command"] = "verify-suite";
  report["max_degree"] = o.max_degree;
  Json lines = Json::array();
  std::string text;
  for (const auto& w : rep.warnings) text += "warning: " + w + "\n";
  for (const SuiteLine& line : rep.lines) {
    Json j;
    j["family"] = line.family;
    j["pass"] = line.pass;
    j["total"] = line.total;
    j["failures"] = line.failures;
    lines.push_back(std::move(j));
    text += line.family + ": " + std::to_string(line.pass) + "/" +
            std::to_string(line.total) + (line.ok() ? " ok" : " FAILED") +
            "\n";
    for (const auto& f : line.failures) text += "  failure: " + f + "\n";
  }
  report["warnings"] = rep.warnings;
  report["families"] = std::move(lines);
  report["all_ok"] = rep.all_ok;
  emit(o, report, text);
  return rep.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant cohomology of finite group algebras"};
  app.require_subcommand(1);
  Options o;

  CLI::App* check_good =
      app.add_subcommand("check-good", "good-element reports and certificates");
  CLI::App* hh_cmd = app.add_subcommand("hh", "Hochschild cohomology of kG");
  CLI::App* hgamma =
      app.add_subcommand("hgamma", "equivariant Hochschild cohomology of kG");
  CLI::App* hgroup =
      app.add_subcommand("hgroup", "equivariant group cohomology");
  CLI::App* relext =
      app.add_subcommand("relext", "relative Ext with the Hom-space check");
  CLI::App* burghelea = app.add_subcommand(
      "burghelea", "dimension decomposition over conjugacy classes");
  CLI::App* separable = app.add_subcommand(
      "separable", "separable-case comparison of the two equivariant readings");
  CLI::App* verify =
      app.add_subcommand("verify-suite", "run every invariant family");
  for (CLI::App* cmd : {check_good, hh_cmd, hgamma, hgroup, relext, burghelea,
                        separable, verify})
    add_common(cmd, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_good->parsed()) return cmd_check_good(o);
    if (hh_cmd->parsed()) return cmd_cohomology(o, "hh");
    if (hgamma->parsed()) return cmd_cohomology(o, "hgamma");
    if (hgroup->parsed()) return cmd_cohomology(o, "hgroup");
    if (relext->parsed()) return cmd_cohomology(o, "relext");
    if (burghelea->parsed()) return cmd_cohomology(o, "burghelea");
    if (separable->parsed()) return cmd_cohomology(o, "separable");
    if (verify->parsed()) return cmd_verify_suite(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
