#include "eqh/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace eqh {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("document: missing or non-integer field '") +
                     key + "'");
  return j[key].get<int>();
}

const Json& require_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw InputError(std::string("document: missing or non-array field '") +
                     key + "'");
  return j[key];
}

std::vector<std::vector<int>> int_table(const Json& rows, const char* what) {
  std::vector<std::vector<int>> out;
  for (const Json& row : rows) {
    if (!row.is_array())
      throw InputError(std::string("document: ") + what + " rows must be arrays");
    std::vector<int> r;
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw InputError(std::string("document: ") + what +
                         " entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

FpMat matrix_from_json(const Json& j, PrimeField field, const char* what) {
  if (!j.is_array())
    throw InputError(std::string("document: ") + what + " must be an array");
  std::vector<std::vector<int>> rows = int_table(j, what);
  for (const auto& r : rows)
    for (int v : r)
      if (v < 0 || uint32_t(v) >= field.p())
        throw InputError(std::string("document: ") + what +
                         " entry out of range for GF(" +
                         std::to_string(field.p()) + ")");
  return FpMat::from_rows(field, rows);
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order;
  Json mult = Json::array();
  for (int a = 0; a < g.order; ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  const int order = require_int(j, "order");
  std::vector<std::vector<int>> table = int_table(require_array(j, "mult"), "mult");
  if (int(table.size()) != order)
    throw InputError("group document: 'mult' row count differs from 'order'");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw InputError("group document: 'labels' must be an array");
    for (const Json& v : j["labels"]) {
      if (!v.is_string())
        throw InputError("group document: labels must be strings");
      labels.push_back(v.get<std::string>());
    }
  }
  return from_mult_table(table, std::move(labels));
}

Json action_to_json(const GroupAction& act, const std::string& gamma_ref,
                    const std::string& g_ref) {
  Json j;
  j["gamma"] = gamma_ref;
  j["g"] = g_ref;
  j["perms"] = act.perms;
  return j;
}

GroupAction action_from_json(
    const Json& j,
    const std::function<FiniteGroup(const std::string&)>& resolve_group) {
  if (!j.contains("gamma") || !j["gamma"].is_string() || !j.contains("g") ||
      !j["g"].is_string())
    throw InputError(
        "action document: 'gamma' and 'g' must be group file references");
  FiniteGroup gamma = resolve_group(j["gamma"].get<std::string>());
  FiniteGroup g = resolve_group(j["g"].get<std::string>());
  std::vector<std::vector<int>> perms =
      int_table(require_array(j, "perms"), "perms");
  return make_action(std::move(gamma), std::move(g), std::move(perms));
}

Json module_to_json(const EquivariantGModule& m) {
  Json j;
  j["dim"] = m.dim;
  Json gm = Json::array();
  for (const FpMat& mat : m.gmats) gm.push_back(matrix_to_json(mat));
  j["g_mats"] = std::move(gm);
  Json sm = Json::array();
  for (const FpMat& mat : m.gammats) sm.push_back(matrix_to_json(mat));
  j["gamma_mats"] = std::move(sm);
  return j;
}

EquivariantGModule module_from_json(const Json& j, const GroupAction& act,
                                    PrimeField field) {
  const int dim = require_int(j, "dim");
  std::vector<FpMat> gmats, gammats;
  for (const Json& m : require_array(j, "g_mats"))
    gmats.push_back(matrix_from_json(m, field, "g_mats"));
  for (const Json& m : require_array(j, "gamma_mats"))
    gammats.push_back(matrix_from_json(m, field, "gamma_mats"));
  return make_equivariant_g_module(act.g, act, dim, std::move(gmats),
                                   std::move(gammats));
}

Json algebra_to_json(const StructureAlgebra& a) {
  Json j;
  j["dim"] = a.dim;
  j["p"] = a.field.p();
  j["c"] = Json::array();
  for (uint8_t v : a.c) j["c"].push_back(int(v));
  j["unit"] = residues_to_json(a.unit);
  return j;
}

StructureAlgebra algebra_from_json(const Json& j) {
  const int dim = require_int(j, "dim");
  const int p = require_int(j, "p");
  if (p <= 0) throw InputError("algebra document: 'p' must be positive");
  PrimeField field{uint32_t(p)};
  std::vector<uint8_t> c, unit;
  for (const Json& v : require_array(j, "c")) {
    if (!v.is_number_integer())
      throw InputError("algebra document: 'c' entries must be integers");
    c.push_back(field.reduce(v.get<long long>()));
  }
  for (const Json& v : require_array(j, "unit")) {
    if (!v.is_number_integer())
      throw InputError("algebra document: 'unit' entries must be integers");
    unit.push_back(field.reduce(v.get<long long>()));
  }
  return make_structure_algebra(field, dim, std::move(c), std::move(unit));
}

Json algebra_action_to_json(const AlgebraGammaAction& act) {
  Json j;
  j["mats"] = Json::array();
  for (const FpMat& m : act.mats) j["mats"].push_back(matrix_to_json(m));
  return j;
}

AlgebraGammaAction algebra_action_from_json(const Json& j,
                                            const StructureAlgebra& a,
                                            const FiniteGroup& gamma) {
  std::vector<FpMat> mats;
  for (const Json& m : require_array(j, "mats"))
    mats.push_back(matrix_from_json(m, a.field, "mats"));
  return make_algebra_action(a, gamma, std::move(mats));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("parse error in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

FiniteGroup load_group_file(const std::string& path) {
  try {
    return group_from_json(load_json_file(path));
  } catch (const ValidationError& e) {
    throw InputError("group file " + path + ": " + e.what());
  }
}

GroupAction load_action_file(const std::string& path) {
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  Json j = load_json_file(path);
  try {
    return action_from_json(j, [&](const std::string& ref) {
      return load_group_file((base / ref).string());
    });
  } catch (const ValidationError& e) {
    throw InputError("action file " + path + ": " + e.what());
  }
}

Json matrix_to_json(const FpMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json residues_to_json(const std::vector<uint8_t>& v) {
  Json out = Json::array();
  for (uint8_t x : v) out.push_back(int(x));
  return out;
}

Json good_report_to_json(const GoodElementReport& rep) {
  Json j;
  j["x"] = rep.x;
  j["centralizer_order"] = rep.centralizer_order;
  j["inassaridze_subgroup"] = rep.omega_h;
  j["generated_subgroup"] = rep.bracket_h;
  j["subgroups_differ"] = rep.subgroups_differ;
  j["index"] = rep.index;
  j["p_divides"] = rep.p_divides;
  j["derived_contained"] = rep.derived_contained;
  if (rep.transversal.found()) {
    j["transversal"] = rep.transversal.transversal->reps;
  } else {
    j["transversal"] = nullptr;
    j["obstruction_orbit"] = rep.transversal.obstruction_orbit;
  }
  j["verdict"] = rep.verdict;
  return j;
}

Json certificate_to_json(const NonvanishingCertificate& cert) {
  Json j;
  j["x"] = cert.x;
  j["normal_subgroup"] = cert.normal_subgroup_a;
  j["character"] = residues_to_json(cert.hom);
  j["scalar"] = cert.scalar;
  j["hochschild_cocycle"] = residues_to_json(cert.nu_image);
  j["class_nonzero"] = cert.class_nonzero;
  j["equivariant_h1_dim"] = cert.equivariant_h1_dim;
  return j;
}

}  // namespace eqh
