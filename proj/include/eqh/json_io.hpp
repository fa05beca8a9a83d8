#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "eqh/gamma_algebra.hpp"
#include "eqh/good_elements.hpp"
#include "eqh/group_cohomology.hpp"

namespace eqh {

// All reports use insertion-ordered JSON so that byte-identical output is a
// plain consequence of deterministic computation.
using Json = nlohmann::ordered_json;

// ---- documents --------------------------------------------------------------
// Group document:  {"order": n, "mult": [[..]], "labels": [..]?}
// Action document: {"gamma": "<group file>", "g": "<group file>",
//                   "perms": [[..], ..]}
// Module document: {"dim": d, "g_mats": [[[..]]], "gamma_mats": [[[..]]]}
// Algebra document: {"dim": d, "p": p, "c": [..flat d^3..], "unit": [..]}

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json action_to_json(const GroupAction& act, const std::string& gamma_ref,
                    const std::string& g_ref);
GroupAction action_from_json(
    const Json& j,
    const std::function<FiniteGroup(const std::string&)>& resolve_group);

Json module_to_json(const EquivariantGModule& m);
EquivariantGModule module_from_json(const Json& j, const GroupAction& act,
                                    PrimeField field);

Json algebra_to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from_json(const Json& j);

Json algebra_action_to_json(const AlgebraGammaAction& act);
AlgebraGammaAction algebra_action_from_json(const Json& j,
                                            const StructureAlgebra& a,
                                            const FiniteGroup& gamma);

// ---- files ------------------------------------------------------------------

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
FiniteGroup load_group_file(const std::string& path);
// Resolves the gamma/g references relative to the document's directory.
GroupAction load_action_file(const std::string& path);

// ---- report pieces ----------------------------------------------------------

Json matrix_to_json(const FpMat& m);
Json residues_to_json(const std::vector<uint8_t>& v);
Json good_report_to_json(const GoodElementReport& rep);
Json certificate_to_json(const NonvanishingCertificate& cert);

}  // namespace eqh
