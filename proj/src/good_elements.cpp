#include "eqh/good_elements.hpp"

#include <algorithm>

namespace eqh {

GoodElementReport is_good(const GroupAction& act, int x, uint32_t p) {
  if (!is_prime(p))
    throw ValidationError("is_good: p = " + std::to_string(p) +
                          " is not prime");
  if (act.g.order % int(p) != 0)
    throw ValidationError("is_good: p = " + std::to_string(p) +
                          " does not divide |G| = " +
                          std::to_string(act.g.order));
  if (x < 0 || x >= act.g.order)
    throw ValidationError("is_good: index out of range");

  GoodElementReport rep;
  rep.x = x;
  Subgroup c = centralizer(act.g, x);
  Subgroup gx = stabilizer(act, x);
  rep.centralizer_order = c.order();
  InassaridzeSubgroups subs = inassaridze_subgroups(act, c, gx);
  rep.omega_h = subs.normal_closure.elements;
  rep.bracket_h = subs.generated.elements;
  rep.subgroups_differ = rep.omega_h != rep.bracket_h;
  rep.index = c.order() / subs.normal_closure.order();
  rep.p_divides = rep.index % int(p) == 0;
  Subgroup der = derived_of(c);
  rep.derived_contained =
      std::all_of(der.elements.begin(), der.elements.end(),
                  [&](int e) { return subs.normal_closure.contains(e); });
  rep.transversal = stable_transversal(act, x);
  rep.verdict =
      rep.p_divides && rep.derived_contained && rep.transversal.found();
  return rep;
}

std::vector<GoodElementReport> find_good_elements(const GroupAction& act,
                                                  uint32_t p) {
  std::vector<GoodElementReport> out;
  out.reserve(act.g.order);
  for (int x = 0; x < act.g.order; ++x) out.push_back(is_good(act, x, p));
  return out;
}

NonvanishingCertificate hh1_nonvanishing_certificate(const GroupAction& act,
                                                     int x, uint32_t p,
                                                     int dim_cap) {
  GoodElementReport good = is_good(act, x, p);
  if (!good.verdict)
    throw ValidationError("certificate: element " + std::to_string(x) +
                          " is not good for p = " + std::to_string(p));
  PrimeField field(p);
  CentralizerContext ctx = make_centralizer_context(act, x, field, 1, dim_cap);
  const SubgroupAsGroup& cg = ctx.on_c.h_group;

  // Stage 1: an index-p normal subgroup of C_G(x) above the closure.
  std::vector<int> closure_sub;
  for (int e : good.omega_h) closure_sub.push_back(cg.from_parent[e]);
  Subgroup floor = make_subgroup(cg.group, closure_sub);
  std::vector<Subgroup> candidates =
      index_p_normal_subgroups_above(cg.group, floor, p);
  if (candidates.empty())
    throw ValidationError(
        "certificate stage 'normal subgroup': no index-p normal subgroup "
        "above the closure");
  const Subgroup& a_sub = candidates.front();

  NonvanishingCertificate cert;
  cert.x = x;
  for (int e : a_sub.elements) cert.normal_subgroup_a.push_back(cg.to_parent[e]);

  // Stage 2: the additive character vanishing exactly on A.
  FpMat homs = hom_to_additive_group(cg.group, a_sub, p);
  if (homs.rows != 1)
    throw ValidationError(
        "certificate stage 'character': expected a one-dimensional space of "
        "characters vanishing on A, got " +
        std::to_string(homs.rows));
  cert.hom.assign(homs.row(0), homs.row(0) + cg.group.order);
  cert.scalar = 1;
  bool nonzero = false;
  for (uint8_t v : cert.hom) nonzero |= v != 0;
  if (!nonzero)
    throw ValidationError("certificate stage 'character': character is zero");

  // Stage 3: f is a Gamma_x-equivariant 1-cocycle on the centralizer.
  for (int s = 0; s < ctx.on_c.action.gamma.order; ++s)
    for (int h = 0; h < cg.group.order; ++h)
      if (cert.hom[ctx.on_c.action.apply(s, h)] != cert.hom[h])
        throw ValidationError(
            "certificate stage 'equivariance': character is not "
            "Gamma_x-invariant");
  std::vector<uint8_t> df =
      mat_vec(ctx.group_side.complex.diffs[1], cert.hom);
  if (!std::all_of(df.begin(), df.end(), [](uint8_t v) { return v == 0; }))
    throw ValidationError(
        "certificate stage 'cocycle': character is not a 1-cocycle");
  if (!ctx.group_side.action.invariants[1].contains_vector(cert.hom))
    throw ValidationError(
        "certificate stage 'cocycle': character is not in the equivariant "
        "subcomplex");

  // Stage 4: push through nu^1 and re-verify equivariance and the cocycle
  // condition on the Hochschild side.
  ComparisonMaps maps = build_comparison_maps(ctx);
  cert.nu_image = mat_vec(maps.nu[1], cert.hom);
  std::vector<uint8_t> dnu =
      mat_vec(ctx.hochschild.complex.diffs[1], cert.nu_image);
  if (!std::all_of(dnu.begin(), dnu.end(), [](uint8_t v) { return v == 0; }))
    throw ValidationError(
        "certificate stage 'image cocycle': nu(f) is not a Hochschild "
        "1-cocycle");
  if (!ctx.hochschild.action.invariants[1].contains_vector(cert.nu_image))
    throw ValidationError(
        "certificate stage 'image cocycle': nu(f) is not Gamma_x-equivariant");

  // Stage 5: the class of nu(f) in HH^1_{Gamma_x}(kG) is nonzero.
  InvariantSubcomplex sub_h =
      invariant_subcomplex(ctx.hochschild.complex, ctx.hochschild.action);
  auto sub_coords = sub_h.spaces[1].coordinates(cert.nu_image);
  if (!sub_coords)
    throw ValidationError(
        "certificate stage 'class': nu(f) has no equivariant coordinates");
  CohomologyResult h1 = cohomology(sub_h.complex, 1);
  cert.equivariant_h1_dim = h1.dim;
  auto cls = class_coordinates(h1, *sub_coords);
  if (!cls)
    throw ValidationError(
        "certificate stage 'class': nu(f) is not a cocycle of the "
        "equivariant subcomplex");
  cert.class_nonzero =
      std::any_of(cls->begin(), cls->end(), [](uint8_t v) { return v != 0; });
  if (!cert.class_nonzero)
    throw ValidationError(
        "certificate stage 'class': the class of nu(f) vanishes");
  return cert;
}

}  // namespace eqh
