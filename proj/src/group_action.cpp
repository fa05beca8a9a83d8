#include "eqh/group_action.hpp"

#include <algorithm>

namespace eqh {

GroupAction make_action(FiniteGroup gamma, FiniteGroup g,
                        std::vector<std::vector<int>> perms) {
  if (int(perms.size()) != gamma.order)
    throw ValidationError("action: need one permutation per element of Gamma");
  for (int s = 0; s < gamma.order; ++s) {
    if (int(perms[s].size()) != g.order)
      throw ValidationError("action: permutation " + std::to_string(s) +
                            " has the wrong length");
    std::vector<bool> hit(g.order, false);
    for (int v : perms[s]) {
      if (v < 0 || v >= g.order || hit[v])
        throw ValidationError("action: row " + std::to_string(s) +
                              " is not a permutation of G");
      hit[v] = true;
    }
  }
  for (int x = 0; x < g.order; ++x)
    if (perms[0][x] != x)
      throw ValidationError(
          "action: identity of Gamma must act as the identity permutation");
  for (int s = 0; s < gamma.order; ++s)
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        if (perms[s][g.mul(a, b)] != g.mul(perms[s][a], perms[s][b]))
          throw ValidationError("action: element " + std::to_string(s) +
                                " is not a group automorphism at pair (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                ")");
  for (int s = 0; s < gamma.order; ++s)
    for (int t = 0; t < gamma.order; ++t) {
      const int st = gamma.mul(s, t);
      for (int x = 0; x < g.order; ++x)
        if (perms[st][x] != perms[s][perms[t][x]])
          throw ValidationError(
              "action: does not respect Gamma multiplication at (" +
              std::to_string(s) + "," + std::to_string(t) + ")");
    }
  return GroupAction{std::move(gamma), std::move(g), std::move(perms)};
}

Subgroup stabilizer(const GroupAction& act, int x) {
  if (x < 0 || x >= act.g.order)
    throw ValidationError("stabilizer: index out of range");
  std::vector<int> members;
  for (int s = 0; s < act.gamma.order; ++s)
    if (act.apply(s, x) == x) members.push_back(s);
  return make_subgroup(act.gamma, std::move(members));
}

static void check_subgroup_of(const Subgroup& sub, const FiniteGroup& owner,
                              const char* what) {
  if (sub.parent == nullptr || sub.parent->order != owner.order ||
      sub.parent->mult != owner.mult)
    throw ValidationError(std::string(what) +
                          ": subgroup belongs to a different group");
}

std::vector<int> inassaridze_set(const GroupAction& act, const Subgroup& h,
                                 const Subgroup& omega) {
  check_subgroup_of(h, act.g, "inassaridze_set");
  check_subgroup_of(omega, act.gamma, "inassaridze_set");
  for (int s : omega.elements)
    for (int e : h.elements)
      if (!h.contains(act.apply(s, e)))
        throw ValidationError(
            "inassaridze_set: omega does not stabilize the subgroup setwise "
            "(sigma=" +
            std::to_string(s) + ", h=" + std::to_string(e) + ")");
  std::vector<int> out;
  for (int e : h.elements)
    for (int s : omega.elements)
      out.push_back(act.g.mul(e, act.apply(s, act.g.invert(e))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InassaridzeSubgroups inassaridze_subgroups(const GroupAction& act,
                                           const Subgroup& h,
                                           const Subgroup& omega) {
  std::vector<int> set = inassaridze_set(act, h, omega);
  InassaridzeSubgroups out{subgroup_generated(act.g, set),
                           normal_closure(act.g, h, set)};
  for (int e : out.generated.elements)
    if (!out.normal_closure.contains(e))
      throw ValidationError(
          "inassaridze_subgroups: generated subgroup escapes the normal "
          "closure");
  return out;
}

SemidirectProduct semidirect_product(const GroupAction& act) {
  const int ng = act.g.order, ns = act.gamma.order;
  const int n = ng * ns;
  auto idx = [&](int ge, int s) { return ge * ns + s; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < ng; ++a)
    for (int s = 0; s < ns; ++s)
      for (int b = 0; b < ng; ++b)
        for (int t = 0; t < ns; ++t)
          table[idx(a, s)][idx(b, t)] =
              idx(act.g.mul(a, act.apply(s, b)), act.gamma.mul(s, t));
  std::vector<std::string> labels;
  if (!act.g.labels.empty() && !act.gamma.labels.empty()) {
    labels.resize(n);
    for (int a = 0; a < ng; ++a)
      for (int s = 0; s < ns; ++s)
        labels[idx(a, s)] = "(" + act.g.label(a) + "|" + act.gamma.label(s) + ")";
  }
  SemidirectProduct out{from_mult_table(table, std::move(labels)), {}, {}};
  out.embed_g.resize(ng);
  for (int a = 0; a < ng; ++a) out.embed_g[a] = idx(a, 0);
  out.embed_gamma.resize(ns);
  for (int s = 0; s < ns; ++s) out.embed_gamma[s] = idx(0, s);
  return out;
}

// ---- transversals -----------------------------------------------------------

namespace {

struct CosetData {
  Subgroup c;                             // C_G(x)
  std::vector<int> coset_of;              // element -> coset id
  std::vector<std::vector<int>> members;  // per coset, ascending
};

CosetData cosets_of_centralizer(const FiniteGroup& g, int x) {
  CosetData cd{centralizer(g, x), std::vector<int>(g.order, -1), {}};
  for (int e = 0; e < g.order; ++e) {
    if (cd.coset_of[e] >= 0) continue;
    const int id = int(cd.members.size());
    std::vector<int> mem;
    for (int c : cd.c.elements) {
      const int m = g.mul(c, e);
      cd.coset_of[m] = id;
      mem.push_back(m);
    }
    std::sort(mem.begin(), mem.end());
    cd.members.push_back(std::move(mem));
  }
  return cd;
}

StableTransversalResult stable_transversal_impl(const GroupAction& act, int x,
                                                bool pick_largest) {
  if (x < 0 || x >= act.g.order)
    throw ValidationError("stable_transversal: index out of range");
  const FiniteGroup& g = act.g;
  CosetData cd = cosets_of_centralizer(g, x);
  Subgroup gx = stabilizer(act, x);
  const int ncos = int(cd.members.size());

  // Gamma_x permutes the cosets: ^s(C gamma) = C ^s(gamma).
  std::vector<std::vector<int>> coset_perm(gx.order(), std::vector<int>(ncos));
  for (int i = 0; i < gx.order(); ++i)
    for (int k = 0; k < ncos; ++k)
      coset_perm[i][k] = cd.coset_of[act.apply(gx.elements[i], cd.members[k][0])];

  std::vector<int> orbit_of(ncos, -1);
  std::vector<int> reps;
  for (int k0 = 0; k0 < ncos; ++k0) {
    if (orbit_of[k0] >= 0) continue;
    // Gather the orbit of coset k0.
    std::vector<int> orbit;
    for (int i = 0; i < gx.order(); ++i) {
      const int k = coset_perm[i][k0];
      if (orbit_of[k] < 0) {
        orbit_of[k] = k0;
        orbit.push_back(k);
      }
    }
    // Stabilizer of the representative coset inside Gamma_x.
    std::vector<int> stab;
    for (int i = 0; i < gx.order(); ++i)
      if (coset_perm[i][k0] == k0) stab.push_back(gx.elements[i]);
    // A pointwise S-fixed element of the representative coset; its Gamma_x
    // orbit then covers the coset orbit with exactly one element per coset.
    // The identity coset always takes the identity.
    int fixed = -1;
    if (k0 == 0) {
      fixed = 0;
    } else {
      for (size_t mi = 0; mi < cd.members[k0].size(); ++mi) {
        const int y =
            cd.members[k0][pick_largest ? cd.members[k0].size() - 1 - mi : mi];
        bool ok = true;
        for (int s : stab)
          if (act.apply(s, y) != y) {
            ok = false;
            break;
          }
        if (ok) {
          fixed = y;
          break;
        }
      }
    }
    if (fixed < 0) {
      StableTransversalResult res;
      for (int k : orbit) res.obstruction_orbit.push_back(cd.members[k]);
      return res;
    }
    std::vector<int> orbit_reps;
    for (int i = 0; i < gx.order(); ++i)
      orbit_reps.push_back(act.apply(gx.elements[i], fixed));
    std::sort(orbit_reps.begin(), orbit_reps.end());
    orbit_reps.erase(std::unique(orbit_reps.begin(), orbit_reps.end()),
                     orbit_reps.end());
    reps.insert(reps.end(), orbit_reps.begin(), orbit_reps.end());
  }
  std::sort(reps.begin(), reps.end());

  // Validation scans: one representative per coset, class enumerated without
  // repetition, and setwise Gamma_x-stability.
  if (int(reps.size()) != ncos || reps[0] != 0)
    throw ValidationError("stable_transversal: internal transversal mismatch");
  std::vector<bool> coset_hit(ncos, false), class_hit(g.order, false);
  for (int r : reps) {
    if (coset_hit[cd.coset_of[r]])
      throw ValidationError("stable_transversal: duplicate coset");
    coset_hit[cd.coset_of[r]] = true;
    const int xj = g.mul(g.mul(g.invert(r), x), r);
    if (class_hit[xj])
      throw ValidationError("stable_transversal: repeated conjugate");
    class_hit[xj] = true;
  }
  for (int s : gx.elements)
    for (int r : reps)
      if (!std::binary_search(reps.begin(), reps.end(), act.apply(s, r)))
        throw ValidationError("stable_transversal: set is not Gamma_x-stable");

  StableTransversalResult res;
  res.transversal = StableTransversal{x, std::move(reps)};
  return res;
}

}  // namespace

StableTransversalResult stable_transversal(const GroupAction& act, int x) {
  return stable_transversal_impl(act, x, false);
}

StableTransversalResult stable_transversal_alt(const GroupAction& act, int x) {
  return stable_transversal_impl(act, x, true);
}

CosetWalk coset_walk_data(const GroupAction& act, int x,
                          const StableTransversal& gamma_x,
                          const std::vector<int>& g_tuple) {
  const FiniteGroup& g = act.g;
  CosetData cd = cosets_of_centralizer(g, x);
  const int nx = int(cd.members.size());
  if (gamma_x.x != x || int(gamma_x.reps.size()) != nx ||
      gamma_x.reps[0] != 0)
    throw ValidationError("coset_walk_data: transversal does not match x");
  std::vector<int> pos_of_coset(nx, -1);
  for (int r = 0; r < nx; ++r) {
    const int k = cd.coset_of[gamma_x.reps[r]];
    if (pos_of_coset[k] >= 0)
      throw ValidationError("coset_walk_data: transversal repeats a coset");
    pos_of_coset[k] = r;
  }
  for (int e : g_tuple)
    if (e < 0 || e >= g.order)
      throw ValidationError("coset_walk_data: tuple entry out of range");

  CosetWalk walk;
  walk.h.assign(nx, {});
  walk.s.assign(nx, {});
  for (int j = 0; j < nx; ++j) {
    int cur = j;
    for (int gi : g_tuple) {
      const int t = g.mul(gamma_x.reps[cur], gi);
      const int nxt = pos_of_coset[cd.coset_of[t]];
      const int h = g.mul(t, g.invert(gamma_x.reps[nxt]));
      if (!cd.c.contains(h))
        throw ValidationError("coset_walk_data: rewriting left the centralizer");
      walk.h[j].push_back(h);
      walk.s[j].push_back(nxt);
      cur = nxt;
    }
  }
  return walk;
}

GammaRestrictedAction restrict_to_gamma_subgroup(const GroupAction& act,
                                                 const Subgroup& gamma_sub) {
  check_subgroup_of(gamma_sub, act.gamma, "restrict_to_gamma_subgroup");
  SubgroupAsGroup gg = subgroup_as_group(gamma_sub);
  std::vector<std::vector<int>> perms(gg.group.order);
  for (int i = 0; i < gg.group.order; ++i) perms[i] = act.perms[gg.to_parent[i]];
  GroupAction sub = make_action(gg.group, act.g, std::move(perms));
  return GammaRestrictedAction{std::move(sub), std::move(gg)};
}

RestrictedAction restrict_action(const GroupAction& act,
                                 const Subgroup& gamma_sub, const Subgroup& h) {
  check_subgroup_of(gamma_sub, act.gamma, "restrict_action");
  check_subgroup_of(h, act.g, "restrict_action");
  for (int s : gamma_sub.elements)
    for (int e : h.elements)
      if (!h.contains(act.apply(s, e)))
        throw ValidationError(
            "restrict_action: subgroup of G is not setwise stable");
  SubgroupAsGroup gg = subgroup_as_group(gamma_sub);
  SubgroupAsGroup hh = subgroup_as_group(h);
  std::vector<std::vector<int>> perms(gg.group.order,
                                      std::vector<int>(hh.group.order));
  for (int i = 0; i < gg.group.order; ++i)
    for (int j = 0; j < hh.group.order; ++j)
      perms[i][j] =
          hh.from_parent[act.apply(gg.to_parent[i], hh.to_parent[j])];
  GroupAction sub = make_action(gg.group, hh.group, std::move(perms));
  return RestrictedAction{std::move(sub), std::move(gg), std::move(hh)};
}

}  // namespace eqh
