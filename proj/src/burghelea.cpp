#include "eqh/burghelea.hpp"

#include "eqh/corpus.hpp"

namespace eqh {

namespace {

long long power_ll(int base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void decode_tuple(long long code, int n, int base, int* out) {
  for (int i = n - 1; i >= 0; --i) {
    out[i] = int(code % base);
    code /= base;
  }
}

}  // namespace

CentralizerContext make_centralizer_context(const GroupAction& act, int x,
                                            PrimeField field, int nmax,
                                            int dim_cap) {
  CentralizerContext ctx;
  ctx.x = x;
  ctx.field = field;
  ctx.nmax = nmax;
  ctx.gamma_x = stabilizer(act, x);
  ctx.c = centralizer(act.g, x);
  ctx.on_g = restrict_to_gamma_subgroup(act, ctx.gamma_x);
  ctx.on_c = restrict_action(act, ctx.gamma_x, ctx.c);
  ctx.kg = group_algebra(act.g, ctx.on_g.action, field);
  ctx.kg_bimodule = regular_bimodule(ctx.kg.algebra, ctx.kg.action);
  ctx.hochschild = hochschild_complex(ctx.kg.algebra, ctx.kg.action,
                                      ctx.kg_bimodule, nmax, dim_cap);
  ctx.group_side = group_cochain_complex(
      ctx.on_c.action, trivial_g_module(ctx.on_c.action, field), nmax,
      dim_cap);
  ctx.transversal = stable_transversal(act, x);
  return ctx;
}

std::vector<FpMat> build_pi(const FiniteGroup& g, int x, PrimeField field,
                            int nmax) {
  Subgroup c = centralizer(g, x);
  SubgroupAsGroup cg = subgroup_as_group(c);
  const int ng = g.order, nc = cg.group.order;
  std::vector<FpMat> pi(1);  // degree 0 unused
  std::vector<int> h_tup(std::max(nmax, 1));
  for (int n = 1; n <= nmax; ++n) {
    FpMat m(field, int(power_ll(nc, n)), int(power_ll(ng, n) * ng));
    for (long long hc = 0; hc < power_ll(nc, n); ++hc) {
      decode_tuple(hc, n, nc, h_tup.data());
      // Column of the basis cochain supported on this tuple whose value is
      // the group element x h_1 ... h_n: that is the unique cochain with a
      // nonzero x-coefficient after unwinding by the inverses.
      long long col_tuple = 0;
      int prod = 0;  // identity
      for (int i = 0; i < n; ++i) {
        const int h_parent = cg.to_parent[h_tup[i]];
        col_tuple = col_tuple * ng + h_parent;
        prod = g.mul(prod, h_parent);
      }
      const int u = g.mul(x, prod);
      m.at(int(hc), int(col_tuple * ng + u)) = 1;
    }
    pi.push_back(std::move(m));
  }
  return pi;
}

std::vector<FpMat> build_nu(const GroupAction& act, int x,
                            const StableTransversal& gamma_x, PrimeField field,
                            int nmax) {
  const FiniteGroup& g = act.g;
  Subgroup c = centralizer(g, x);
  SubgroupAsGroup cg = subgroup_as_group(c);
  const int ng = g.order, nc = cg.group.order;
  const int n_x = int(gamma_x.reps.size());
  std::vector<int> conj(n_x);  // x_j = gamma_j^-1 x gamma_j
  for (int j = 0; j < n_x; ++j) {
    const int r = gamma_x.reps[j];
    conj[j] = g.mul(g.mul(g.invert(r), x), r);
  }
  std::vector<FpMat> nu(1);  // degree 0 unused
  std::vector<int> g_tup(std::max(nmax, 1));
  for (int n = 1; n <= nmax; ++n) {
    FpMat m(field, int(power_ll(ng, n) * ng), int(power_ll(nc, n)));
    for (long long gc = 0; gc < power_ll(ng, n); ++gc) {
      decode_tuple(gc, n, ng, g_tup.data());
      std::vector<int> tuple(g_tup.begin(), g_tup.begin() + n);
      CosetWalk walk = coset_walk_data(act, x, gamma_x, tuple);
      int prod = 0;
      for (int i = 0; i < n; ++i) prod = g.mul(prod, g_tup[i]);
      for (int j = 0; j < n_x; ++j) {
        long long col = 0;
        for (int i = 0; i < n; ++i) {
          const int h_sub = cg.from_parent[walk.h[j][i]];
          if (h_sub < 0)
            throw ValidationError("build_nu: walk left the centralizer");
          col = col * nc + h_sub;
        }
        const int u = g.mul(conj[j], prod);
        const long long row = gc * ng + u;
        m.at(int(row), int(col)) = field.add(m.at(int(row), int(col)), 1);
      }
    }
    nu.push_back(std::move(m));
  }
  return nu;
}

ComparisonMaps build_comparison_maps(const CentralizerContext& ctx) {
  if (!ctx.transversal.found())
    throw ValidationError(
        "comparison maps: no stable transversal exists for x = " +
        std::to_string(ctx.x));
  ComparisonMaps maps;
  maps.x = ctx.x;
  maps.gamma_x = *ctx.transversal.transversal;
  maps.nmax = ctx.nmax;
  maps.pi = build_pi(ctx.on_g.action.g, ctx.x, ctx.field, ctx.nmax);
  maps.nu =
      build_nu(ctx.on_g.action, ctx.x, maps.gamma_x, ctx.field, ctx.nmax);
  for (int n = 1; n <= ctx.nmax; ++n)
    if (!mul(maps.pi[n], maps.nu[n]).is_identity())
      throw ValidationError(
          "comparison maps: pi.nu is not the identity at degree " +
          std::to_string(n));
  return maps;
}

InvariantContainmentReport check_equivariant_containments(
    const CentralizerContext& ctx, const ComparisonMaps& maps) {
  InvariantContainmentReport rep;
  for (int n = 1; n <= ctx.nmax; ++n) {
    const Subspace& inv_hh = ctx.hochschild.action.invariants[n];
    const Subspace& inv_grp = ctx.group_side.action.invariants[n];
    try {
      restrict_map(maps.pi[n], inv_hh, inv_grp);
    } catch (const ValidationError&) {
      throw ValidationError(
          "equivariant containment: pi escapes the equivariant cochains at "
          "degree " +
          std::to_string(n));
    }
    try {
      restrict_map(maps.nu[n], inv_grp, inv_hh);
    } catch (const ValidationError&) {
      throw ValidationError(
          "equivariant containment: nu escapes the equivariant cochains at "
          "degree " +
          std::to_string(n));
    }
    rep.degrees.push_back(n);
  }
  rep.all_ok = true;
  return rep;
}

CohomologyEmbedding embedding_on_cohomology(const CentralizerContext& ctx,
                                            const ComparisonMaps& maps,
                                            int n) {
  if (n < 1 || n > ctx.nmax)
    throw ValidationError(
        "embedding: degree must lie in 1..nmax (the comparison maps are not "
        "defined in degree 0)");
  InvariantSubcomplex sub_h =
      invariant_subcomplex(ctx.hochschild.complex, ctx.hochschild.action);
  InvariantSubcomplex sub_g =
      invariant_subcomplex(ctx.group_side.complex, ctx.group_side.action);
  FpMat nu_sub = restrict_map(maps.nu[n], sub_g.spaces[n], sub_h.spaces[n]);
  FpMat pi_sub = restrict_map(maps.pi[n], sub_h.spaces[n], sub_g.spaces[n]);

  CohomologyEmbedding out;
  out.degree = n;
  out.nu_induced =
      induced_map_on_cohomology(sub_g.complex, sub_h.complex, nu_sub, n);
  out.pi_induced =
      induced_map_on_cohomology(sub_h.complex, sub_g.complex, pi_sub, n);
  out.source_dim = out.nu_induced.cols;
  out.rank_nu = rank(out.nu_induced);
  out.left_inverse_ok = mul(out.pi_induced, out.nu_induced).is_identity();
  if (!out.left_inverse_ok)
    throw ValidationError(
        "embedding: pi_induced . nu_induced is not the identity at degree " +
        std::to_string(n));
  if (out.rank_nu != out.source_dim)
    throw ValidationError("embedding: nu_induced is not injective at degree " +
                          std::to_string(n));
  if (n + 1 <= ctx.nmax) {
    out.chain_squares_checked = true;
    const FpMat& d_hh = ctx.hochschild.complex.diffs[n];
    const FpMat& d_gr = ctx.group_side.complex.diffs[n];
    out.chain_squares_commute =
        mul(d_hh, maps.nu[n]) == mul(maps.nu[n + 1], d_gr) &&
        mul(d_gr, maps.pi[n]) == mul(maps.pi[n + 1], d_hh);
  }
  return out;
}

BurgheleaReport burghelea_dimension_check(const FiniteGroup& g, uint32_t p,
                                          int nmax, int dim_cap) {
  PrimeField field(p);
  GroupAction triv = trivial_action(trivial_group(), g);
  GammaAlgebra kg = group_algebra(g, triv, field);
  EquivariantBimodule m = regular_bimodule(kg.algebra, kg.action);
  HochschildComplexBundle bundle =
      hochschild_complex(kg.algebra, kg.action, m, nmax, dim_cap);

  ConjugacyClasses cc = conjugacy_classes(g);
  BurgheleaReport rep;
  rep.class_reps = cc.representatives;
  // One group-cochain complex per class representative's centralizer.
  std::vector<CochainComplexOverFp> class_complexes;
  for (int xrep : cc.representatives) {
    SubgroupAsGroup cg = subgroup_as_group(centralizer(g, xrep));
    GroupAction ctriv = trivial_action(trivial_group(), cg.group);
    class_complexes.push_back(
        group_cochain_complex(ctriv, trivial_g_module(ctriv, field), nmax,
                              dim_cap)
            .complex);
  }
  rep.all_equal = true;
  for (int n = 0; n <= nmax; ++n) {
    BurgheleaDegreeReport d;
    d.degree = n;
    d.hochschild_dim = cohomology(bundle.complex, n).dim;
    for (const auto& cx : class_complexes) {
      const int dim = cohomology(cx, n).dim;
      d.class_dims.push_back(dim);
      d.sum += dim;
    }
    d.equal = d.hochschild_dim == d.sum;
    rep.all_equal &= d.equal;
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

TransversalChoiceReport compare_transversal_choices(const GroupAction& act,
                                                    int x, int n,
                                                    PrimeField field,
                                                    int dim_cap) {
  TransversalChoiceReport rep;
  StableTransversalResult t1 = stable_transversal(act, x);
  StableTransversalResult t2 = stable_transversal_alt(act, x);
  if (!t1.found() || !t2.found()) return rep;
  rep.applicable = true;
  rep.choices_differ = t1.transversal->reps != t2.transversal->reps;

  CentralizerContext ctx = make_centralizer_context(act, x, field, n, dim_cap);
  InvariantSubcomplex sub_h =
      invariant_subcomplex(ctx.hochschild.complex, ctx.hochschild.action);
  InvariantSubcomplex sub_g =
      invariant_subcomplex(ctx.group_side.complex, ctx.group_side.action);
  auto induced_rank = [&](const StableTransversal& tr) {
    std::vector<FpMat> nu =
        build_nu(ctx.on_g.action, x, tr, field, n);
    FpMat nu_sub = restrict_map(nu[n], sub_g.spaces[n], sub_h.spaces[n]);
    return rank(
        induced_map_on_cohomology(sub_g.complex, sub_h.complex, nu_sub, n));
  };
  rep.rank_default = induced_rank(*t1.transversal);
  rep.rank_alt = induced_rank(*t2.transversal);
  rep.ranks_equal = rep.rank_default == rep.rank_alt;
  return rep;
}

}  // namespace eqh
