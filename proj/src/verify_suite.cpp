#include "eqh/verify_suite.hpp"

#include <numeric>

#include "eqh/good_elements.hpp"

namespace eqh {

namespace {

struct Recorder {
  SuiteReport& rep;
  int idx;
  void check(const std::string& name, bool ok, const std::string& why = "") {
    SuiteLine& line = rep.lines[idx];
    ++line.total;
    if (ok)
      ++line.pass;
    else
      line.failures.push_back(why.empty() ? name : name + ": " + why);
  }
  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    try {
      check(name, fn());
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  }
};

bool lagrange_scans(const FiniteGroup& g) {
  for (int x = 0; x < g.order; ++x) {
    if (g.order % subgroup_generated(g, {x}).order() != 0) return false;
    if (g.order % centralizer(g, x).order() != 0) return false;
  }
  ConjugacyClasses cc = conjugacy_classes(g);
  size_t total = 0;
  for (size_t k = 0; k < cc.classes.size(); ++k) {
    total += cc.classes[k].size();
    bool member = false;
    for (int e : cc.classes[k]) member |= e == cc.representatives[k];
    if (!member) return false;
  }
  if (int(total) != g.order) return false;
  Subgroup der = derived_subgroup(g);
  if (!is_normal(g, der)) return false;
  QuotientGroup q = quotient_group(g, der);
  return q.group.order * der.order() == g.order;
}

}  // namespace

SuiteReport run_verify_suite(const std::vector<CorpusInstance>& corpus,
                             int max_degree) {
  SuiteReport rep;
  const std::vector<std::string> families = {
      "action-axioms",          "group-invariants",
      "algebra-axioms",         "skew-enveloping-iso",
      "complex-d-squared",      "hochschild-degree-zero",
      "equivariant-degree-zero", "trivial-gamma-reduction",
      "burghelea-decomposition", "comparison-identity",
      "equivariant-containment", "cohomology-embedding",
      "good-element-certificates", "separable-case",
      "transversal-choice"};
  for (const std::string& f : families)
    rep.lines.push_back(SuiteLine{f, 0, 0, {}});
  auto rec = [&](int idx) { return Recorder{rep, idx}; };

  if (corpus.empty()) {
    rep.warnings.push_back("corpus is empty: every family passes vacuously");
    return rep;
  }

  // Fixed instances for the skew-enveloping isomorphism family.
  {
    Recorder r = rec(3);
    r.run("k-over-gf2-with-s3", [] {
      GammaAlgebra k = group_algebra(
          trivial_group(), trivial_action(symmetric3_group(), trivial_group()),
          PrimeField(2));
      return check_skew_enveloping_iso(k.algebra, k.action).pass;
    });
    r.run("kz2-gf2-trivial-z2", [] {
      FiniteGroup z2 = cyclic_group(2);
      GammaAlgebra a = group_algebra(z2, trivial_action(z2, z2), PrimeField(2));
      return check_skew_enveloping_iso(a.algebra, a.action).pass;
    });
    r.run("kz3-gf3-inversion", [] {
      FiniteGroup z3 = cyclic_group(3);
      GammaAlgebra a = group_algebra(z3, inversion_action(z3), PrimeField(3));
      return check_skew_enveloping_iso(a.algebra, a.action).pass;
    });
    r.run("kz3-gf2-inversion", [] {
      FiniteGroup z3 = cyclic_group(3);
      GammaAlgebra a = group_algebra(z3, inversion_action(z3), PrimeField(2));
      return check_skew_enveloping_iso(a.algebra, a.action).pass;
    });
  }

  for (const CorpusInstance& inst : corpus) {
    const std::string tag = inst.name;
    // Action and group scans.
    rec(0).run(tag, [&] {
      make_action(inst.action.gamma, inst.action.g, inst.action.perms);
      return true;
    });
    rec(1).run(tag + "/g", [&] { return lagrange_scans(inst.action.g); });
    rec(1).run(tag + "/gamma",
               [&] { return lagrange_scans(inst.action.gamma); });

    for (uint32_t p : inst.primes) {
      const std::string ptag = tag + "/p=" + std::to_string(p);
      PrimeField field(p);
      GammaAlgebra kg;
      EquivariantBimodule m;
      rec(2).run(ptag, [&] {
        kg = group_algebra(inst.action.g, inst.action, field);
        m = regular_bimodule(kg.algebra, kg.action);
        // Skew with trivial Gamma is a relabeled copy of the algebra.
        FiniteGroup triv = trivial_group();
        GammaAlgebra plain = group_algebra(
            inst.action.g, trivial_action(triv, inst.action.g), field);
        GammaAlgebra sk = skew_group_algebra(plain.algebra, plain.action);
        return sk.algebra.c == plain.algebra.c &&
               sk.algebra.unit == plain.algebra.unit;
      });
      if (kg.algebra.dim == 0) continue;  // construction failed, recorded

      HochschildComplexBundle bundle;
      bool bundle_ok = false;
      rec(4).run(ptag, [&] {
        bundle =
            hochschild_complex(kg.algebra, kg.action, m, max_degree);
        bundle_ok = true;
        return true;
      });
      if (!bundle_ok) continue;

      rec(5).run(ptag, [&] {
        return cohomology(bundle.complex, 0).dim ==
               int(conjugacy_classes(inst.action.g).classes.size());
      });

      rec(6).run(ptag, [&] {
        InvariantSubcomplex inv =
            invariant_subcomplex(bundle.complex, bundle.action);
        CohomologyResult h0 = cohomology(inv.complex, 0);
        FpMat identity = FpMat::identity(field, m.dim);
        std::vector<FpMat> constraints;
        for (int i = 0; i < kg.algebra.dim; ++i)
          constraints.push_back(add(sub(m.left[i], m.right[i]), identity));
        for (const FpMat& gm : m.gmats) constraints.push_back(gm);
        Subspace direct = common_kernel(constraints, identity);
        if (h0.dim != direct.dim()) return false;
        FpMat ambient = mul(h0.cocycle_reps.basis, inv.spaces[0].basis);
        return direct.same_space(Subspace::from_rows(ambient));
      });

      if (inst.action.gamma.order == 1)
        rec(7).run(ptag, [&] {
          InvariantSubcomplex inv =
              invariant_subcomplex(bundle.complex, bundle.action);
          for (int n = 0; n <= max_degree; ++n) {
            CohomologyResult plain = cohomology(bundle.complex, n);
            CohomologyResult equi = cohomology(inv.complex, n);
            if (plain.dim != equi.dim) return false;
            if (!(plain.cocycle_reps.basis == equi.cocycle_reps.basis))
              return false;
          }
          return true;
        });

      rec(8).run(ptag, [&] {
        return burghelea_dimension_check(inst.action.g, p, max_degree)
            .all_equal;
      });

      // Comparison maps per element with a stable transversal.
      for (int x = 0; x < inst.action.g.order; ++x) {
        if (!stable_transversal(inst.action, x).found()) continue;
        const std::string xtag = ptag + "/x=" + std::to_string(x);
        CentralizerContext ctx;
        bool ctx_ok = false;
        rec(9).run(xtag, [&] {
          ctx = make_centralizer_context(inst.action, x, field, max_degree);
          ComparisonMaps maps = build_comparison_maps(ctx);
          ctx_ok = true;
          for (int n = 1; n <= max_degree; ++n)
            if (!mul(maps.pi[n], maps.nu[n]).is_identity()) return false;
          rec(10).run(xtag, [&] {
            return check_equivariant_containments(ctx, maps).all_ok;
          });
          for (int n = 1; n <= max_degree; ++n)
            rec(11).run(xtag + "/n=" + std::to_string(n), [&] {
              CohomologyEmbedding emb = embedding_on_cohomology(ctx, maps, n);
              return emb.left_inverse_ok && emb.rank_nu == emb.source_dim;
            });
          return true;
        });
        (void)ctx_ok;
        rec(14).run(xtag, [&] {
          TransversalChoiceReport tc =
              compare_transversal_choices(inst.action, x, 1, field);
          return !tc.applicable || tc.ranks_equal;
        });
      }

      if (inst.action.g.order % int(p) == 0)
        rec(12).run(ptag, [&] {
          for (const auto& g_rep : find_good_elements(inst.action, p)) {
            if (!g_rep.verdict) continue;
            NonvanishingCertificate cert =
                hh1_nonvanishing_certificate(inst.action, g_rep.x, p);
            if (!cert.class_nonzero || cert.equivariant_h1_dim < 1)
              return false;
          }
          return true;
        });

      if (std::gcd(uint32_t(inst.action.gamma.order), p) == 1)
        rec(13).run(ptag, [&] {
          SeparableCaseReport sep =
              separable_case_check(kg.algebra, kg.action, m, max_degree);
          if (!sep.all_equal) return false;
          for (int n = 0; n <= max_degree; ++n)
            if (!relative_ext(kg.algebra, kg.action, m, n).hom_space_matches)
              return false;
          return true;
        });
    }
  }

  for (const SuiteLine& line : rep.lines) rep.all_ok &= line.ok();
  return rep;
}

}  // namespace eqh
