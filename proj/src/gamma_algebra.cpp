#include "eqh/gamma_algebra.hpp"

namespace eqh {

std::vector<uint8_t> StructureAlgebra::mul_vec(
    const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim)
    throw ValidationError("algebra: vector length mismatch");
  std::vector<uint8_t> out(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      const uint8_t f = field.mul(x[i], y[j]);
      const uint8_t* row = sc_row(i, j);
      for (int k = 0; k < dim; ++k)
        out[k] = field.add(out[k], field.mul(f, row[k]));
    }
  }
  return out;
}

FpMat StructureAlgebra::left_mult_matrix(int i) const {
  FpMat m(field, dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m.at(k, j) = sc(i, j, k);
  return m;
}

FpMat StructureAlgebra::right_mult_matrix(int i) const {
  FpMat m(field, dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m.at(k, j) = sc(j, i, k);
  return m;
}

StructureAlgebra make_structure_algebra(PrimeField field, int dim,
                                        std::vector<uint8_t> c,
                                        std::vector<uint8_t> unit) {
  if (dim <= 0) throw ValidationError("algebra: dimension must be positive");
  if (c.size() != size_t(dim) * dim * dim)
    throw ValidationError("algebra: structure constant count mismatch");
  if (int(unit.size()) != dim)
    throw ValidationError("algebra: unit vector length mismatch");
  for (uint8_t v : c)
    if (v >= field.p()) throw ValidationError("algebra: entry out of range");
  for (uint8_t v : unit)
    if (v >= field.p()) throw ValidationError("algebra: unit out of range");

  StructureAlgebra a{field, dim, std::move(c), std::move(unit)};

  std::vector<uint8_t> basis(dim, 0);
  for (int j = 0; j < dim; ++j) {
    basis[j] = 1;
    if (a.mul_vec(a.unit, basis) != basis || a.mul_vec(basis, a.unit) != basis)
      throw ValidationError("algebra: unit is not a two-sided identity at " +
                            std::to_string(j));
    basis[j] = 0;
  }

  // (e_i e_j) e_l vs e_i (e_j e_l), expanded through the structure constants.
  std::vector<uint8_t> lhs(dim), rhs(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const uint8_t* cij = a.sc_row(i, j);
      for (int l = 0; l < dim; ++l) {
        std::fill(lhs.begin(), lhs.end(), 0);
        for (int k = 0; k < dim; ++k) {
          if (!cij[k]) continue;
          const uint8_t* ckl = a.sc_row(k, l);
          for (int m = 0; m < dim; ++m)
            lhs[m] = field.add(lhs[m], field.mul(cij[k], ckl[m]));
        }
        std::fill(rhs.begin(), rhs.end(), 0);
        const uint8_t* cjl = a.sc_row(j, l);
        for (int k = 0; k < dim; ++k) {
          if (!cjl[k]) continue;
          const uint8_t* cik = a.sc_row(i, k);
          for (int m = 0; m < dim; ++m)
            rhs[m] = field.add(rhs[m], field.mul(cjl[k], cik[m]));
        }
        if (lhs != rhs)
          throw ValidationError("algebra: not associative at basis triple (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(l) + ")");
      }
    }
  return a;
}

static std::vector<uint8_t> mat_column(const FpMat& m, int j) {
  std::vector<uint8_t> out(m.rows);
  for (int i = 0; i < m.rows; ++i) out[i] = m.at(i, j);
  return out;
}

AlgebraGammaAction make_algebra_action(const StructureAlgebra& a,
                                       FiniteGroup gamma,
                                       std::vector<FpMat> mats) {
  if (int(mats.size()) != gamma.order)
    throw ValidationError("algebra action: need one matrix per element");
  for (const FpMat& m : mats)
    if (m.rows != a.dim || m.cols != a.dim || m.field != a.field)
      throw ValidationError("algebra action: matrix shape or field mismatch");
  if (!mats[0].is_identity())
    throw ValidationError("algebra action: identity must act as identity");
  for (int s = 0; s < gamma.order; ++s)
    for (int t = 0; t < gamma.order; ++t)
      if (mul(mats[s], mats[t]) != mats[gamma.mul(s, t)])
        throw ValidationError(
            "algebra action: does not respect Gamma multiplication at (" +
            std::to_string(s) + "," + std::to_string(t) + ")");
  for (int s = 0; s < gamma.order; ++s) {
    std::vector<uint8_t> u = mat_vec(mats[s], a.unit);
    if (u != a.unit)
      throw ValidationError("algebra action: element " + std::to_string(s) +
                            " does not fix the unit");
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) {
        std::vector<uint8_t> prod(a.sc_row(i, j), a.sc_row(i, j) + a.dim);
        std::vector<uint8_t> lhs = mat_vec(mats[s], prod);
        std::vector<uint8_t> rhs =
            a.mul_vec(mat_column(mats[s], i), mat_column(mats[s], j));
        if (lhs != rhs)
          throw ValidationError("algebra action: element " +
                                std::to_string(s) +
                                " is not an algebra automorphism at pair (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
      }
  }
  return AlgebraGammaAction{std::move(gamma), std::move(mats)};
}

FpMat EquivariantBimodule::left_of(const std::vector<uint8_t>& a) const {
  FpMat out(field, dim, dim);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        out.at(r, c) =
            field.add(out.at(r, c), field.mul(a[i], left[i].at(r, c)));
  }
  return out;
}

FpMat EquivariantBimodule::right_of(const std::vector<uint8_t>& a) const {
  FpMat out(field, dim, dim);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        out.at(r, c) =
            field.add(out.at(r, c), field.mul(a[i], right[i].at(r, c)));
  }
  return out;
}

EquivariantBimodule make_equivariant_bimodule(const StructureAlgebra& a,
                                              const AlgebraGammaAction& act,
                                              int dim, std::vector<FpMat> left,
                                              std::vector<FpMat> right,
                                              std::vector<FpMat> gmats) {
  if (int(left.size()) != a.dim || int(right.size()) != a.dim)
    throw ValidationError("bimodule: need one action matrix per basis element");
  if (int(gmats.size()) != act.gamma.order)
    throw ValidationError("bimodule: need one matrix per element of Gamma");
  for (const auto* side : {&left, &right})
    for (const FpMat& m : *side)
      if (m.rows != dim || m.cols != dim || m.field != a.field)
        throw ValidationError("bimodule: matrix shape or field mismatch");
  for (const FpMat& m : gmats)
    if (m.rows != dim || m.cols != dim || m.field != a.field)
      throw ValidationError("bimodule: Gamma matrix shape or field mismatch");

  EquivariantBimodule bm{a.field, dim, std::move(left), std::move(right),
                         std::move(gmats)};

  if (!bm.left_of(a.unit).is_identity() || !bm.right_of(a.unit).is_identity())
    throw ValidationError("bimodule: unit does not act as identity");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      std::vector<uint8_t> prod(a.sc_row(i, j), a.sc_row(i, j) + a.dim);
      if (bm.left_of(prod) != mul(bm.left[i], bm.left[j]))
        throw ValidationError("bimodule: left action not associative at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      if (bm.right_of(prod) != mul(bm.right[j], bm.right[i]))
        throw ValidationError("bimodule: right action not associative at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      if (mul(bm.left[i], bm.right[j]) != mul(bm.right[j], bm.left[i]))
        throw ValidationError(
            "bimodule: left and right actions do not commute at (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (!bm.gmats[0].is_identity())
    throw ValidationError("bimodule: identity of Gamma must act as identity");
  for (int s = 0; s < act.gamma.order; ++s)
    for (int t = 0; t < act.gamma.order; ++t)
      if (mul(bm.gmats[s], bm.gmats[t]) != bm.gmats[act.gamma.mul(s, t)])
        throw ValidationError(
            "bimodule: Gamma matrices do not respect multiplication at (" +
            std::to_string(s) + "," + std::to_string(t) + ")");
  // ^s(a.m) = ^s(a).^s(m) and ^s(m.a) = ^s(m).^s(a) on basis elements.
  for (int s = 0; s < act.gamma.order; ++s)
    for (int i = 0; i < a.dim; ++i) {
      FpMat acted_left = bm.left_of(mat_column(act.mats[s], i));
      if (mul(bm.gmats[s], bm.left[i]) != mul(acted_left, bm.gmats[s]))
        throw ValidationError(
            "bimodule: Gamma-action incompatible with the left action at (" +
            std::to_string(s) + "," + std::to_string(i) + ")");
      FpMat acted_right = bm.right_of(mat_column(act.mats[s], i));
      if (mul(bm.gmats[s], bm.right[i]) != mul(acted_right, bm.gmats[s]))
        throw ValidationError(
            "bimodule: Gamma-action incompatible with the right action at (" +
            std::to_string(s) + "," + std::to_string(i) + ")");
    }
  return bm;
}

GammaAlgebra group_algebra(const FiniteGroup& g, const GroupAction& act,
                           PrimeField field) {
  if (act.g.order != g.order || act.g.mult != g.mult)
    throw ValidationError("group_algebra: action does not act on this group");
  const int d = g.order;
  std::vector<uint8_t> c(size_t(d) * d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c[(size_t(i) * d + j) * d + g.mul(i, j)] = 1;
  std::vector<uint8_t> unit(d, 0);
  unit[0] = 1;
  StructureAlgebra alg =
      make_structure_algebra(field, d, std::move(c), std::move(unit));
  std::vector<FpMat> mats;
  mats.reserve(act.gamma.order);
  for (int s = 0; s < act.gamma.order; ++s) {
    FpMat m(field, d, d);
    for (int x = 0; x < d; ++x) m.at(act.apply(s, x), x) = 1;
    mats.push_back(std::move(m));
  }
  AlgebraGammaAction alg_act =
      make_algebra_action(alg, act.gamma, std::move(mats));
  return GammaAlgebra{std::move(alg), std::move(alg_act)};
}

EquivariantBimodule regular_bimodule(const StructureAlgebra& a,
                                     const AlgebraGammaAction& act) {
  std::vector<FpMat> left, right;
  left.reserve(a.dim);
  right.reserve(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    left.push_back(a.left_mult_matrix(i));
    right.push_back(a.right_mult_matrix(i));
  }
  return make_equivariant_bimodule(a, act, a.dim, std::move(left),
                                   std::move(right), act.mats);
}

GammaAlgebra enveloping(const StructureAlgebra& a,
                        const AlgebraGammaAction& act) {
  const int d = a.dim, dd = d * d;
  std::vector<uint8_t> c(size_t(dd) * dd * dd, 0);
  // (e_i (x) e_j)(e_k (x) e_l) = e_i e_k (x) e_l e_j
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const uint8_t* cik = a.sc_row(i, k);
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
          const uint8_t* clj = a.sc_row(l, j);
          uint8_t* out = c.data() + (size_t(i * d + j) * dd + (k * d + l)) * dd;
          for (int m = 0; m < d; ++m) {
            if (!cik[m]) continue;
            for (int n = 0; n < d; ++n)
              if (clj[n])
                out[m * d + n] =
                    a.field.add(out[m * d + n], a.field.mul(cik[m], clj[n]));
          }
        }
    }
  std::vector<uint8_t> unit(dd, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      unit[i * d + j] = a.field.mul(a.unit[i], a.unit[j]);
  StructureAlgebra env =
      make_structure_algebra(a.field, dd, std::move(c), std::move(unit));
  std::vector<FpMat> mats;
  mats.reserve(act.gamma.order);
  for (const FpMat& m : act.mats) mats.push_back(kron(m, m));
  AlgebraGammaAction env_act =
      make_algebra_action(env, act.gamma, std::move(mats));
  return GammaAlgebra{std::move(env), std::move(env_act)};
}

// Conjugation by a list of invertible elements u_s indexed by Gamma: each
// matrix sends a basis vector v to u_s v u_{s^-1}.
static AlgebraGammaAction conjugation_algebra_action(
    const StructureAlgebra& alg, const FiniteGroup& gamma,
    const std::vector<std::vector<uint8_t>>& units) {
  std::vector<FpMat> mats;
  mats.reserve(gamma.order);
  for (int s = 0; s < gamma.order; ++s) {
    FpMat m(alg.field, alg.dim, alg.dim);
    std::vector<uint8_t> basis(alg.dim, 0);
    for (int j = 0; j < alg.dim; ++j) {
      basis[j] = 1;
      std::vector<uint8_t> v =
          alg.mul_vec(units[s], alg.mul_vec(basis, units[gamma.invert(s)]));
      for (int i = 0; i < alg.dim; ++i) m.at(i, j) = v[i];
      basis[j] = 0;
    }
    mats.push_back(std::move(m));
  }
  return make_algebra_action(alg, gamma, std::move(mats));
}

GammaAlgebra skew_group_algebra(const StructureAlgebra& b,
                                const AlgebraGammaAction& bact) {
  const int d = b.dim, ng = bact.gamma.order;
  const int dd = d * ng;
  const FiniteGroup& gamma = bact.gamma;
  auto idx = [&](int i, int s) { return i * ng + s; };
  std::vector<uint8_t> c(size_t(dd) * dd * dd, 0);
  std::vector<uint8_t> w(d);
  for (int s = 0; s < ng; ++s)
    for (int j = 0; j < d; ++j) {
      std::vector<uint8_t> v = mat_column(bact.mats[s], j);  // ^s e_j
      for (int i = 0; i < d; ++i) {
        // w = e_i . ^s e_j in B
        std::fill(w.begin(), w.end(), 0);
        for (int l = 0; l < d; ++l) {
          if (!v[l]) continue;
          const uint8_t* cil = b.sc_row(i, l);
          for (int k = 0; k < d; ++k)
            w[k] = b.field.add(w[k], b.field.mul(v[l], cil[k]));
        }
        for (int t = 0; t < ng; ++t) {
          const int st = gamma.mul(s, t);
          uint8_t* out =
              c.data() + (size_t(idx(i, s)) * dd + idx(j, t)) * dd;
          for (int k = 0; k < d; ++k)
            if (w[k]) out[idx(k, st)] = w[k];
        }
      }
    }
  std::vector<uint8_t> unit(dd, 0);
  for (int i = 0; i < d; ++i) unit[idx(i, 0)] = b.unit[i];
  StructureAlgebra skew =
      make_structure_algebra(b.field, dd, std::move(c), std::move(unit));
  // Gamma-algebra structure: conjugation by the units 1*s.
  std::vector<std::vector<uint8_t>> units(ng, std::vector<uint8_t>(dd, 0));
  for (int s = 0; s < ng; ++s)
    for (int i = 0; i < d; ++i) units[s][idx(i, s)] = b.unit[i];
  AlgebraGammaAction skew_act = conjugation_algebra_action(skew, gamma, units);
  return GammaAlgebra{std::move(skew), std::move(skew_act)};
}

GammaAlgebra oriented_enveloping(const StructureAlgebra& a,
                                 const AlgebraGammaAction& act) {
  const int d = a.dim, ng = act.gamma.order;
  const int dd = d * d * ng;
  const FiniteGroup& gamma = act.gamma;
  auto idx = [&](int i, int s, int j) { return (i * ng + s) * d + j; };
  std::vector<uint8_t> c(size_t(dd) * dd * dd, 0);
  std::vector<uint8_t> basis(d, 0);
  for (int s = 0; s < ng; ++s)
    for (int k = 0; k < d; ++k) {
      const std::vector<uint8_t> sk = mat_column(act.mats[s], k);  // ^s e_k
      for (int l = 0; l < d; ++l) {
        const std::vector<uint8_t> sl = mat_column(act.mats[s], l);  // ^s e_l
        for (int i = 0; i < d; ++i) {
          basis[i] = 1;
          const std::vector<uint8_t> left = a.mul_vec(basis, sk);
          basis[i] = 0;
          for (int j = 0; j < d; ++j) {
            basis[j] = 1;
            const std::vector<uint8_t> right = a.mul_vec(sl, basis);
            basis[j] = 0;
            for (int t = 0; t < ng; ++t) {
              const int st = gamma.mul(s, t);
              uint8_t* out =
                  c.data() + (size_t(idx(i, s, j)) * dd + idx(k, t, l)) * dd;
              for (int m = 0; m < d; ++m) {
                if (!left[m]) continue;
                for (int n = 0; n < d; ++n)
                  if (right[n])
                    out[idx(m, st, n)] = a.field.add(
                        out[idx(m, st, n)], a.field.mul(left[m], right[n]));
              }
            }
          }
        }
      }
    }
  std::vector<uint8_t> unit(dd, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      unit[idx(i, 0, j)] = a.field.mul(a.unit[i], a.unit[j]);
  StructureAlgebra oe =
      make_structure_algebra(a.field, dd, std::move(c), std::move(unit));
  std::vector<std::vector<uint8_t>> units(ng, std::vector<uint8_t>(dd, 0));
  for (int s = 0; s < ng; ++s)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        units[s][idx(i, s, j)] = a.field.mul(a.unit[i], a.unit[j]);
  AlgebraGammaAction oe_act = conjugation_algebra_action(oe, gamma, units);
  return GammaAlgebra{std::move(oe), std::move(oe_act)};
}

SkewEnvelopingIsoReport check_skew_enveloping_iso(
    const StructureAlgebra& a, const AlgebraGammaAction& act) {
  const int d = a.dim, ng = act.gamma.order;
  GammaAlgebra oe = oriented_enveloping(a, act);
  GammaAlgebra env = enveloping(a, act);
  GammaAlgebra sk = skew_group_algebra(env.algebra, env.action);
  SkewEnvelopingIsoReport rep;
  rep.dim = oe.algebra.dim;
  if (oe.algebra.dim != sk.algebra.dim) {
    rep.counterexample = "dimension mismatch";
    return rep;
  }
  const int dd = oe.algebra.dim;
  // f(e_i (x) s (x) e_j) = (e_i (x) e_j) * s
  std::vector<int> f(dd);
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < ng; ++s)
      for (int j = 0; j < d; ++j)
        f[(i * ng + s) * d + j] = (i * d + j) * ng + s;
  auto push = [&](const std::vector<uint8_t>& v) {
    std::vector<uint8_t> out(dd, 0);
    for (int i = 0; i < dd; ++i) out[f[i]] = v[i];
    return out;
  };
  if (push(oe.algebra.unit) != sk.algebra.unit) {
    rep.counterexample = "unit mismatch";
    return rep;
  }
  for (int x = 0; x < dd; ++x)
    for (int y = 0; y < dd; ++y) {
      std::vector<uint8_t> prod(oe.algebra.sc_row(x, y),
                                oe.algebra.sc_row(x, y) + dd);
      std::vector<uint8_t> image(sk.algebra.sc_row(f[x], f[y]),
                                 sk.algebra.sc_row(f[x], f[y]) + dd);
      if (push(prod) != image) {
        rep.counterexample = "product mismatch at basis pair (" +
                             std::to_string(x) + "," + std::to_string(y) + ")";
        return rep;
      }
    }
  for (int s = 0; s < ng; ++s)
    for (int x = 0; x < dd; ++x) {
      std::vector<uint8_t> lhs = push(mat_column(oe.action.mats[s], x));
      std::vector<uint8_t> rhs = mat_column(sk.action.mats[s], f[x]);
      if (lhs != rhs) {
        rep.counterexample = "Gamma-equivariance fails at (sigma=" +
                             std::to_string(s) + ", basis=" +
                             std::to_string(x) + ")";
        return rep;
      }
    }
  rep.pass = true;
  return rep;
}

}  // namespace eqh
