#include "eqh/group_cohomology.hpp"

namespace eqh {

EquivariantGModule make_equivariant_g_module(const FiniteGroup& g,
                                             const GroupAction& act, int dim,
                                             std::vector<FpMat> gmats,
                                             std::vector<FpMat> gammats) {
  if (dim <= 0) throw ValidationError("module: dimension must be positive");
  if (int(gmats.size()) != g.order)
    throw ValidationError("module: need one matrix per element of G");
  if (int(gammats.size()) != act.gamma.order)
    throw ValidationError("module: need one matrix per element of Gamma");
  const PrimeField field = gmats.empty() ? PrimeField() : gmats[0].field;
  for (const auto* side : {&gmats, &gammats})
    for (const FpMat& m : *side)
      if (m.rows != dim || m.cols != dim || m.field != field)
        throw ValidationError("module: matrix shape or field mismatch");
  if (!gmats[0].is_identity() || !gammats[0].is_identity())
    throw ValidationError("module: identities must act as the identity");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (mul(gmats[a], gmats[b]) != gmats[g.mul(a, b)])
        throw ValidationError("module: G-matrices violate the group law at (" +
                              std::to_string(a) + "," + std::to_string(b) +
                              ")");
  for (int s = 0; s < act.gamma.order; ++s)
    for (int t = 0; t < act.gamma.order; ++t)
      if (mul(gammats[s], gammats[t]) != gammats[act.gamma.mul(s, t)])
        throw ValidationError(
            "module: Gamma-matrices violate the group law at (" +
            std::to_string(s) + "," + std::to_string(t) + ")");
  // ^s(g m) = (^s g)(^s m) on every pair.
  for (int s = 0; s < act.gamma.order; ++s)
    for (int a = 0; a < g.order; ++a)
      if (mul(gammats[s], gmats[a]) != mul(gmats[act.apply(s, a)], gammats[s]))
        throw ValidationError(
            "module: actions are not compatible at (sigma=" +
            std::to_string(s) + ", g=" + std::to_string(a) + ")");
  return EquivariantGModule{field, dim, std::move(gmats), std::move(gammats)};
}

EquivariantGModule trivial_g_module(const GroupAction& act, PrimeField field) {
  return make_equivariant_g_module(
      act.g, act, 1,
      std::vector<FpMat>(act.g.order, FpMat::identity(field, 1)),
      std::vector<FpMat>(act.gamma.order, FpMat::identity(field, 1)));
}

namespace {

long long power_ll(int base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Big-endian digits of `code` in the given base.
void decode_tuple(long long code, int n, int base, int* out) {
  for (int i = n - 1; i >= 0; --i) {
    out[i] = int(code % base);
    code /= base;
  }
}

long long encode_tuple(const int* t, int n, int base) {
  long long code = 0;
  for (int i = 0; i < n; ++i) code = code * base + t[i];
  return code;
}

}  // namespace

GroupCochainComplex group_cochain_complex(const GroupAction& act,
                                          const EquivariantGModule& module,
                                          int nmax, int dim_cap) {
  if (nmax < 0) throw ValidationError("group cochain complex: nmax < 0");
  const FiniteGroup& g = act.g;
  const int ng = g.order, dm = module.dim;
  const PrimeField field = module.field;
  for (int n = 0; n <= nmax + 1; ++n) {
    const long long d = power_ll(ng, n) * dm;
    if (d > dim_cap)
      throw SizeCapError("group cochain complex: degree " + std::to_string(n) +
                         " has dimension " + std::to_string(d) +
                         ", beyond the cap " + std::to_string(dim_cap));
  }

  std::vector<FpMat> diffs;
  std::vector<int> tup(nmax + 2), row_t(nmax + 2);
  for (int n = 0; n <= nmax; ++n) {
    const long long dn = power_ll(ng, n) * dm;
    const long long dn1 = power_ll(ng, n + 1) * dm;
    FpMat d(field, int(dn1), int(dn));
    const uint8_t sign_j_start = field.neg(1);  // (-1)^1
    for (long long st = 0; st < power_ll(ng, n); ++st) {
      decode_tuple(st, n, ng, tup.data());
      for (int mp = 0; mp < dm; ++mp) {
        const int col = int(st * dm + mp);
        // g_1 . phi(g_2..g_{n+1})
        for (int g1 = 0; g1 < ng; ++g1) {
          row_t[0] = g1;
          for (int i = 0; i < n; ++i) row_t[i + 1] = tup[i];
          const long long base = encode_tuple(row_t.data(), n + 1, ng) * dm;
          for (int mpp = 0; mpp < dm; ++mpp) {
            const uint8_t v = module.gmats[g1].at(mpp, mp);
            if (v)
              d.at(int(base + mpp), col) =
                  field.add(d.at(int(base + mpp), col), v);
          }
        }
        // (-1)^j phi(g_1,..,g_j g_{j+1},..,g_{n+1})
        uint8_t sign = sign_j_start;
        for (int j = 1; j <= n; ++j) {
          for (int a = 0; a < ng; ++a) {
            for (int i = 0; i < j - 1; ++i) row_t[i] = tup[i];
            row_t[j - 1] = a;
            row_t[j] = g.mul(g.invert(a), tup[j - 1]);
            for (int i = j; i < n; ++i) row_t[i + 1] = tup[i];
            const long long r = encode_tuple(row_t.data(), n + 1, ng) * dm + mp;
            d.at(int(r), col) = field.add(d.at(int(r), col), sign);
          }
          sign = field.neg(sign);
        }
        // (-1)^{n+1} phi(g_1..g_n)
        for (int last = 0; last < ng; ++last) {
          for (int i = 0; i < n; ++i) row_t[i] = tup[i];
          row_t[n] = last;
          const long long r = encode_tuple(row_t.data(), n + 1, ng) * dm + mp;
          d.at(int(r), col) = field.add(d.at(int(r), col), sign);
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  CochainComplexOverFp complex = make_complex(field, std::move(diffs));

  // rho^n(s) = P_s (x) ... (x) P_s (x) gammat_s, with P_s the permutation
  // matrix of ^s on G.
  std::vector<std::vector<FpMat>> ops(nmax + 2);
  for (int s = 0; s < act.gamma.order; ++s) {
    FpMat perm(field, ng, ng);
    for (int x = 0; x < ng; ++x) perm.at(act.apply(s, x), x) = 1;
    FpMat op = module.gammats[s];
    ops[0].push_back(op);
    for (int n = 1; n <= nmax + 1; ++n) {
      op = kron(perm, op);
      ops[n].push_back(op);
    }
  }
  ComplexGammaAction action =
      make_complex_action(complex, act.gamma, std::move(ops));
  return GroupCochainComplex{std::move(complex), std::move(action)};
}

CohomologyResult equivariant_group_cohomology(const GroupAction& act,
                                              const EquivariantGModule& module,
                                              int n, int dim_cap) {
  GroupCochainComplex gc = group_cochain_complex(act, module, n, dim_cap);
  InvariantSubcomplex sub = invariant_subcomplex(gc.complex, gc.action);
  return cohomology(sub.complex, n);
}

FpMat hom_to_additive_group(const FiniteGroup& g, const Subgroup& floor,
                            uint32_t p) {
  return additive_hom_basis(g, floor, PrimeField(p));
}

}  // namespace eqh
