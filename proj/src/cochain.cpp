#include "eqh/cochain.hpp"

namespace eqh {

CochainComplexOverFp make_complex(PrimeField field, std::vector<FpMat> diffs) {
  if (diffs.empty())
    throw ValidationError("complex: need at least one differential");
  for (const FpMat& d : diffs)
    if (d.field != field) throw ValidationError("complex: field mismatch");
  for (size_t n = 0; n + 1 < diffs.size(); ++n) {
    if (diffs[n + 1].cols != diffs[n].rows)
      throw ValidationError("complex: differential shapes do not chain at " +
                            std::to_string(n));
    if (!mul(diffs[n + 1], diffs[n]).is_zero())
      throw ValidationError("complex: d^2 != 0 between degrees " +
                            std::to_string(n) + " and " +
                            std::to_string(n + 2));
  }
  std::vector<int> dims;
  for (const FpMat& d : diffs) dims.push_back(d.cols);
  dims.push_back(diffs.back().rows);
  return CochainComplexOverFp{field, std::move(dims), std::move(diffs)};
}

CohomologyResult cohomology(const CochainComplexOverFp& c, int n) {
  if (n < 0 || n > c.top_degree())
    throw ValidationError("cohomology: degree " + std::to_string(n) +
                          " outside the built range 0.." +
                          std::to_string(c.top_degree()));
  Subspace z = kernel_basis(c.diffs[n]);
  Subspace b = n == 0 ? Subspace::zero(c.field, c.dims[0])
                      : column_space(c.diffs[n - 1]);
  // Extend a basis of the boundary space to one of the cocycle space; the
  // vectors added along the way are the representatives.
  IncrementalSpan span(c.field, c.dims[n]);
  for (int i = 0; i < b.dim(); ++i)
    span.add(std::vector<uint8_t>(b.basis.row(i), b.basis.row(i) + b.ambient));
  FpMat reps(c.field, z.dim() - b.dim(), c.dims[n]);
  int k = 0;
  for (int i = 0; i < z.dim(); ++i) {
    std::vector<uint8_t> v(z.basis.row(i), z.basis.row(i) + z.ambient);
    if (span.add(v)) {
      std::copy(z.basis.row(i), z.basis.row(i) + z.ambient, reps.row(k));
      ++k;
    }
  }
  if (k != reps.rows)
    throw ValidationError("cohomology: internal representative count mismatch");
  CohomologyResult out;
  out.degree = n;
  out.dim = reps.rows;
  out.cocycle_reps = Subspace::from_independent_rows(std::move(reps));
  out.boundary_space = std::move(b);
  return out;
}

std::optional<std::vector<uint8_t>> class_coordinates(
    const CohomologyResult& h, const std::vector<uint8_t>& v) {
  const int ambient = h.boundary_space.ambient;
  if (int(v.size()) != ambient)
    throw ValidationError("class_coordinates: length mismatch");
  FpMat rhs(h.boundary_space.field(), ambient, 1);
  for (int i = 0; i < ambient; ++i) rhs.at(i, 0) = v[i];
  FpMat basis = h.dim == 0
                    ? h.boundary_space.embedding()
                    : hstack(h.cocycle_reps.embedding(),
                             h.boundary_space.embedding());
  auto x = solve(basis, rhs);
  if (!x) return std::nullopt;
  std::vector<uint8_t> out(h.dim);
  for (int i = 0; i < h.dim; ++i) out[i] = x->at(i, 0);
  return out;
}

ComplexGammaAction make_complex_action(const CochainComplexOverFp& c,
                                       FiniteGroup gamma,
                                       std::vector<std::vector<FpMat>> ops) {
  if (ops.size() != c.dims.size())
    throw ValidationError("complex action: need operators for every degree");
  for (size_t n = 0; n < ops.size(); ++n) {
    if (int(ops[n].size()) != gamma.order)
      throw ValidationError("complex action: need one operator per element");
    for (const FpMat& m : ops[n])
      if (m.rows != c.dims[n] || m.cols != c.dims[n] || m.field != c.field)
        throw ValidationError(
            "complex action: operator shape mismatch at degree " +
            std::to_string(n));
    if (!ops[n][0].is_identity())
      throw ValidationError(
          "complex action: identity must act as the identity at degree " +
          std::to_string(n));
    for (int s = 0; s < gamma.order; ++s)
      for (int t = 0; t < gamma.order; ++t)
        if (mul(ops[n][s], ops[n][t]) != ops[n][gamma.mul(s, t)])
          throw ValidationError(
              "complex action: operators violate the group law at degree " +
              std::to_string(n) + ", pair (" + std::to_string(s) + "," +
              std::to_string(t) + ")");
  }
  std::vector<int> gens = minimal_generating_set(gamma);
  std::vector<Subspace> invariants;
  for (size_t n = 0; n < ops.size(); ++n) {
    std::vector<FpMat> gen_ops;
    for (int s : gens) gen_ops.push_back(ops[n][s]);
    invariants.push_back(
        common_kernel(gen_ops, FpMat::identity(c.field, c.dims[n])));
  }
  std::vector<FpMat> restricted;
  for (int n = 0; n <= c.top_degree(); ++n) {
    try {
      restricted.push_back(
          restrict_map(c.diffs[n], invariants[n], invariants[n + 1]));
    } catch (const ValidationError&) {
      throw ValidationError(
          "complex action: the differential does not map the fixed space "
          "into the next fixed space at degree " +
          std::to_string(n));
    }
  }
  return ComplexGammaAction{std::move(gamma), std::move(ops),
                            std::move(invariants), std::move(restricted)};
}

InvariantSubcomplex invariant_subcomplex(const CochainComplexOverFp& c,
                                         const ComplexGammaAction& act) {
  if (act.ops.size() != c.dims.size() ||
      int(act.ops[0][0].rows) != c.dims[0])
    throw ValidationError("invariant_subcomplex: action does not match");
  return InvariantSubcomplex{make_complex(c.field, act.restricted_diffs),
                             act.invariants};
}

FpMat induced_map_on_cohomology(const CochainComplexOverFp& src,
                                const CochainComplexOverFp& tgt,
                                const FpMat& f_n, int n) {
  if (f_n.cols != src.dims[n] || f_n.rows != tgt.dims[n])
    throw ValidationError("induced map: shape mismatch at degree " +
                          std::to_string(n));
  CohomologyResult hs = cohomology(src, n);
  CohomologyResult ht = cohomology(tgt, n);

  // Cocycles land in cocycles.
  Subspace z_src = kernel_basis(src.diffs[n]);
  FpMat z_images = mul(f_n, z_src.embedding());
  FpMat dz = mul(tgt.diffs[n], z_images);
  for (int j = 0; j < dz.cols; ++j)
    for (int i = 0; i < dz.rows; ++i)
      if (dz.at(i, j) != 0) {
        std::string witness;
        for (int r = 0; r < z_src.ambient; ++r)
          witness += std::to_string(int(z_src.basis.at(j, r)));
        throw ValidationError(
            "induced map: the image of a cocycle is not a cocycle at degree " +
            std::to_string(n) + " (witness " + witness + ")");
      }
  // Boundaries land in boundaries.
  if (hs.boundary_space.dim() > 0) {
    FpMat b_images = mul(f_n, hs.boundary_space.embedding());
    if (!solve(ht.boundary_space.embedding(), b_images))
      throw ValidationError(
          "induced map: the image of a boundary is not a boundary at degree " +
          std::to_string(n));
  }
  if (hs.dim == 0) return FpMat(src.field, ht.dim, 0);
  FpMat basis = ht.dim == 0
                    ? ht.boundary_space.embedding()
                    : hstack(ht.cocycle_reps.embedding(),
                             ht.boundary_space.embedding());
  auto x = solve(basis, mul(f_n, hs.cocycle_reps.embedding()));
  if (!x)
    throw ValidationError(
        "induced map: internal class reduction failed at degree " +
        std::to_string(n));
  FpMat out(src.field, ht.dim, hs.dim);
  for (int i = 0; i < ht.dim; ++i)
    for (int j = 0; j < hs.dim; ++j) out.at(i, j) = x->at(i, j);
  return out;
}

bool action_commutes_with_differentials(const CochainComplexOverFp& c,
                                        const ComplexGammaAction& act) {
  for (int n = 0; n <= c.top_degree(); ++n)
    for (int s = 0; s < act.gamma.order; ++s)
      if (mul(c.diffs[n], act.ops[n][s]) != mul(act.ops[n + 1][s], c.diffs[n]))
        return false;
  return true;
}

}  // namespace eqh
