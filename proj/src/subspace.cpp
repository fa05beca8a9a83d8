#include "eqh/subspace.hpp"

#include <string>

namespace eqh {

Subspace Subspace::zero(PrimeField f, int ambient) {
  return Subspace{ambient, FpMat(f, 0, ambient)};
}

Subspace Subspace::full(PrimeField f, int ambient) {
  return Subspace{ambient, FpMat::identity(f, ambient)};
}

Subspace Subspace::from_rows(const FpMat& rows) {
  RowEchelon re = row_reduce(rows);
  const int d = int(re.pivots.size());
  FpMat basis(rows.field, d, rows.cols);
  std::copy(re.r.a.begin(), re.r.a.begin() + size_t(d) * rows.cols,
            basis.a.begin());
  return Subspace{rows.cols, std::move(basis)};
}

Subspace Subspace::from_independent_rows(const FpMat& rows) {
  if (rank(rows) != rows.rows)
    throw ValidationError("Subspace: rows are not linearly independent");
  return Subspace{rows.cols, rows};
}

bool Subspace::contains_vector(const std::vector<uint8_t>& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient != other.ambient)
    throw ValidationError("Subspace::contains: ambient mismatch");
  if (other.dim() == 0) return true;
  return rank(vstack({basis, other.basis})) == dim();
}

bool Subspace::same_space(const Subspace& other) const {
  return dim() == other.dim() && contains(other);
}

std::optional<std::vector<uint8_t>> Subspace::coordinates(
    const std::vector<uint8_t>& v) const {
  if (int(v.size()) != ambient)
    throw ValidationError("Subspace::coordinates: length mismatch");
  FpMat col(field(), ambient, 1);
  for (int i = 0; i < ambient; ++i) col.at(i, 0) = v[i];
  auto x = solve(embedding(), col);
  if (!x) return std::nullopt;
  std::vector<uint8_t> out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = x->at(i, 0);
  return out;
}

Subspace kernel_basis(const FpMat& m) {
  RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : re.pivots) is_pivot[c] = true;
  const int d = m.cols - int(re.pivots.size());
  FpMat basis(m.field, d, m.cols);
  int k = 0;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    basis.at(k, fc) = 1;
    for (size_t i = 0; i < re.pivots.size(); ++i)
      basis.at(k, re.pivots[i]) = m.field.neg(re.r.at(int(i), fc));
    ++k;
  }
  return Subspace{m.cols, std::move(basis)};
}

Subspace row_space(const FpMat& m) { return Subspace::from_rows(m); }

Subspace column_space(const FpMat& m) {
  return Subspace::from_rows(transpose(m));
}

Subspace common_kernel(const std::vector<FpMat>& ops, const FpMat& shift) {
  if (shift.rows != shift.cols)
    throw ValidationError("common_kernel: shift must be square");
  if (ops.empty()) return Subspace::full(shift.field, shift.cols);
  std::vector<FpMat> blocks;
  blocks.reserve(ops.size());
  for (const FpMat& op : ops) {
    if (op.rows != op.cols || op.rows != shift.rows)
      throw ValidationError(
          "common_kernel: operator dimension mismatch (got " +
          std::to_string(op.rows) + "x" + std::to_string(op.cols) +
          ", expected " + std::to_string(shift.rows) + " square)");
    blocks.push_back(sub(op, shift));
  }
  return kernel_basis(vstack(blocks));
}

FpMat restrict_map(const FpMat& m, const Subspace& dom, const Subspace& cod) {
  if (m.cols != dom.ambient || m.rows != cod.ambient)
    throw ValidationError("restrict_map: ambient dimension mismatch");
  // Full codomain in standard coordinates: the images already are the
  // restricted matrix.
  if (cod.dim() == cod.ambient && cod.basis.is_identity())
    return dom.dim() == dom.ambient && dom.basis.is_identity()
               ? m
               : mul(m, dom.embedding());
  FpMat images = mul(m, dom.embedding());  // cod-ambient x dim(dom)
  auto x = solve(cod.embedding(), images);
  if (!x)
    throw ValidationError(
        "restrict_map: image of the domain subspace is not contained in the "
        "codomain subspace");
  return *x;  // dim(cod) x dim(dom)
}

int quotient_dim(const Subspace& z, const Subspace& b) {
  if (z.ambient != b.ambient)
    throw ValidationError("quotient_dim: ambient mismatch");
  if (!z.contains(b))
    throw ValidationError("quotient_dim: b is not contained in z");
  return z.dim() - b.dim();
}

bool IncrementalSpan::add(std::vector<uint8_t> v) {
  if (int(v.size()) != cols)
    throw ValidationError("IncrementalSpan: length mismatch");
  for (size_t k = 0; k < rows.size(); ++k) {
    const uint8_t f = v[pivots[k]];
    if (!f) continue;
    const std::vector<uint8_t>& r = rows[k];
    for (int j = 0; j < cols; ++j)
      v[j] = field.sub(v[j], field.mul(f, r[j]));
  }
  int piv = -1;
  for (int j = 0; j < cols; ++j)
    if (v[j]) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  const uint8_t inv = field.inv(v[piv]);
  if (inv != 1)
    for (int j = 0; j < cols; ++j) v[j] = field.mul(v[j], inv);
  rows.push_back(std::move(v));
  pivots.push_back(piv);
  return true;
}

}  // namespace eqh
