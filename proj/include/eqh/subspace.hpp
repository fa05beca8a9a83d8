#pragma once

#include <optional>
#include <vector>

#include "eqh/fp_matrix.hpp"

namespace eqh {

// A subspace of GF(p)^ambient, carried by a matrix whose rows form a basis.
struct Subspace {
  int ambient = 0;
  FpMat basis;  // dim x ambient, linearly independent rows

  static Subspace zero(PrimeField f, int ambient);
  static Subspace full(PrimeField f, int ambient);
  // Canonical basis (RREF rows) of the row span.
  static Subspace from_rows(const FpMat& rows);
  // Keeps the given vectors; throws if they are dependent.
  static Subspace from_independent_rows(const FpMat& rows);

  PrimeField field() const { return basis.field; }
  int dim() const { return basis.rows; }
  FpMat embedding() const { return transpose(basis); }  // ambient x dim

  bool contains_vector(const std::vector<uint8_t>& v) const;
  bool contains(const Subspace& other) const;
  bool same_space(const Subspace& other) const;
  // Coordinates of v in this basis, when v lies in the span.
  std::optional<std::vector<uint8_t>> coordinates(
      const std::vector<uint8_t>& v) const;
};

Subspace kernel_basis(const FpMat& m);
Subspace row_space(const FpMat& m);
Subspace column_space(const FpMat& m);

// Joint kernel of (op - shift) over all listed operators; with shift = I this
// is the joint fixed space. Characteristic may divide the group order, so
// fixed spaces are never formed by averaging. An empty list gives the full
// space of shift's size.
Subspace common_kernel(const std::vector<FpMat>& ops, const FpMat& shift);

// Matrix of m in the bases of dom and cod; throws when some image vector
// escapes cod (i.e. the claimed subspace-preservation fails).
FpMat restrict_map(const FpMat& m, const Subspace& dom, const Subspace& cod);

// dim z - dim b, after validating b <= z.
int quotient_dim(const Subspace& z, const Subspace& b);

// Incremental row-echelon accumulator: add() reduces a vector against the
// rows seen so far and reports whether it enlarged the span.
struct IncrementalSpan {
  PrimeField field;
  int cols = 0;
  std::vector<std::vector<uint8_t>> rows;  // echelon rows, pivot scaled to 1
  std::vector<int> pivots;

  IncrementalSpan(PrimeField f, int c) : field(f), cols(c) {}
  int dim() const { return int(rows.size()); }
  bool add(std::vector<uint8_t> v);
};

}  // namespace eqh
