#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "eqh/fp.hpp"

namespace eqh {

// Dense row-major matrix over GF(p). Acts on column vectors: an r x c matrix
// is a linear map GF(p)^c -> GF(p)^r. Immutable by convention after
// construction helpers return.
struct FpMat {
  PrimeField field;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;

  FpMat() = default;
  FpMat(PrimeField f, int r, int c)
      : field(f), rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}

  static FpMat identity(PrimeField f, int n);
  static FpMat from_rows(PrimeField f,
                         std::initializer_list<std::initializer_list<int>> rs);
  static FpMat from_rows(PrimeField f,
                         const std::vector<std::vector<int>>& rs);

  uint8_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
  uint8_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const uint8_t* row(int i) const { return a.data() + size_t(i) * cols; }
  uint8_t* row(int i) { return a.data() + size_t(i) * cols; }

  bool operator==(const FpMat& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
  }
  bool is_zero() const;
  bool is_identity() const;
};

FpMat add(const FpMat& x, const FpMat& y);
FpMat sub(const FpMat& x, const FpMat& y);
FpMat mul(const FpMat& x, const FpMat& y);
FpMat transpose(const FpMat& m);
FpMat kron(const FpMat& x, const FpMat& y);
FpMat vstack(const std::vector<FpMat>& blocks);
FpMat hstack(const FpMat& x, const FpMat& y);
std::vector<uint8_t> mat_vec(const FpMat& m, const std::vector<uint8_t>& v);

// Unique reduced row echelon form; `pivots` lists pivot columns in order.
// Elimination is exact modular Gaussian elimination; p = 2 takes a
// bit-packed path (identical output, the RREF is unique).
struct RowEchelon {
  FpMat r;
  std::vector<int> pivots;
};
RowEchelon row_reduce(const FpMat& m);

int rank(const FpMat& m);

// Solve a * x = b columnwise. Free variables are pinned to zero, so the
// solution is canonical. Returns nullopt when inconsistent.
std::optional<FpMat> solve(const FpMat& a, const FpMat& b);

}  // namespace eqh
