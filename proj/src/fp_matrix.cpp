#include "eqh/fp_matrix.hpp"

#include <algorithm>
#include <string>

namespace eqh {

static void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

FpMat FpMat::identity(PrimeField f, int n) {
  FpMat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::from_rows(PrimeField f,
                       std::initializer_list<std::initializer_list<int>> rs) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rs) v.emplace_back(r);
  return from_rows(f, v);
}

FpMat FpMat::from_rows(PrimeField f, const std::vector<std::vector<int>>& rs) {
  int r = int(rs.size());
  int c = r == 0 ? 0 : int(rs[0].size());
  FpMat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    require(int(rs[i].size()) == c, "FpMat::from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = f.reduce(rs[i][j]);
  }
  return m;
}

bool FpMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](uint8_t v) { return v == 0; });
}

bool FpMat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

static void check_compatible(const FpMat& x, const FpMat& y, const char* op) {
  require(x.field == y.field, std::string(op) + ": field mismatch");
}

FpMat add(const FpMat& x, const FpMat& y) {
  check_compatible(x, y, "add");
  require(x.rows == y.rows && x.cols == y.cols, "add: shape mismatch");
  FpMat out(x.field, x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.field.add(x.a[i], y.a[i]);
  return out;
}

FpMat sub(const FpMat& x, const FpMat& y) {
  check_compatible(x, y, "sub");
  require(x.rows == y.rows && x.cols == y.cols, "sub: shape mismatch");
  FpMat out(x.field, x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.field.sub(x.a[i], y.a[i]);
  return out;
}

FpMat mul(const FpMat& x, const FpMat& y) {
  check_compatible(x, y, "mul");
  require(x.cols == y.rows, "mul: inner dimension mismatch");
  FpMat out(x.field, x.rows, y.cols);
  const uint32_t p = x.field.p();
  for (int i = 0; i < x.rows; ++i) {
    uint8_t* ci = out.row(i);
    const uint8_t* xi = x.row(i);
    for (int k = 0; k < x.cols; ++k) {
      const uint32_t f = xi[k];
      if (!f) continue;  // zero-skip: many operators here are monomial
      const uint8_t* yk = y.row(k);
      if (f == 1) {
        for (int j = 0; j < y.cols; ++j) ci[j] = x.field.add(ci[j], yk[j]);
      } else {
        for (int j = 0; j < y.cols; ++j)
          ci[j] = uint8_t((ci[j] + f * yk[j]) % p);
      }
    }
  }
  return out;
}

FpMat transpose(const FpMat& m) {
  FpMat out(m.field, m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

FpMat kron(const FpMat& x, const FpMat& y) {
  check_compatible(x, y, "kron");
  FpMat out(x.field, x.rows * y.rows, x.cols * y.cols);
  for (int i1 = 0; i1 < x.rows; ++i1)
    for (int j1 = 0; j1 < x.cols; ++j1) {
      const uint8_t f = x.at(i1, j1);
      if (!f) continue;
      for (int i2 = 0; i2 < y.rows; ++i2) {
        uint8_t* orow = out.row(i1 * y.rows + i2) + size_t(j1) * y.cols;
        const uint8_t* yrow = y.row(i2);
        for (int j2 = 0; j2 < y.cols; ++j2)
          orow[j2] = x.field.mul(f, yrow[j2]);
      }
    }
  return out;
}

FpMat vstack(const std::vector<FpMat>& blocks) {
  require(!blocks.empty(), "vstack: no blocks");
  int cols = blocks[0].cols, rows = 0;
  for (const auto& b : blocks) {
    check_compatible(blocks[0], b, "vstack");
    require(b.cols == cols, "vstack: column mismatch");
    rows += b.rows;
  }
  FpMat out(blocks[0].field, rows, cols);
  int at = 0;
  for (const auto& b : blocks) {
    std::copy(b.a.begin(), b.a.end(), out.a.begin() + size_t(at) * cols);
    at += b.rows;
  }
  return out;
}

FpMat hstack(const FpMat& x, const FpMat& y) {
  check_compatible(x, y, "hstack");
  require(x.rows == y.rows, "hstack: row mismatch");
  FpMat out(x.field, x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    std::copy(x.row(i), x.row(i) + x.cols, out.row(i));
    std::copy(y.row(i), y.row(i) + y.cols, out.row(i) + x.cols);
  }
  return out;
}

std::vector<uint8_t> mat_vec(const FpMat& m, const std::vector<uint8_t>& v) {
  require(int(v.size()) == m.cols, "mat_vec: length mismatch");
  std::vector<uint8_t> out(m.rows, 0);
  const uint32_t p = m.field.p();
  for (int i = 0; i < m.rows; ++i) {
    uint32_t acc = 0;
    const uint8_t* ri = m.row(i);
    for (int j = 0; j < m.cols; ++j) acc = (acc + uint32_t(ri[j]) * v[j]) % p;
    out[i] = uint8_t(acc);
  }
  return out;
}

// ---- elimination -----------------------------------------------------------

static RowEchelon row_reduce_generic(const FpMat& m) {
  FpMat r = m;
  const PrimeField f = m.field;
  const uint32_t p = f.p();
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < r.cols && pr < r.rows; ++c) {
    int sel = -1;
    for (int i = pr; i < r.rows; ++i)
      if (r.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      std::swap_ranges(r.row(sel), r.row(sel) + r.cols, r.row(pr));
    const uint8_t pivinv = f.inv(r.at(pr, c));
    uint8_t* prow = r.row(pr);
    if (pivinv != 1)
      for (int j = c; j < r.cols; ++j) prow[j] = f.mul(prow[j], pivinv);
    for (int i = 0; i < r.rows; ++i) {
      if (i == pr) continue;
      const uint8_t fac = r.at(i, c);
      if (!fac) continue;
      uint8_t* ri = r.row(i);
      uint8_t tab[256];
      for (uint32_t v = 0; v < p; ++v) tab[v] = uint8_t(fac * v % p);
      for (int j = c; j < r.cols; ++j) ri[j] = f.sub(ri[j], tab[prow[j]]);
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(r), std::move(pivots)};
}

static RowEchelon row_reduce_gf2(const FpMat& m) {
  const int words = (m.cols + 63) / 64;
  std::vector<uint64_t> bits(size_t(m.rows) * std::max(words, 1), 0);
  for (int i = 0; i < m.rows; ++i) {
    const uint8_t* ri = m.row(i);
    uint64_t* bi = bits.data() + size_t(i) * words;
    for (int j = 0; j < m.cols; ++j)
      if (ri[j]) bi[j >> 6] |= uint64_t(1) << (j & 63);
  }
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < m.cols && pr < m.rows; ++c) {
    const int w = c >> 6;
    const uint64_t mask = uint64_t(1) << (c & 63);
    int sel = -1;
    for (int i = pr; i < m.rows; ++i)
      if (bits[size_t(i) * words + w] & mask) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      std::swap_ranges(bits.begin() + size_t(sel) * words,
                       bits.begin() + size_t(sel + 1) * words,
                       bits.begin() + size_t(pr) * words);
    const uint64_t* prow = bits.data() + size_t(pr) * words;
    for (int i = 0; i < m.rows; ++i) {
      if (i == pr) continue;
      uint64_t* ri = bits.data() + size_t(i) * words;
      if (ri[w] & mask)
        for (int k = w; k < words; ++k) ri[k] ^= prow[k];
    }
    pivots.push_back(c);
    ++pr;
  }
  FpMat r(m.field, m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    const uint64_t* bi = bits.data() + size_t(i) * words;
    uint8_t* ri = r.row(i);
    for (int j = 0; j < m.cols; ++j)
      ri[j] = uint8_t((bi[j >> 6] >> (j & 63)) & 1);
  }
  return {std::move(r), std::move(pivots)};
}

RowEchelon row_reduce(const FpMat& m) {
  return m.field.p() == 2 ? row_reduce_gf2(m) : row_reduce_generic(m);
}

int rank(const FpMat& m) { return int(row_reduce(m).pivots.size()); }

std::optional<FpMat> solve(const FpMat& a, const FpMat& b) {
  check_compatible(a, b, "solve");
  require(a.rows == b.rows, "solve: row mismatch");
  RowEchelon re = row_reduce(hstack(a, b));
  FpMat x(a.field, a.cols, b.cols);
  for (size_t k = 0; k < re.pivots.size(); ++k) {
    const int c = re.pivots[k];
    if (c >= a.cols) return std::nullopt;  // pivot in the RHS: inconsistent
    for (int j = 0; j < b.cols; ++j) x.at(c, j) = re.r.at(int(k), a.cols + j);
  }
  return x;
}

}  // namespace eqh
