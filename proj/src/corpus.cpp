#include "eqh/corpus.hpp"

#include <algorithm>

namespace eqh {

FiniteGroup trivial_group() { return from_mult_table({{0}}, {"1"}); }

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return from_mult_table(table);
}

FiniteGroup klein_four_group() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[i][j] = i ^ j;
  return from_mult_table(table, {"(0,0)", "(1,0)", "(0,1)", "(1,1)"});
}

namespace {

// Permutations of {0,1,2} in lexicographic one-line order; the identity is
// first, as required.
constexpr int kS3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

int s3_index(const int* p) {
  for (int i = 0; i < 6; ++i)
    if (kS3[i][0] == p[0] && kS3[i][1] == p[1] && kS3[i][2] == p[2]) return i;
  return -1;
}

}  // namespace

FiniteGroup symmetric3_group() {
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];  // (pi pj)(x) = pi(pj(x))
      for (int x = 0; x < 3; ++x) comp[x] = kS3[i][kS3[j][x]];
      table[i][j] = s3_index(comp);
    }
  std::vector<std::string> labels;
  for (int i = 0; i < 6; ++i)
    labels.push_back(std::string() + char('0' + kS3[i][0]) +
                     char('0' + kS3[i][1]) + char('0' + kS3[i][2]));
  return from_mult_table(table, std::move(labels));
}

FiniteGroup dihedral8_group() {
  // Element r^i s^j at index i + 4j, with s r = r^-1 s.
  auto idx = [](int i, int j) { return i + 4 * j; };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          const int rot = j == 0 ? (i + k) % 4 : ((i - k) % 4 + 4) % 4;
          table[idx(i, j)][idx(k, l)] = idx(rot, (j + l) % 2);
        }
  std::vector<std::string> labels(8);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) {
      std::string lab;
      if (i > 0) lab += i > 1 ? "r" + std::to_string(i) : "r";
      if (j > 0) lab += "s";
      labels[idx(i, j)] = lab.empty() ? "1" : lab;
    }
  return from_mult_table(table, std::move(labels));
}

namespace {

// Invertible 2x2 matrices over GF(2), encoded (a,b,c,d); identity first,
// then lexicographic.
std::vector<std::array<int, 4>> gl2_list() {
  std::vector<std::array<int, 4>> out = {{1, 0, 0, 1}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if ((a * d + b * c) % 2 != 1) continue;
          std::array<int, 4> m{a, b, c, d};
          if (m != out[0]) out.push_back(m);
        }
  return out;
}

}  // namespace

std::array<int, 4> gl2_f2_matrix(int index) { return gl2_list()[index]; }

FiniteGroup gl2_f2_group() {
  auto ms = gl2_list();
  const int n = int(ms.size());
  auto find = [&](const std::array<int, 4>& m) {
    return int(std::find(ms.begin(), ms.end(), m) - ms.begin());
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& x = ms[i];
      const auto& y = ms[j];
      std::array<int, 4> prod{(x[0] * y[0] + x[1] * y[2]) % 2,
                              (x[0] * y[1] + x[1] * y[3]) % 2,
                              (x[2] * y[0] + x[3] * y[2]) % 2,
                              (x[2] * y[1] + x[3] * y[3]) % 2};
      table[i][j] = find(prod);
    }
  std::vector<std::string> labels;
  for (const auto& m : ms)
    labels.push_back("[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) +
                     "],[" + std::to_string(m[2]) + "," + std::to_string(m[3]) +
                     "]]");
  return from_mult_table(table, std::move(labels));
}

GroupAction trivial_action(const FiniteGroup& gamma, const FiniteGroup& g) {
  std::vector<int> id(g.order);
  for (int i = 0; i < g.order; ++i) id[i] = i;
  return make_action(gamma, g, std::vector<std::vector<int>>(gamma.order, id));
}

GroupAction conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<int>> perms(g.order, std::vector<int>(g.order));
  for (int s = 0; s < g.order; ++s)
    for (int x = 0; x < g.order; ++x) perms[s][x] = g.conj(s, x);
  return make_action(g, g, std::move(perms));
}

GroupAction gl2_on_klein_action() {
  FiniteGroup gamma = gl2_f2_group();
  FiniteGroup g = klein_four_group();
  std::vector<std::vector<int>> perms(gamma.order, std::vector<int>(4));
  for (int s = 0; s < gamma.order; ++s) {
    const auto m = gl2_f2_matrix(s);
    for (int v = 0; v < 4; ++v) {
      const int v1 = v & 1, v2 = v >> 1;
      const int w1 = (m[0] * v1 + m[1] * v2) % 2;
      const int w2 = (m[2] * v1 + m[3] * v2) % 2;
      perms[s][v] = w1 + 2 * w2;
    }
  }
  return make_action(std::move(gamma), std::move(g), std::move(perms));
}

GroupAction inversion_action(const FiniteGroup& g) {
  FiniteGroup gamma = cyclic_group(2);
  std::vector<std::vector<int>> perms(2, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    perms[0][x] = x;
    perms[1][x] = g.invert(x);
  }
  return make_action(std::move(gamma), g, std::move(perms));
}

std::vector<CorpusInstance> bundled_corpus() {
  std::vector<CorpusInstance> out;
  auto add = [&](std::string name, GroupAction act,
                 std::vector<uint32_t> primes) {
    out.push_back(CorpusInstance{std::move(name), std::move(act),
                                 std::move(primes)});
  };
  add("trivial", trivial_action(trivial_group(), trivial_group()), {2});
  add("z2-trivial", trivial_action(trivial_group(), cyclic_group(2)), {2});
  add("z3-trivial", trivial_action(trivial_group(), cyclic_group(3)), {3});
  add("z4-trivial", trivial_action(trivial_group(), cyclic_group(4)), {2});
  add("z2xz2-trivial", trivial_action(trivial_group(), klein_four_group()),
      {2});
  add("z2xz2-gl2", gl2_on_klein_action(), {2});
  add("s3-trivial", trivial_action(trivial_group(), symmetric3_group()),
      {2, 3});
  add("s3-conjugation", conjugation_action(symmetric3_group()), {2, 3});
  add("d4-trivial", trivial_action(trivial_group(), dihedral8_group()), {2});
  add("d4-conjugation", conjugation_action(dihedral8_group()), {2});
  add("z3-inversion", inversion_action(cyclic_group(3)), {3});
  return out;
}

}  // namespace eqh
