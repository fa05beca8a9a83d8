#include "eqh/finite_group.hpp"

#include <algorithm>

#include "eqh/subspace.hpp"

namespace eqh {

FiniteGroup from_mult_table(const std::vector<std::vector<int>>& table,
                            std::vector<std::string> labels, int order_cap) {
  const int n = int(table.size());
  if (n == 0) throw ValidationError("group: empty multiplication table");
  if (n > order_cap)
    throw ValidationError("group: order " + std::to_string(n) +
                          " exceeds the configured cap " +
                          std::to_string(order_cap));
  FiniteGroup g;
  g.order = n;
  g.mult.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (int(table[i].size()) != n)
      throw ValidationError("group: multiplication table is not square");
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n)
        throw ValidationError("group: entry out of range at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      g.mult[size_t(i) * n + j] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw ValidationError(
          "group: missing identity (index 0 is not a two-sided identity, "
          "fails at element " +
          std::to_string(a) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError(
              "group: multiplication is not associative at triple (" +
              std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(c) + ")");
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0)
      throw ValidationError("group: missing inverse for element " +
                            std::to_string(a));
  }
  if (!labels.empty() && int(labels.size()) != n)
    throw ValidationError("group: label count does not match the order");
  g.labels = std::move(labels);
  return g;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  for (int e : elements)
    if (e < 0 || e >= g.order)
      throw ValidationError("subgroup: element index out of range");
  if (elements.empty() || elements[0] != 0)
    throw ValidationError("subgroup: must contain the identity");
  Subgroup h{&g, std::move(elements)};
  for (int a : h.elements) {
    if (!h.contains(g.invert(a)))
      throw ValidationError("subgroup: not closed under inverses at " +
                            std::to_string(a));
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b)))
        throw ValidationError("subgroup: not closed under multiplication at (" +
                              std::to_string(a) + "," + std::to_string(b) +
                              ")");
  }
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {0}); }

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order);
  for (int i = 0; i < g.order; ++i) all[i] = i;
  return make_subgroup(g, std::move(all));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int a = 0; a < g.order; ++a)
    for (int x : h.elements)
      if (!h.contains(g.conj(a, x))) return false;
  return true;
}

static std::vector<int> closure_under_mult(const FiniteGroup& g,
                                           std::vector<int> seed) {
  std::vector<bool> in(g.order, false);
  std::vector<int> members;
  auto push = [&](int e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  push(0);
  for (int e : seed) push(e);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      push(g.mul(members[i], members[j]));
      push(g.mul(members[j], members[i]));
    }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  for (int e : gens)
    if (e < 0 || e >= g.order)
      throw ValidationError("subgroup_generated: index out of range");
  return make_subgroup(g, closure_under_mult(g, gens));
}

Subgroup normal_closure(const FiniteGroup& g, const Subgroup& within,
                        const std::vector<int>& seed) {
  for (int e : seed)
    if (!within.contains(e))
      throw ValidationError("normal_closure: seed escapes the ambient subgroup");
  std::vector<int> current = seed;
  for (;;) {
    current = closure_under_mult(g, current);
    std::vector<int> grown = current;
    for (int w : within.elements)
      for (int a : current) grown.push_back(g.conj(w, a));
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    if (grown == current) break;
    current = std::move(grown);
  }
  return make_subgroup(g, current);
}

Subgroup centralizer(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order)
    throw ValidationError("centralizer: index out of range");
  std::vector<int> members;
  for (int h = 0; h < g.order; ++h)
    if (g.mul(h, x) == g.mul(x, h)) members.push_back(h);
  return make_subgroup(g, std::move(members));
}

Subgroup derived_of(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> comms;
  for (int a : h.elements)
    for (int b : h.elements)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.invert(a), g.invert(b))));
  return subgroup_generated(g, comms);
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  return derived_of(full_subgroup(g));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  std::vector<bool> seen(g.order, false);
  for (int x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int a = 0; a < g.order; ++a) {
      const int y = g.conj(a, x);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cc.representatives.push_back(x);
    cc.classes.push_back(std::move(cls));
  }
  return cc;
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n))
    throw ValidationError("quotient_group: subgroup is not normal");
  // Canonical coset representative: smallest element of gN.
  std::vector<int> canon(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    int best = g.order;
    for (int h : n.elements) best = std::min(best, g.mul(a, h));
    canon[a] = best;
  }
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a)
    if (canon[a] == a) reps.push_back(a);
  std::vector<int> coset_index(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    coset_index[a] =
        int(std::lower_bound(reps.begin(), reps.end(), canon[a]) - reps.begin());
  const int q = int(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i][j] = coset_index[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  if (!g.labels.empty()) {
    labels.reserve(q);
    for (int r : reps) labels.push_back("[" + g.label(r) + "]");
  }
  return QuotientGroup{from_mult_table(table, std::move(labels)),
                       std::move(coset_index)};
}

FpMat additive_hom_basis(const FiniteGroup& g, const Subgroup& floor,
                         PrimeField field) {
  if (!is_normal(g, floor))
    throw ValidationError("additive_hom_basis: floor subgroup is not normal");
  // Unknowns f(0..order-1); the homomorphism law and the vanishing
  // constraints form one linear system.
  const int n = g.order;
  FpMat sys(field, n * n + floor.order(), n);
  int r = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b, ++r) {
      uint8_t* row = sys.row(r);
      row[g.mul(a, b)] = field.add(row[g.mul(a, b)], 1);
      row[a] = field.sub(row[a], 1);
      row[b] = field.sub(row[b], 1);
    }
  for (int x : floor.elements) sys.at(r++, x) = 1;
  return kernel_basis(sys).basis;
}

std::vector<Subgroup> index_p_normal_subgroups_above(const FiniteGroup& g,
                                                     const Subgroup& floor,
                                                     uint32_t p) {
  PrimeField field(p);
  FpMat homs = additive_hom_basis(g, floor, field);  // validates normality
  const int d = homs.rows;
  // Kernels of surjective homomorphisms G -> Z/p containing floor; two
  // homomorphisms share a kernel exactly when they are proportional, so one
  // normalized representative per line is enumerated (first nonzero
  // coefficient equal to 1, lexicographic order).
  std::vector<Subgroup> out;
  std::vector<uint8_t> coeff(d, 0);
  auto advance = [&]() {
    for (int i = d - 1; i >= 0; --i) {
      if (++coeff[i] < p) return true;
      coeff[i] = 0;
    }
    return false;
  };
  while (advance()) {
    int first = 0;
    while (first < d && coeff[first] == 0) ++first;
    if (first == d || coeff[first] != 1) continue;
    std::vector<uint8_t> f(g.order, 0);
    for (int k = 0; k < d; ++k) {
      if (!coeff[k]) continue;
      for (int e = 0; e < g.order; ++e)
        f[e] = field.add(f[e], field.mul(coeff[k], homs.at(k, e)));
    }
    std::vector<int> kernel_elems;
    for (int e = 0; e < g.order; ++e)
      if (f[e] == 0) kernel_elems.push_back(e);
    // A nonzero homomorphism into Z/p is surjective, so the kernel has
    // index exactly p.
    if (int(kernel_elems.size()) * int(p) != g.order)
      throw ValidationError(
          "index_p_normal_subgroups_above: internal kernel-size mismatch");
    out.push_back(make_subgroup(g, std::move(kernel_elems)));
  }
  return out;
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup h = trivial_subgroup(g);
  for (int e = 0; e < g.order; ++e) {
    if (h.contains(e)) continue;
    gens.push_back(e);
    h = subgroup_generated(g, gens);
    if (h.order() == g.order) break;
  }
  return gens;
}

SubgroupAsGroup subgroup_as_group(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  const int m = h.order();
  std::vector<int> from_parent(g.order, -1);
  for (int i = 0; i < m; ++i) from_parent[h.elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = from_parent[g.mul(h.elements[i], h.elements[j])];
  std::vector<std::string> labels;
  if (!g.labels.empty()) {
    labels.reserve(m);
    for (int e : h.elements) labels.push_back(g.label(e));
  }
  return SubgroupAsGroup{from_mult_table(table, std::move(labels)),
                         h.elements, std::move(from_parent)};
}

}  // namespace eqh
