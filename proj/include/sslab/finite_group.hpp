// Small finite groups as multiplication tables, and brute-force counting of
// homomorphisms from a finite presentation.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sslab/errors.hpp"
#include "sslab/presentation.hpp"

namespace sslab {

struct FiniteGroup {
  std::string name;
  int order = 1;
  std::vector<int> table;  // row-major: table[a*order+b] = a*b
  int identity = 0;
  std::vector<int> inverse;

  FiniteGroup() : name("1"), order(1), table{0}, inverse{0} {}

  FiniteGroup(std::string nm, int n, std::vector<int> tab)
      : name(std::move(nm)), order(n), table(std::move(tab)) {
    if (n < 1 || static_cast<int>(table.size()) != n * n)
      throw ValidationError("multiplication table must be order x order");
    for (int x : table)
      if (x < 0 || x >= n) throw ValidationError("table entry out of range");
    identity = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) { identity = e; break; }
    }
    if (identity < 0) throw ValidationError("table has no identity element");
    inverse.assign(n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (mul(x, y) == identity && mul(y, x) == identity) inverse[x] = y;
    for (int x = 0; x < n; ++x)
      if (inverse[x] < 0) throw ValidationError("table element without inverse");
    if (n <= 128) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (mul(mul(x, y), z) != mul(x, mul(y, z)))
              throw ValidationError("table is not associative");
    }
  }

  int mul(int a, int b) const { return table[a * order + b]; }

  /// Builds the subgroup of S_points generated by the given permutations.
  /// Elements are indexed in sorted permutation order, so tables are
  /// deterministic.
  static FiniteGroup from_permutations(std::string nm, int points,
                                       const std::vector<std::vector<int>>& gens) {
    using Perm = std::vector<int>;
    Perm id(points);
    for (int i = 0; i < points; ++i) id[i] = i;
    auto compose = [points](const Perm& f, const Perm& g) {
      Perm h(points);
      for (int i = 0; i < points; ++i) h[i] = f[g[i]];
      return h;
    };
    std::vector<Perm> elems{id};
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
          Perm h = compose(elems[i], g);
          if (std::find(elems.begin(), elems.end(), h) == elems.end()) {
            elems.push_back(h);
            grew = true;
          }
        }
    }
    std::sort(elems.begin(), elems.end());
    int n = static_cast<int>(elems.size());
    std::vector<int> tab(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Perm h = compose(elems[a], elems[b]);
        tab[a * n + b] =
            static_cast<int>(std::find(elems.begin(), elems.end(), h) - elems.begin());
      }
    return FiniteGroup(std::move(nm), n, std::move(tab));
  }

  static FiniteGroup trivial() { return FiniteGroup(); }

  static FiniteGroup cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be positive");
    std::vector<int> tab(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) tab[a * n + b] = (a + b) % n;
    return FiniteGroup("Z/" + std::to_string(n), n, std::move(tab));
  }

  static FiniteGroup symmetric3() {
    return from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}});
  }

  /// Dihedral group of the n-gon, order 2n.
  static FiniteGroup dihedral(int n) {
    if (n < 2) throw ValidationError("dihedral index must be >= 2");
    std::vector<int> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      ref[i] = (n - i) % n;
    }
    return from_permutations("D" + std::to_string(n), n, {rot, ref});
  }

  static FiniteGroup klein_four() {
    return from_permutations("V4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  }

  static FiniteGroup by_name(const std::string& id) {
    if (id == "1" || id == "trivial") return trivial();
    if (id == "S3") return symmetric3();
    if (id == "V4") return klein_four();
    if (id.rfind("Z/", 0) == 0) return cyclic(std::stoi(id.substr(2)));
    if (id.size() >= 2 && id[0] == 'D') return dihedral(std::stoi(id.substr(1)));
    throw ParseError("unknown group name: " + id + " (use 1, Z/n, S3, Dn, V4)");
  }
};

/// Number of homomorphisms P -> G by exhaustive enumeration of generator
/// images in lexicographic order.  The budget caps relator-letter
/// evaluations; exceeding it throws TooLargeError before any work is done.
inline Int hom_count(const Presentation& p, const FiniteGroup& g,
                     const Int& budget = Int(100000000)) {
  const long n = p.gens();
  Int assignments = 1;
  for (long i = 0; i < n; ++i) assignments *= g.order;
  Int letters = 0;
  for (const auto& r : p.relators()) letters += static_cast<long>(r.size());
  Int cost = assignments * std::max(Int(1), letters);
  if (cost > budget)
    throw TooLargeError("hom_count budget exceeded: need " + cost.get_str() +
                        " relator evaluations, budget " + budget.get_str());

  std::vector<int> img(static_cast<size_t>(n), 0);
  Int count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators()) {
      int x = g.identity;
      for (int l : r.letters()) {
        int a = img[static_cast<size_t>((l > 0 ? l : -l) - 1)];
        x = g.mul(x, l > 0 ? a : g.inverse[a]);
      }
      if (x != g.identity) { ok = false; break; }
    }
    if (ok) ++count;
    long i = n - 1;
    while (i >= 0 && img[static_cast<size_t>(i)] == g.order - 1) {
      img[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++img[static_cast<size_t>(i)];
  }
  return count;
}

}  // namespace sslab
