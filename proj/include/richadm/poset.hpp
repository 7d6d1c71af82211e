#pragma once

// Small finite posets with explicit order matrices: Hasse edges by
// transitive reduction, Moebius function by the standard recursion, and the
// thin / Eulerian diagnostics.

#include <map>
#include <stdexcept>
#include <vector>

namespace richadm {

struct PosetGraph {
  int n = 0;
  std::vector<char> rel;   // rel[a*n+b] = (a <= b)
  std::vector<int> grade;  // rank function values

  bool leq(int a, int b) const { return rel[static_cast<size_t>(a) * n + b]; }

  // Checks reflexivity, antisymmetry, transitivity.
  void validate() const {
    for (int a = 0; a < n; ++a) {
      if (!leq(a, a)) throw std::invalid_argument("poset relation is not reflexive");
      for (int b = 0; b < n; ++b) {
        if (a != b && leq(a, b) && leq(b, a))
          throw std::invalid_argument("poset relation is not antisymmetric");
        if (!leq(a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (leq(b, c) && !leq(a, c))
            throw std::invalid_argument("poset relation is not transitive");
      }
    }
  }

  // Cover relations (transitive reduction).
  std::vector<std::pair<int, int>> hasse() const {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < n && cover; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
        if (cover) edges.emplace_back(a, b);
      }
    return edges;
  }

  // mu(a, b) for all pairs a <= b.
  std::map<std::pair<int, int>, long long> moebius() const {
    std::map<std::pair<int, int>, long long> mu;
    for (int a = 0; a < n; ++a) {
      // process b in any linear extension; iterate by grade then index
      std::vector<int> order;
      for (int b = 0; b < n; ++b)
        if (leq(a, b)) order.push_back(b);
      std::stable_sort(order.begin(), order.end(),
                       [&](int x, int y) { return grade[x] < grade[y]; });
      for (int b : order) {
        long long s = 0;
        for (int z : order)
          if (z != b && leq(z, b)) s += mu.at({a, z});
        mu[{a, b}] = (a == b) ? 1 : -s;
      }
    }
    return mu;
  }
};

struct PosetDiagnostics {
  bool thin = false;
  bool eulerian = false;
  std::map<std::pair<int, int>, long long> moebius;
};

// Requires the grade to be a rank function (covers raise it by exactly 1);
// otherwise throws.
inline PosetDiagnostics poset_diagnostics(const PosetGraph& p) {
  p.validate();
  for (auto [a, b] : p.hasse())
    if (p.grade[b] != p.grade[a] + 1)
      throw std::invalid_argument("poset is not graded by the supplied rank function");

  PosetDiagnostics d;
  d.thin = true;
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b) {
      if (!p.leq(a, b) || p.grade[b] - p.grade[a] != 2) continue;
      int interior = 0;
      for (int c = 0; c < p.n; ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) ++interior;
      if (interior != 2) d.thin = false;
    }

  d.moebius = p.moebius();
  d.eulerian = true;
  for (auto& [key, mu] : d.moebius) {
    int diff = p.grade[key.second] - p.grade[key.first];
    long long want = (diff % 2 == 0) ? 1 : -1;
    if (mu != want) d.eulerian = false;
  }
  return d;
}

}  // namespace richadm
