#pragma once

// Test-only reference implementations, kept independent of the library's
// search paths: full-subset enumeration for minimum sets and backtracking
// isomorphism for small graphs.

#include <algorithm>
#include <optional>
#include <vector>

#include "mop/core.hpp"
#include "mop/exact.hpp"

namespace oracle {

// Minimum k-component dominating set by scanning all 2^n subsets; ties by
// lexicographically smallest sorted vertex vector.
inline std::optional<std::vector<int>> naive_min_kcds(
    const mop::MopGraph& g, int k, const mop::Constraints& c = {}) {
  const int n = g.n();
  std::optional<std::vector<int>> best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    if (best && s.size() > best->size()) continue;
    if (c.max_size && (int)s.size() > *c.max_size) continue;
    bool feasible = true;
    for (int v : c.must_contain)
      feasible = feasible && std::binary_search(s.begin(), s.end(), v);
    for (int v : c.forbidden)
      feasible = feasible && !std::binary_search(s.begin(), s.end(), v);
    for (auto [a, b] : c.must_intersect)
      feasible = feasible && (std::binary_search(s.begin(), s.end(), a) ||
                              std::binary_search(s.begin(), s.end(), b));
    if (!feasible || !mop::is_kcds(g, k, s)) continue;
    if (!best || s.size() < best->size() || s < *best) best = s;
  }
  return best;
}

inline bool extend_iso(const mop::MopGraph& a, const mop::MopGraph& b,
                       std::vector<int>& map, std::vector<char>& used, int v) {
  const int n = a.n();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.has_edge(v, u) != b.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend_iso(a, b, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

// Unrestricted graph isomorphism (not just dihedral relabelings).
inline bool brute_isomorphic(const mop::MopGraph& a, const mop::MopGraph& b) {
  if (a.n() != b.n()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.n(), -1);
  std::vector<char> used(a.n(), 0);
  return extend_iso(a, b, map, used, 0);
}

}  // namespace oracle
