#pragma once

#include <optional>
#include <vector>

#include "mop/core.hpp"

namespace mop {

// A vertex set claimed to dominate while every component of the induced
// subgraph has order at least k.  k = 0 means plain domination, k = 1
// domination, k = 2 total domination.
struct DomSet {
  std::vector<int> vertices;  // sorted
  int k = 1;
};

struct Constraints {
  std::vector<int> must_contain;
  std::vector<VertexPair> must_intersect;  // at least one endpoint chosen
  std::vector<int> forbidden;
  std::optional<int> max_size;
};

inline constexpr int kDefaultSolverGuard = 26;
// Exhaustive enumeration of all triangulations stays feasible up to here.
inline constexpr int kEnumGuard = 14;

bool is_dominating(const MopGraph& g, const std::vector<int>& s);
std::vector<std::vector<int>> induced_components(const MopGraph& g,
                                                 const std::vector<int>& s);
bool is_kcds(const MopGraph& g, int k, const std::vector<int>& s);

// Minimum-cardinality set satisfying the DomSet conditions and all
// constraints; cardinality-increasing search, depth-first in label order,
// so ties resolve to the lexicographically smallest vertex set.  Returns
// nullopt when no set satisfies the constraints.  Throws TooLarge beyond
// the guard.
std::optional<DomSet> min_kcds(const MopGraph& g, int k,
                               const Constraints& c = {},
                               int guard = kDefaultSolverGuard);

int gamma_k_exact(const MopGraph& g, int k, int guard = kDefaultSolverGuard);

struct GammaRow {
  int k = 0, n = 0, gamma = 0;
  // canonical forms of the graphs attaining gamma, sorted
  std::vector<std::vector<VertexPair>> extremal;
};
struct GammaTable {
  std::vector<GammaRow> rows;
};

// Exact max of gamma_k over all MOPs of each order in [n_min, n_max],
// by exhaustive enumeration of canonical classes.
GammaTable gamma_table(int k, int n_min, int n_max,
                       int guard = kDefaultSolverGuard, int threads = 1);

}  // namespace mop
