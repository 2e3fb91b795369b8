#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mop/core.hpp"

namespace mop {

// Star triangulation from vertex 0: chords {0,i} for i in 2..n-2.
MopGraph fan(int n);

// Two-row strip of order 2m+3: bottom row 0..m+1, top row labeled
// 2m+2 down to m+2 (right to left), triangulated by the zigzag
//   {j, 2m+2-j} for j in 1..m   and   {j+1, 2m+2-j} for j in 0..m-1.
// Exactly the bottom corners 0 and m+1 have degree 2.
MopGraph strip(int m);

// strip(m) with the degree-2 vertex m+1 removed; order 2m+2.
MopGraph strip_minus(int m);

// Extremal families built from ladders with ear caps; ladder_graph(k,s) has
// order s(2k+1), ladder_graph_odd order s(2k+1)+2t-1, ladder_graph_even order
// s(2k+1)+2t (t in [1,k]).  Their gamma_k values are pinned by solver
// checks in the test suite at desk scale.
MopGraph ladder_graph(int k, int s);
MopGraph ladder_graph_odd(int k, int s, int t);
MopGraph ladder_graph_even(int k, int s, int t);

// All triangulations of the convex n-gon (Catalan(n-2) of them); with
// dedup, one representative per canonical form, sorted.
std::vector<MopGraph> enum_mops(int n, bool dedup = false);
void enum_mops_cb(int n, const std::function<void(MopGraph&&)>& cb);

// Uniform over the Catalan(n-2) labeled triangulations, deterministic in
// the seed.  Sampling goes through a uniform random binary tree (leaf
// insertion growth) mapped through the standard triangulation bijection.
MopGraph random_mop(int n, uint64_t seed);

}  // namespace mop
