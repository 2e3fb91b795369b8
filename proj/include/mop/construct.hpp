#pragma once

#include <string>
#include <vector>

#include "mop/core.hpp"
#include "mop/exact.hpp"

namespace mop {

// A chord together with the outer-cycle edge count m of its designated
// side; produced by shermer_chord with s <= m <= 2s-2.
struct ChordChoice {
  VertexPair chord;
  int m = 0;
  bool low_side = false;  // true: the side on positions chord.first..chord.second
};

// Chord whose designated side has m outer-cycle edges with s <= m <= 2s-2;
// exists whenever n >= 2s.  Among valid choices m is minimal, ties broken
// by lexicographically smallest chord, low side first.
ChordChoice shermer_chord(const MopGraph& g, int s);

// For odd n >= 5 and level (n-3)/2: a level-component dominating set of
// that exact size, built by ear contraction and recursive lifting.
DomSet odd_order_set(const MopGraph& g);

// Anchored constructions on graphs of order 2k+1 / 2k+2; each returns a
// k-component dominating set of order exactly k with the stated anchor.
DomSet anchored_set(const MopGraph& g, int k, int u);              // contains u
DomSet edge_meeting_set(const MopGraph& g, int k, VertexPair xy);  // meets xy
DomSet pair_anchored_set(const MopGraph& g, int k, int x, int y);  // contains x, y
DomSet even_anchored_set(const MopGraph& g, int k, int x);         // contains x

// For 2k+1 <= n <= 4k+3: a k-component dominating set of size
// floor(kn/(2k+1)).
DomSet small_order_set(const MopGraph& g, int k);

// Either two degree-2 vertices u, v at distance 2 with common neighbor x
// (y, z their other neighbors), or a degree-2 vertex u adjacent to a
// degree-3 vertex v (x = u's other neighbor, y = v's third neighbor).
// Guaranteed to exist for n >= 7.
struct LowDegreePattern {
  enum Kind { distance2, adjacent23 };
  Kind kind = distance2;
  int u = -1, v = -1, x = -1, y = -1, z = -1;  // z = -1 for adjacent23
};
LowDegreePattern low_degree_pattern(const MopGraph& g);

// For n = 4k+2l with 2 <= l <= k and a graph outside the exceptional
// family: a k-component dominating set of size at most 2k+l-2.  Throws
// IsExceptional when the case analysis certifies family membership.
DomSet mid_order_construct(const MopGraph& g, int k);

// For any n >= 2k+1: a k-component dominating set within
//   ceil(kn/(2k+1))  for members of the exceptional family,
//   floor(kn/(2k+1)) otherwise.
// The trace records the sequence of case tags the recursion took.
DomSet dichotomy_construct(const MopGraph& g, int k);
DomSet dichotomy_construct(const MopGraph& g, int k,
                           std::vector<std::string>& trace);

long long floor_bound(int k, long long n);  // floor(kn/(2k+1))
long long ceil_bound(int k, long long n);   // ceil(kn/(2k+1))
long long dichotomy_bound(int k, long long n, bool exceptional);

}  // namespace mop
