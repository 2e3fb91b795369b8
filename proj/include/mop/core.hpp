#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mop {

using VertexPair = std::pair<int, int>;

enum class Err {
  WrongChordCount,
  CrossingChords,
  DuplicateChord,
  DegenerateChord,
  NotAChord,
  NotOuterEdge,
  TooSmall,
  ResultNotMop,
  NoTriangleOnSide,
  TooLarge,
  Infeasible,
  WrongOrder,
  DegreeTooSmall,
  IsExceptional,
  OrderTooSmall,
  UOnCycle,
  BadPieceCount,
  SumTooSmall,
  PieceOutOfRange,
  BadTriangulation,
  BadMarkedPair,
  BadParameter,
  ParseError,
  InternalInvariantViolation,
};

const char* err_name(Err e);

class MopError : public std::runtime_error {
 public:
  MopError(Err code, const std::string& what);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& what);

// Sorted pair {min, max}.
VertexPair norm_pair(int a, int b);

// Maximal outerplanar graph on vertices 0..n-1 in cyclic order along the
// outer Hamiltonian cycle.  Outer edges {i, i+1 mod n} are implicit; only
// the n-3 pairwise non-crossing chords are stored.  Immutable after
// construction; all surgery returns new graphs plus label maps.
class MopGraph {
 public:
  // Empty placeholder; real graphs come from validate() and the generators.
  MopGraph() = default;

  // Checks every invariant (chord count, ranges, no duplicates, no outer
  // edges posing as chords, non-crossing) and normalizes the chord list.
  static MopGraph validate(int n, std::vector<VertexPair> chords);

  int n() const { return n_; }
  const std::vector<VertexPair>& chords() const { return chords_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  VertexPair outer_neighbors(int v) const;

  bool has_edge(int a, int b) const;
  bool is_outer_edge(int a, int b) const;
  bool is_chord(int a, int b) const;

  // Third vertex of the triangle on edge {a,b} whose interior lies on the
  // selected arc; low_arc means positions strictly between min(a,b) and
  // max(a,b).  Throws NoTriangleOnSide when the arc is empty (the unbounded
  // side of an outer edge).
  int apex_arc(int a, int b, bool low_arc) const;
  // Apex on the arc of {a,b} that contains side_vertex.
  int apex_toward(int a, int b, int side_vertex) const;
  // Unique triangle on an outer edge.
  int apex_of_outer(int a, int b) const;

  // Dihedral relabeling: v -> rotation+v (or rotation-v when reflected), mod n.
  MopGraph relabeled(int rotation, bool reflected) const;
  // Lexicographically minimal chord list over all 2n dihedral relabelings.
  // Two MOPs of the same order are isomorphic iff their forms agree.
  std::vector<VertexPair> canonical_form() const;

  bool operator==(const MopGraph& o) const {
    return n_ == o.n_ && chords_ == o.chords_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> chords_;
  std::vector<std::vector<int>> adj_;
};

struct SplitResult {
  MopGraph side_a;                // vertices a..b of chord {a,b}
  MopGraph side_b;                // vertices b..a, wrapping
  std::vector<int> map_a, map_b;  // child label -> original label
  int m_a = 0, m_b = 0;           // outer-cycle edge count per side
};
SplitResult split_by_chord(const MopGraph& g, VertexPair chord);

struct Contraction {
  MopGraph graph;
  std::vector<int> new_of_old;  // old label -> new label; both ends -> merged
  int merged = -1;              // new label of the contraction vertex
};
Contraction contract_outer_edge(const MopGraph& g, VertexPair outer_edge);

struct Deletion {
  MopGraph graph;
  std::vector<int> to_parent;   // new label -> old label
  std::vector<int> new_of_old;  // old label -> new label, -1 if deleted
};
// Removes the given vertices, keeping the cyclic order of the rest.  The
// result must again be a maximal outerplanar graph; this is verified and
// ResultNotMop is thrown otherwise.
Deletion delete_vertices(const MopGraph& g, std::vector<int> drop);

std::vector<int> lift_labels(const std::vector<int>& s,
                             const std::vector<int>& to_parent);

}  // namespace mop
