#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mop/core.hpp"
#include "mop/exact.hpp"

namespace mop {

// A graph of odd order ell+1 together with an outer edge xy whose endpoint
// degrees are {2, 3}.  x' and y' are the other outer neighbors of x and y.
struct MarkedPair {
  MopGraph g;
  int x = -1, y = -1;

  int ell() const { return g.n() - 1; }
  int x_prime() const;
  int y_prime() const;

  // Validates: xy outer edge, order = ell+1 with ell even >= 4, endpoint
  // degrees {2, 3}.  Throws BadMarkedPair otherwise.
  static MarkedPair make(MopGraph g, int x, int y);
  // Key minimal over dihedral relabelings that also tracks the marked edge;
  // two pairs are isomorphic as marked pairs iff keys agree.
  std::pair<std::vector<VertexPair>, VertexPair> marked_canonical() const;
};

// Membership test for the marked family: holds iff g - {x, y} admits no
// (ell/2 - 2)-component dominating set of order ell/2 - 2 intersecting the
// edge x'y'.  For ell = 4 the required order is 0 and an empty set can
// intersect nothing, so membership holds vacuously.
bool in_marked_family(const MarkedPair& mp, int guard = kDefaultSolverGuard);

// All members with the given even ell >= 4, one per marked-isomorphism
// class, deterministically ordered.  Guarded by order (ell+1 <= max_order).
std::vector<MarkedPair> enum_marked_family(int ell, int max_order = 13);

// Witness that a graph decomposes into 2p+1 marked pieces glued around a
// triangulated odd inner cycle.
struct GluedDecomposition {
  int k = 0;
  int p = 0;
  std::vector<int> cycle;               // inner cycle vertices, cyclic order
  std::vector<int> piece_ell;           // arc lengths, piece i = cycle[i]..cycle[i+1]
  std::vector<VertexPair> inner_chords; // triangulation of the inner cycle
};

struct PieceView {
  MopGraph g;
  std::vector<int> to_parent;
  int x_local = -1, y_local = -1;  // marked edge endpoints, piece orientation
};
// Piece at logical index i (0-based) after rotating the cycle by rot slots.
PieceView glued_piece(const MopGraph& g, const GluedDecomposition& dec, int i,
                   int rot = 0);

// Glues 2p+1 marked pieces (y_i identified with x_{i+1}) around an inner
// cycle triangulated as prescribed; inner_triangulation lists chords as
// pairs of 0-based piece indices.  The global labeling walks piece 0 from
// its x endpoint.
std::pair<MopGraph, GluedDecomposition> build_glued(
    int k, const std::vector<MarkedPair>& pieces,
    const std::vector<VertexPair>& inner_triangulation);

// Finds a decomposition witnessing membership in the exceptional family for
// this k, or nullopt.  Deterministic: smallest starting vertex, then
// lexicographically smallest arc profile.
std::optional<GluedDecomposition> detect_exceptional(const MopGraph& g, int k);

// Building block of exceptional_kcds and semi_kcds: union of per-piece anchored sets
// for logical pieces 1..upto once the cycle is rotated by rot slots; odd
// logical pieces anchor their y endpoint, even ones their x endpoint.
std::vector<int> alternating_piece_set(const MopGraph& g,
                                    const GluedDecomposition& dec, int rot,
                                    int upto);

// The k-component dominating set of size n/2 - p assembled from per-piece
// anchored sets, alternating between the shared cycle vertices.
DomSet exceptional_kcds(const MopGraph& g, const GluedDecomposition& dec);

// Dominating set split into a connected part d1 through u (small component)
// and a part d2 whose components all have order >= k; total size at most
// n/2 - (p+1); no neighbor of u on the inner cycle is used.  The inner-cycle
// neighbors of u, all verified absent from the set, are reported in
// excluded_cycle so callers relying on a specific exclusion can check it.
struct SemiDomSet {
  std::vector<int> d1, d2;
  std::vector<int> excluded_cycle;
  int u = -1;
  int k = 0;
  std::vector<int> all() const;
};
SemiDomSet semi_kcds(const MopGraph& g, const GluedDecomposition& dec, int u);

}  // namespace mop
