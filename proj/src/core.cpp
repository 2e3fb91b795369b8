#include "mop/core.hpp"

#include <algorithm>
#include <numeric>

namespace mop {

const char* err_name(Err e) {
  switch (e) {
    case Err::WrongChordCount: return "WrongChordCount";
    case Err::CrossingChords: return "CrossingChords";
    case Err::DuplicateChord: return "DuplicateChord";
    case Err::DegenerateChord: return "DegenerateChord";
    case Err::NotAChord: return "NotAChord";
    case Err::NotOuterEdge: return "NotOuterEdge";
    case Err::TooSmall: return "TooSmall";
    case Err::ResultNotMop: return "ResultNotMop";
    case Err::NoTriangleOnSide: return "NoTriangleOnSide";
    case Err::TooLarge: return "TooLarge";
    case Err::Infeasible: return "Infeasible";
    case Err::WrongOrder: return "WrongOrder";
    case Err::DegreeTooSmall: return "DegreeTooSmall";
    case Err::IsExceptional: return "IsExceptional";
    case Err::OrderTooSmall: return "OrderTooSmall";
    case Err::UOnCycle: return "UOnCycle";
    case Err::BadPieceCount: return "BadPieceCount";
    case Err::SumTooSmall: return "SumTooSmall";
    case Err::PieceOutOfRange: return "PieceOutOfRange";
    case Err::BadTriangulation: return "BadTriangulation";
    case Err::BadMarkedPair: return "BadMarkedPair";
    case Err::BadParameter: return "BadParameter";
    case Err::ParseError: return "ParseError";
    case Err::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

MopError::MopError(Err code, const std::string& what)
    : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

void fail(Err code, const std::string& what) { throw MopError(code, what); }

VertexPair norm_pair(int a, int b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

MopGraph MopGraph::validate(int n, std::vector<VertexPair> chords) {
  if (n < 3) fail(Err::TooSmall, "order must be at least 3, got " + std::to_string(n));
  for (auto& c : chords) {
    if (c.first < 0 || c.first >= n || c.second < 0 || c.second >= n)
      fail(Err::BadParameter, "chord endpoint out of range");
    c = norm_pair(c.first, c.second);
    if (c.first == c.second) fail(Err::DegenerateChord, "loop supplied");
    bool outer = (c.second - c.first == 1) || (c.first == 0 && c.second == n - 1);
    if (outer) fail(Err::DegenerateChord, "outer edge supplied as chord");
  }
  std::sort(chords.begin(), chords.end());
  if (std::adjacent_find(chords.begin(), chords.end()) != chords.end())
    fail(Err::DuplicateChord, "duplicate chord");
  if (static_cast<int>(chords.size()) != n - 3)
    fail(Err::WrongChordCount, "expected " + std::to_string(n - 3) + " chords, got " +
                                   std::to_string(chords.size()));
  for (size_t i = 0; i < chords.size(); ++i) {
    for (size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if (c > a && c < b && d > b) fail(Err::CrossingChords, "crossing chords");
      if (a > c && a < d && b > d) fail(Err::CrossingChords, "crossing chords");
    }
  }
  MopGraph g;
  g.n_ = n;
  g.chords_ = std::move(chords);
  g.adj_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    g.adj_[v].push_back((v + 1) % n);
    g.adj_[v].push_back((v + n - 1) % n);
  }
  for (auto [a, b] : g.chords_) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  return g;
}

VertexPair MopGraph::outer_neighbors(int v) const {
  return {(v + n_ - 1) % n_, (v + 1) % n_};
}

bool MopGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

bool MopGraph::is_outer_edge(int a, int b) const {
  auto [lo, hi] = norm_pair(a, b);
  return (hi - lo == 1) || (lo == 0 && hi == n_ - 1);
}

bool MopGraph::is_chord(int a, int b) const {
  return has_edge(a, b) && !is_outer_edge(a, b);
}

int MopGraph::apex_arc(int a, int b, bool low_arc) const {
  if (!has_edge(a, b)) fail(Err::BadParameter, "apex of a non-edge");
  auto [lo, hi] = norm_pair(a, b);
  if (low_arc) {
    for (int c = lo + 1; c < hi; ++c)
      if (has_edge(c, lo) && has_edge(c, hi)) return c;
  } else {
    for (int c = (hi + 1) % n_; c != lo; c = (c + 1) % n_)
      if (has_edge(c, lo) && has_edge(c, hi)) return c;
  }
  fail(Err::NoTriangleOnSide, "no triangle on the requested side");
}

int MopGraph::apex_toward(int a, int b, int side_vertex) const {
  auto [lo, hi] = norm_pair(a, b);
  if (side_vertex == lo || side_vertex == hi)
    fail(Err::BadParameter, "side vertex coincides with an endpoint");
  bool low = side_vertex > lo && side_vertex < hi;
  return apex_arc(a, b, low);
}

int MopGraph::apex_of_outer(int a, int b) const {
  if (!is_outer_edge(a, b) || !has_edge(a, b))
    fail(Err::BadParameter, "not an outer edge");
  auto [lo, hi] = norm_pair(a, b);
  bool wrap = (lo == 0 && hi == n_ - 1);
  return apex_arc(a, b, wrap);
}

namespace {

std::vector<VertexPair> map_chords(const std::vector<VertexPair>& chords, int n,
                                   int rotation, bool reflected) {
  std::vector<VertexPair> out;
  out.reserve(chords.size());
  for (auto [a, b] : chords) {
    int am = reflected ? (rotation - a % n + 2 * n) % n : (a + rotation) % n;
    int bm = reflected ? (rotation - b % n + 2 * n) % n : (b + rotation) % n;
    out.push_back(norm_pair(am, bm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MopGraph MopGraph::relabeled(int rotation, bool reflected) const {
  return MopGraph::validate(n_, map_chords(chords_, n_, rotation, reflected));
}

std::vector<VertexPair> MopGraph::canonical_form() const {
  std::vector<VertexPair> best = chords_;
  for (int rot = 0; rot < n_; ++rot) {
    for (int refl = 0; refl < 2; ++refl) {
      auto cand = map_chords(chords_, n_, rot, refl == 1);
      if (cand < best) best = std::move(cand);
    }
  }
  return best;
}

SplitResult split_by_chord(const MopGraph& g, VertexPair chord) {
  auto [a, b] = norm_pair(chord.first, chord.second);
  if (!g.is_chord(a, b)) fail(Err::NotAChord, "split requires a chord of the graph");
  const int n = g.n();
  SplitResult r;
  r.m_a = b - a;
  r.m_b = n - (b - a);

  std::vector<int> from_a(n, -1), from_b(n, -1);
  r.map_a.resize(r.m_a + 1);
  for (int i = 0; i <= r.m_a; ++i) {
    r.map_a[i] = a + i;
    from_a[a + i] = i;
  }
  r.map_b.resize(r.m_b + 1);
  for (int i = 0; i <= r.m_b; ++i) {
    int v = (b + i) % n;
    r.map_b[i] = v;
    from_b[v] = i;
  }

  std::vector<VertexPair> ca, cb;
  for (auto [c, d] : g.chords()) {
    if (c == a && d == b) continue;
    if (from_a[c] >= 0 && from_a[d] >= 0)
      ca.push_back(norm_pair(from_a[c], from_a[d]));
    else
      cb.push_back(norm_pair(from_b[c], from_b[d]));
  }
  r.side_a = MopGraph::validate(r.m_a + 1, std::move(ca));
  r.side_b = MopGraph::validate(r.m_b + 1, std::move(cb));
  return r;
}

Contraction contract_outer_edge(const MopGraph& g, VertexPair outer_edge) {
  const int n = g.n();
  int i = outer_edge.first, j = outer_edge.second;
  if ((i + 1) % n == j) {
    // j follows i
  } else if ((j + 1) % n == i) {
    std::swap(i, j);
  } else {
    fail(Err::NotOuterEdge, "contraction requires an outer edge");
  }
  if (n < 4) fail(Err::TooSmall, "cannot contract a triangle");

  Contraction r;
  r.new_of_old.resize(n);
  for (int v = 0; v < n; ++v) {
    if (v == j)
      r.new_of_old[v] = -1;  // patched below
    else
      r.new_of_old[v] = v > j ? v - 1 : v;
  }
  r.merged = r.new_of_old[i];
  r.new_of_old[j] = r.merged;

  const int m = n - 1;
  std::vector<VertexPair> chords;
  for (auto [a, b] : g.chords()) {
    int am = r.new_of_old[a], bm = r.new_of_old[b];
    if (am == bm) continue;  // parallel edges collapse
    auto p = norm_pair(am, bm);
    bool outer = (p.second - p.first == 1) || (p.first == 0 && p.second == m - 1);
    if (outer) continue;  // chord absorbed into the new outer cycle
    chords.push_back(p);
  }
  std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  if (static_cast<int>(chords.size()) != m - 3)
    fail(Err::InternalInvariantViolation, "contraction lost the triangulation");
  r.graph = MopGraph::validate(m, std::move(chords));
  return r;
}

Deletion delete_vertices(const MopGraph& g, std::vector<int> drop) {
  const int n = g.n();
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  for (int v : drop)
    if (v < 0 || v >= n) fail(Err::BadParameter, "vertex out of range");
  const int m = n - static_cast<int>(drop.size());
  if (m < 3) fail(Err::ResultNotMop, "fewer than 3 vertices would remain");

  Deletion r;
  r.new_of_old.assign(n, -1);
  r.to_parent.reserve(m);
  {
    size_t di = 0;
    for (int v = 0; v < n; ++v) {
      if (di < drop.size() && drop[di] == v) {
        ++di;
        continue;
      }
      r.new_of_old[v] = static_cast<int>(r.to_parent.size());
      r.to_parent.push_back(v);
    }
  }

  // The kept vertices, in inherited cyclic order, must still form the outer
  // cycle and the kept edges must triangulate it.
  std::vector<VertexPair> chords;
  for (int t = 0; t < m; ++t) {
    int u = r.to_parent[t], w = r.to_parent[(t + 1) % m];
    if (!g.has_edge(u, w)) fail(Err::ResultNotMop, "outer cycle broken by deletion");
  }
  for (auto [a, b] : g.chords()) {
    int am = r.new_of_old[a], bm = r.new_of_old[b];
    if (am < 0 || bm < 0) continue;
    auto p = norm_pair(am, bm);
    bool outer = (p.second - p.first == 1) || (p.first == 0 && p.second == m - 1);
    if (!outer) chords.push_back(p);
  }
  if (static_cast<int>(chords.size()) != m - 3)
    fail(Err::ResultNotMop, "deletion does not leave a triangulation");
  r.graph = MopGraph::validate(m, std::move(chords));
  return r;
}

std::vector<int> lift_labels(const std::vector<int>& s,
                             const std::vector<int>& to_parent) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mop
