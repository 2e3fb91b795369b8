#include "mop/exceptional.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mop/construct.hpp"
#include "mop/families.hpp"

namespace mop {

namespace {

int other_outer(const MopGraph& g, int v, int not_this) {
  auto [a, b] = g.outer_neighbors(v);
  if (a == not_this) return b;
  if (b == not_this) return a;
  fail(Err::BadParameter, "vertices are not outer neighbors");
}

}  // namespace

int MarkedPair::x_prime() const { return other_outer(g, x, y); }
int MarkedPair::y_prime() const { return other_outer(g, y, x); }

MarkedPair MarkedPair::make(MopGraph g, int x, int y) {
  const int n = g.n();
  if (x < 0 || x >= n || y < 0 || y >= n)
    fail(Err::BadMarkedPair, "marked vertex out of range");
  if (!g.is_outer_edge(x, y)) fail(Err::BadMarkedPair, "marked edge must be an outer edge");
  int ell = n - 1;
  if (ell < 4 || ell % 2 != 0)
    fail(Err::BadMarkedPair, "order must be ell+1 for even ell >= 4");
  int dx = g.degree(x), dy = g.degree(y);
  if (!((dx == 2 && dy == 3) || (dx == 3 && dy == 2)))
    fail(Err::BadMarkedPair, "marked edge degrees must be {2, 3}");
  MarkedPair mp;
  mp.g = std::move(g);
  mp.x = x;
  mp.y = y;
  return mp;
}

std::pair<std::vector<VertexPair>, VertexPair> MarkedPair::marked_canonical() const {
  const int n = g.n();
  std::pair<std::vector<VertexPair>, VertexPair> best{{}, {n, n}};
  bool first = true;
  for (int rot = 0; rot < n; ++rot) {
    for (int refl = 0; refl < 2; ++refl) {
      auto apply = [&](int v) {
        return refl ? (rot - v + 2 * n) % n : (v + rot) % n;
      };
      std::vector<VertexPair> ch;
      ch.reserve(g.chords().size());
      for (auto [a, b] : g.chords()) ch.push_back(norm_pair(apply(a), apply(b)));
      std::sort(ch.begin(), ch.end());
      std::pair<std::vector<VertexPair>, VertexPair> cand{std::move(ch),
                                                          norm_pair(apply(x), apply(y))};
      if (first || cand < best) {
        best = std::move(cand);
        first = false;
      }
    }
  }
  return best;
}

bool in_marked_family(const MarkedPair& mp, int guard) {
  const int ell = mp.ell();
  int xp = mp.x_prime(), yp = mp.y_prime();
  auto del = delete_vertices(mp.g, {mp.x, mp.y});
  Constraints c;
  c.must_intersect.push_back(
      norm_pair(del.new_of_old[xp], del.new_of_old[yp]));
  c.max_size = ell / 2 - 2;
  // For ell = 4 this asks for a dominating set of size 0 meeting an edge,
  // which is impossible, so membership holds for every well-formed pair.
  auto r = min_kcds(del.graph, ell / 2 - 2, c, guard);
  return !r.has_value();
}

std::vector<MarkedPair> enum_marked_family(int ell, int max_order) {
  if (ell < 4 || ell % 2 != 0) fail(Err::BadParameter, "ell must be even and >= 4");
  if (ell + 1 > max_order)
    fail(Err::TooLarge, "enum_marked_family order " + std::to_string(ell + 1) + " over guard");
  std::map<std::pair<std::vector<VertexPair>, VertexPair>, MarkedPair> reps;
  enum_mops_cb(ell + 1, [&](MopGraph&& g) {
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
      int w = (v + 1) % n;
      int dv = g.degree(v), dw = g.degree(w);
      if (!((dv == 2 && dw == 3) || (dv == 3 && dw == 2))) continue;
      auto mp = MarkedPair::make(g, v, w);
      if (!in_marked_family(mp)) continue;
      reps.emplace(mp.marked_canonical(), mp);
    }
  });
  std::vector<MarkedPair> out;
  out.reserve(reps.size());
  for (auto& [key, mp] : reps) out.push_back(std::move(mp));
  return out;
}

PieceView glued_piece(const MopGraph& g, const GluedDecomposition& dec, int i, int rot) {
  const int L = static_cast<int>(dec.cycle.size());
  int j = (i + rot) % L;
  int a = dec.cycle[j], b = dec.cycle[(j + 1) % L];
  PieceView pv;
  if (j + 1 < L) {
    auto sr = split_by_chord(g, norm_pair(a, b));
    pv.g = std::move(sr.side_a);
    pv.to_parent = std::move(sr.map_a);
    pv.x_local = 0;
    pv.y_local = pv.g.n() - 1;
  } else {
    // wrap piece: runs from cycle[L-1] through position 0 to cycle[0]
    auto sr = split_by_chord(g, norm_pair(b, a));
    pv.g = std::move(sr.side_b);
    pv.to_parent = std::move(sr.map_b);
    pv.x_local = 0;
    pv.y_local = pv.g.n() - 1;
  }
  return pv;
}

std::pair<MopGraph, GluedDecomposition> build_glued(
    int k, const std::vector<MarkedPair>& pieces,
    const std::vector<VertexPair>& inner_triangulation) {
  const int cnt = static_cast<int>(pieces.size());
  if (cnt < 3 || cnt % 2 == 0)
    fail(Err::BadPieceCount, "need an odd number of pieces, at least 3");
  const int p = (cnt - 1) / 2;
  if (p > k - 1) fail(Err::BadPieceCount, "piece count exceeds 2(k-1)+1");

  long long total = 0;
  for (const auto& mp : pieces) {
    int ell = mp.ell();
    if (ell < 4 || ell > 2 * k || ell % 2 != 0)
      fail(Err::PieceOutOfRange, "piece arc length outside [4, 2k]");
    total += ell;
  }
  if (total < 4LL * k * p + 2 * p + 2)
    fail(Err::SumTooSmall, "piece lengths sum below 4kp+2p+2");
  for (const auto& mp : pieces)
    if (!in_marked_family(mp)) fail(Err::BadMarkedPair, "piece is not a member of its marked family");

  // Inner cycle triangulation given as piece-index pairs.
  {
    std::vector<VertexPair> tri;
    for (auto [a, b] : inner_triangulation) {
      if (a < 0 || a >= cnt || b < 0 || b >= cnt)
        fail(Err::BadTriangulation, "inner chord index out of range");
      tri.push_back(norm_pair(a, b));
    }
    try {
      MopGraph::validate(cnt, tri);
    } catch (const MopError&) {
      fail(Err::BadTriangulation, "inner chords do not triangulate the cycle");
    }
  }

  const int n = static_cast<int>(total);
  std::vector<int> anchor(cnt + 1, 0);  // global position of cycle vertex i
  for (int i = 0; i < cnt; ++i) anchor[i + 1] = anchor[i] + pieces[i].ell();

  std::vector<VertexPair> chords;
  for (int i = 0; i < cnt; ++i) {
    const MarkedPair& mp = pieces[i];
    const int pn = mp.g.n();
    // Walk the outer cycle of the piece from x to y avoiding the marked
    // edge; position t on the walk maps to global anchor[i] + t.
    int step = (mp.x + 1) % pn == mp.y ? -1 : 1;
    std::vector<int> glob(pn);
    int v = mp.x;
    for (int t = 0; t < pn; ++t) {
      glob[v] = anchor[i] + t;
      v = (v + step + pn) % pn;
    }
    for (auto [a, b] : mp.g.chords())
      chords.push_back(norm_pair(glob[a] % n, glob[b] % n));
    chords.push_back(norm_pair(anchor[i] % n, anchor[i + 1] % n));
  }
  for (auto [a, b] : inner_triangulation)
    chords.push_back(norm_pair(anchor[a], anchor[b]));

  GluedDecomposition dec;
  dec.k = k;
  dec.p = p;
  for (int i = 0; i < cnt; ++i) dec.cycle.push_back(anchor[i]);
  for (const auto& mp : pieces) dec.piece_ell.push_back(mp.ell());
  for (auto [a, b] : inner_triangulation)
    dec.inner_chords.push_back(norm_pair(anchor[a], anchor[b]));
  return {MopGraph::validate(n, std::move(chords)), dec};
}

namespace {

bool check_candidate(const MopGraph& g, int k, const std::vector<int>& cyc,
                     const std::vector<int>& ells, GluedDecomposition& out) {
  const int L = static_cast<int>(cyc.size());
  for (int i = 0; i < L; ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % L])) return false;
  GluedDecomposition dec;
  dec.k = k;
  dec.p = (L - 1) / 2;
  dec.cycle = cyc;
  dec.piece_ell = ells;
  for (int i = 0; i < L; ++i) {
    auto pv = glued_piece(g, dec, i);
    int dx = pv.g.degree(pv.x_local), dy = pv.g.degree(pv.y_local);
    if (!((dx == 2 && dy == 3) || (dx == 3 && dy == 2))) return false;
    if (!in_marked_family(MarkedPair::make(pv.g, pv.x_local, pv.y_local))) return false;
  }
  // Chords between non-consecutive cycle vertices triangulate the inner face.
  for (int i = 0; i < L; ++i)
    for (int j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;
      if (g.has_edge(dec.cycle[i], dec.cycle[j]))
        dec.inner_chords.push_back(norm_pair(dec.cycle[i], dec.cycle[j]));
    }
  out = std::move(dec);
  return true;
}

// Arc profile search with v1 as the smallest cycle vertex, so cycle
// positions stay strictly increasing (every decomposition is found when v1
// reaches its minimal cycle vertex).
bool search_arcs(const MopGraph& g, int k, int v1, int L, int idx,
                 std::vector<int>& cyc, std::vector<int>& ells, int used,
                 GluedDecomposition& out) {
  const int n = g.n();
  if (idx == L) {
    if (used != n) return false;
    return check_candidate(g, k, cyc, ells, out);
  }
  int after = L - idx - 1;
  for (int ell = 4; ell <= 2 * k; ell += 2) {
    int used2 = used + ell;
    if (used2 + 4 * after > n) break;
    if (used2 + 2 * k * after < n) continue;
    if (idx + 1 < L) {
      int next = v1 + used2;
      if (next >= n) break;
      if (!g.has_edge(cyc.back(), next)) continue;
      cyc.push_back(next);
      ells.push_back(ell);
      if (search_arcs(g, k, v1, L, idx + 1, cyc, ells, used2, out)) return true;
      ells.pop_back();
      cyc.pop_back();
    } else {
      if (used2 != n) continue;
      if (!g.has_edge(cyc.back(), v1)) continue;
      ells.push_back(ell);
      if (search_arcs(g, k, v1, L, idx + 1, cyc, ells, used2, out)) return true;
      ells.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<GluedDecomposition> detect_exceptional(const MopGraph& g, int k) {
  if (k < 2) return std::nullopt;
  const int n = g.n();
  if (n % 2 != 0) return std::nullopt;
  for (int p = 1; p <= k - 1; ++p) {
    if (n < 4 * k * p + 2 * p + 2 || n > 2 * k * (2 * p + 1)) continue;
    const int L = 2 * p + 1;
    for (int v1 = 0; v1 < n; ++v1) {
      std::vector<int> cyc{v1}, ells;
      GluedDecomposition out;
      if (search_arcs(g, k, v1, L, 0, cyc, ells, 0, out)) return out;
    }
  }
  return std::nullopt;
}

// Union of per-piece anchored sets: logical piece i (1-based) contributes a
// set through its y endpoint when i is odd and its x endpoint when i is
// even; `upto` limits how many pieces contribute.
std::vector<int> alternating_piece_set(const MopGraph& g, const GluedDecomposition& dec,
                                    int rot, int upto) {
  const int L = static_cast<int>(dec.cycle.size());
  std::vector<int> acc;
  for (int i = 1; i <= upto; ++i) {
    int slot = (i - 1 + rot) % L;
    auto pv = glued_piece(g, dec, i - 1, rot);
    int ell = dec.piece_ell[slot];
    int anchor_local = (i % 2 == 1) ? pv.y_local : pv.x_local;
    auto piece_set = anchored_set(pv.g, ell / 2, anchor_local).vertices;
    auto lifted = lift_labels(piece_set, pv.to_parent);
    acc.insert(acc.end(), lifted.begin(), lifted.end());
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

DomSet exceptional_kcds(const MopGraph& g, const GluedDecomposition& dec) {
  auto s = alternating_piece_set(g, dec, 0, 2 * dec.p + 1);
  const int n = g.n();
  if (static_cast<int>(s.size()) != n / 2 - dec.p)
    fail(Err::InternalInvariantViolation, "assembled set has unexpected size");
  if (!is_kcds(g, dec.k, s))
    fail(Err::InternalInvariantViolation, "assembled set is not k-component dominating");
  return DomSet{std::move(s), dec.k};
}

std::vector<int> SemiDomSet::all() const {
  std::vector<int> out = d1;
  out.insert(out.end(), d2.begin(), d2.end());
  std::sort(out.begin(), out.end());
  return out;
}

SemiDomSet semi_kcds(const MopGraph& g, const GluedDecomposition& dec, int u) {
  const int L = static_cast<int>(dec.cycle.size());
  for (int cv : dec.cycle)
    if (cv == u) fail(Err::UOnCycle, "anchor lies on the inner cycle");
  // Locate the piece whose arc interior contains u, and rotate the
  // decomposition so that piece becomes the last one.
  int slot = -1;
  const int n = g.n();
  for (int i = 0; i < L; ++i) {
    int a = dec.cycle[i], b = dec.cycle[(i + 1) % L];
    int span = (b - a + n) % n;
    int off = (u - a + n) % n;
    if (off > 0 && off < span) {
      slot = i;
      break;
    }
  }
  if (slot < 0) fail(Err::InternalInvariantViolation, "anchor not inside any piece");
  int rot = (slot + 1) % L;  // logical piece 2p+1 sits at this slot

  auto pv = glued_piece(g, dec, L - 1, rot);
  int ell = dec.piece_ell[slot];
  auto del = delete_vertices(pv.g, {pv.x_local, pv.y_local});
  int u_local = -1;
  for (int t = 0; t < del.graph.n(); ++t)
    if (pv.to_parent[del.to_parent[t]] == u) u_local = t;
  if (u_local < 0) fail(Err::InternalInvariantViolation, "anchor lost in piece");

  SemiDomSet s;
  s.u = u;
  s.k = dec.k;
  auto d1_local = anchored_set(del.graph, ell / 2 - 1, u_local).vertices;
  s.d1 = lift_labels(lift_labels(d1_local, del.to_parent), pv.to_parent);
  s.d2 = alternating_piece_set(g, dec, rot, 2 * dec.p);

  // Contract checks.
  auto all = s.all();
  if (static_cast<int>(all.size()) != static_cast<int>(s.d1.size() + s.d2.size()))
    fail(Err::InternalInvariantViolation, "semi set parts overlap");
  if (static_cast<int>(all.size()) > n / 2 - (dec.p + 1))
    fail(Err::InternalInvariantViolation, "semi set too large");
  if (!is_dominating(g, all))
    fail(Err::InternalInvariantViolation, "semi set not dominating");
  auto comps1 = induced_components(g, s.d1);
  int min_ell = *std::min_element(dec.piece_ell.begin(), dec.piece_ell.end());
  if (comps1.size() != 1 ||
      static_cast<int>(comps1[0].size()) < min_ell / 2 - 1 ||
      !std::binary_search(s.d1.begin(), s.d1.end(), u))
    fail(Err::InternalInvariantViolation, "small component malformed");
  for (const auto& c : induced_components(g, s.d2))
    if (static_cast<int>(c.size()) < dec.k)
      fail(Err::InternalInvariantViolation, "large part has a small component");
  for (int w : g.neighbors(u)) {
    bool on_cycle = std::find(dec.cycle.begin(), dec.cycle.end(), w) != dec.cycle.end();
    if (!on_cycle) continue;
    if (std::binary_search(all.begin(), all.end(), w))
      fail(Err::InternalInvariantViolation, "cycle neighbor of the anchor was used");
    s.excluded_cycle.push_back(w);
  }
  std::sort(s.excluded_cycle.begin(), s.excluded_cycle.end());
  return s;
}

}  // namespace mop
