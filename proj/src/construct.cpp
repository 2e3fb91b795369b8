#include "mop/construct.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "mop/exceptional.hpp"

namespace mop {

long long floor_bound(int k, long long n) { return (k * n) / (2 * k + 1); }
long long ceil_bound(int k, long long n) { return (k * n + 2 * k) / (2 * k + 1); }
long long dichotomy_bound(int k, long long n, bool exceptional) {
  return exceptional ? ceil_bound(k, n) : floor_bound(k, n);
}

namespace {

bool in_set(const std::vector<int>& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<int> merge_sets(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> with_vertex(std::vector<int> s, int v) {
  if (!in_set(s, v)) {
    s.push_back(v);
    std::sort(s.begin(), s.end());
  }
  return s;
}

int other_outer(const MopGraph& g, int v, int not_this) {
  auto [a, b] = g.outer_neighbors(v);
  if (a == not_this) return b;
  if (b == not_this) return a;
  fail(Err::InternalInvariantViolation, "expected outer neighbors");
}

std::vector<int> checked(const MopGraph& g, int k, std::vector<int> s,
                         long long cap, const char* where) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (static_cast<long long>(s.size()) > cap)
    fail(Err::InternalInvariantViolation,
         std::string(where) + ": set larger than its guaranteed bound");
  if (!is_kcds(g, k, s))
    fail(Err::InternalInvariantViolation,
         std::string(where) + ": constructed set is not k-component dominating");
  return s;
}

// Grows a dominating, connected set to the exact target size by repeatedly
// adding the smallest vertex adjacent to it.
void pad_connected(const MopGraph& g, std::vector<int>& s, int target) {
  std::sort(s.begin(), s.end());
  while (static_cast<int>(s.size()) < target) {
    int pick = -1;
    for (int v = 0; v < g.n() && pick < 0; ++v) {
      if (in_set(s, v)) continue;
      for (int w : g.neighbors(v))
        if (in_set(s, w)) {
          pick = v;
          break;
        }
    }
    if (pick < 0)
      fail(Err::InternalInvariantViolation, "cannot grow set to target size");
    s.push_back(pick);
    std::sort(s.begin(), s.end());
  }
}

// One side of a chord, relabeled, with both direction maps.
struct Sub {
  MopGraph g;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};

Sub make_sub(SplitResult&& sr, bool take_a, int parent_n) {
  Sub s;
  if (take_a) {
    s.g = std::move(sr.side_a);
    s.to_parent = std::move(sr.map_a);
  } else {
    s.g = std::move(sr.side_b);
    s.to_parent = std::move(sr.map_b);
  }
  s.from_parent.assign(parent_n, -1);
  for (int i = 0; i < s.g.n(); ++i) s.from_parent[s.to_parent[i]] = i;
  return s;
}

Sub side_without(const MopGraph& g, int a, int b, int avoid) {
  auto [lo, hi] = norm_pair(a, b);
  auto sr = split_by_chord(g, {lo, hi});
  bool avoid_in_low = avoid > lo && avoid < hi;
  return make_sub(std::move(sr), !avoid_in_low, g.n());
}

// Maps a contracted-graph set back to the labels of the graph the
// contraction was applied to; the merged vertex is dropped and reported.
std::pair<std::vector<int>, bool> uncontract(const std::vector<int>& s,
                                             const Contraction& con, int old_n) {
  std::vector<int> inv(con.graph.n(), -1);
  for (int old = 0; old < old_n; ++old) {
    int nv = con.new_of_old[old];
    if (nv != con.merged) inv[nv] = old;
  }
  std::vector<int> out;
  bool had = false;
  for (int v : s) {
    if (v == con.merged) {
      had = true;
      continue;
    }
    out.push_back(inv[v]);
  }
  std::sort(out.begin(), out.end());
  return {std::move(out), had};
}

bool on_cycle(const std::vector<int>& cycle, int v) {
  return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

// Smallest color class of the unique proper 3-coloring of the
// triangulation; a dominating set of size at most floor(n/3).
std::vector<int> three_color_set(const MopGraph& g) {
  const int n = g.n();
  std::vector<int> col(n, -1);
  col[0] = 0;
  col[n - 1] = 1;
  // Resolve apexes inward from the outer wrap edge.
  std::vector<VertexPair> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (b - a < 2) continue;
    int c = g.apex_arc(a, b, /*low_arc=*/true);
    col[c] = 3 - col[a] - col[b];
    stack.push_back({a, c});
    stack.push_back({c, b});
  }
  std::vector<std::vector<int>> cls(3);
  for (int v = 0; v < n; ++v) cls[col[v]].push_back(v);
  size_t best = 0;
  for (size_t i = 1; i < 3; ++i)
    if (cls[i].size() < cls[best].size()) best = i;
  return cls[best];
}

// Witness that a marked pair fails its family's deletion condition: a set
// of order at most ell/2-2 in g - {x, y} meeting x'y', in g's labels.
std::vector<int> marked_family_refutation(const MarkedPair& mp) {
  auto del = delete_vertices(mp.g, {mp.x, mp.y});
  Constraints c;
  c.must_intersect.push_back(
      norm_pair(del.new_of_old[mp.x_prime()], del.new_of_old[mp.y_prime()]));
  c.max_size = mp.ell() / 2 - 2;
  auto r = min_kcds(del.graph, mp.ell() / 2 - 2, c);
  if (!r)
    fail(Err::InternalInvariantViolation, "expected a family refutation witness");
  return lift_labels(r->vertices, del.to_parent);
}

}  // namespace

ChordChoice shermer_chord(const MopGraph& g, int s) {
  if (s < 2) fail(Err::TooSmall, "shermer_chord needs s >= 2");
  if (g.n() < 2 * s) fail(Err::TooSmall, "shermer_chord needs n >= 2s");
  const int n = g.n();
  std::optional<ChordChoice> best;
  auto consider = [&](VertexPair chord, int m, bool low) {
    if (m < s || m > 2 * s - 2) return;
    ChordChoice cand{chord, m, low};
    if (!best || std::tuple(cand.m, cand.chord, !cand.low_side) <
                     std::tuple(best->m, best->chord, !best->low_side))
      best = cand;
  };
  for (auto ch : g.chords()) {
    consider(ch, ch.second - ch.first, true);
    consider(ch, n - (ch.second - ch.first), false);
  }
  if (!best)
    fail(Err::InternalInvariantViolation, "no chord side with m in [s, 2s-2]");
  return *best;
}

DomSet odd_order_set(const MopGraph& g) {
  const int n = g.n();
  if (n < 5 || n % 2 == 0) fail(Err::WrongOrder, "needs odd order at least 5");
  const int level = (n - 3) / 2;
  if (n == 5) {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 4)
        return DomSet{checked(g, level, {v}, level, "order-5 base"), level};
    fail(Err::InternalInvariantViolation, "order-5 graph without universal vertex");
  }
  int x = -1;
  for (int v = 0; v < n && x < 0; ++v)
    if (g.degree(v) == 2) x = v;
  if (x < 0) fail(Err::InternalInvariantViolation, "no degree-2 vertex");
  auto [u, v] = g.outer_neighbors(x);
  if (u > v) std::swap(u, v);

  auto del = delete_vertices(g, {x});
  auto con =
      contract_outer_edge(del.graph, {del.new_of_old[u], del.new_of_old[v]});
  auto inner = odd_order_set(con.graph);
  auto [lifted_del, had] = uncontract(inner.vertices, con, del.graph.n());
  auto s = lift_labels(lifted_del, del.to_parent);
  if (had) {
    s = with_vertex(std::move(s), u);
    s = with_vertex(std::move(s), v);
  } else {
    bool u_ok = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                            [&](int w) { return in_set(s, w); });
    s = with_vertex(std::move(s), u_ok ? u : v);
  }
  if (static_cast<int>(s.size()) != level)
    fail(Err::InternalInvariantViolation, "lifted set has wrong size");
  return DomSet{checked(g, level, std::move(s), level, "ear contraction"), level};
}

DomSet anchored_set(const MopGraph& g, int k, int u) {
  const int n = g.n();
  if (k < 1 || n != 2 * k + 1) fail(Err::WrongOrder, "needs order 2k+1");
  if (u < 0 || u >= n) fail(Err::BadParameter, "anchor out of range");
  std::vector<int> s;
  if (k == 1) {
    s = {u};
  } else {
    s = odd_order_set(g).vertices;
    if (!in_set(s, u)) {
      s = with_vertex(std::move(s), u);
    } else {
      for (int w = 0; w < n; ++w)
        if (!in_set(s, w)) {
          s = with_vertex(std::move(s), w);
          break;
        }
    }
  }
  s = checked(g, k, std::move(s), k, "anchored order-2k+1 set");
  if (static_cast<int>(s.size()) != k || !in_set(s, u))
    fail(Err::InternalInvariantViolation, "anchored set malformed");
  return DomSet{std::move(s), k};
}

DomSet edge_meeting_set(const MopGraph& g, int k, VertexPair xy) {
  const int n = g.n();
  if (k < 1 || n != 2 * k + 2) fail(Err::WrongOrder, "needs order 2k+2");
  int x = xy.first, y = xy.second;
  if (!g.is_outer_edge(x, y))
    fail(Err::NotOuterEdge, "edge to intersect must be an outer edge");
  std::vector<int> s;
  if (k == 1) {
    s = {g.degree(x) == 3 ? x : y};
  } else {
    auto con = contract_outer_edge(g, xy);
    auto inner = odd_order_set(con.graph);
    auto [lifted, had] = uncontract(inner.vertices, con, n);
    s = std::move(lifted);
    if (had) {
      s = with_vertex(std::move(s), x);
      s = with_vertex(std::move(s), y);
    } else {
      bool x_ok = std::any_of(g.neighbors(x).begin(), g.neighbors(x).end(),
                              [&](int w) { return in_set(s, w); });
      s = with_vertex(std::move(s), x_ok ? x : y);
    }
  }
  s = checked(g, k, std::move(s), k, "edge-meeting order-2k+2 set");
  if (static_cast<int>(s.size()) != k || (!in_set(s, x) && !in_set(s, y)))
    fail(Err::InternalInvariantViolation, "edge-meeting set malformed");
  return DomSet{std::move(s), k};
}

DomSet pair_anchored_set(const MopGraph& g, int k, int x, int y) {
  const int n = g.n();
  if (k < 1 || n != 2 * k + 1) fail(Err::WrongOrder, "needs order 2k+1");
  if (!g.is_outer_edge(x, y)) fail(Err::NotOuterEdge, "xy must be an outer edge");
  if (g.degree(x) < 3 || g.degree(y) < 3)
    fail(Err::DegreeTooSmall, "both endpoints need degree at least 3");
  int z = g.apex_of_outer(x, y);
  Sub gx = side_without(g, y, z, x);
  Sub gy = side_without(g, x, z, y);
  const int lx = gx.g.n() - 1, ly = gy.g.n() - 1;
  std::vector<int> s;
  if (lx % 2 == 0) {
    auto dx = anchored_set(gx.g, lx / 2, gx.from_parent[y]).vertices;
    auto dy = anchored_set(gy.g, ly / 2, gy.from_parent[x]).vertices;
    auto dxp = lift_labels(dx, gx.to_parent);
    auto dyp = lift_labels(dy, gy.to_parent);
    s = merge_sets({&dxp, &dyp});
  } else {
    auto dx = edge_meeting_set(gx.g, (lx - 1) / 2,
                        norm_pair(gx.from_parent[y], gx.from_parent[z]))
                  .vertices;
    auto dy = edge_meeting_set(gy.g, (ly - 1) / 2,
                        norm_pair(gy.from_parent[x], gy.from_parent[z]))
                  .vertices;
    auto dxp = lift_labels(dx, gx.to_parent);
    auto dyp = lift_labels(dy, gy.to_parent);
    s = merge_sets({&dxp, &dyp});
    s = with_vertex(std::move(s), x);
    s = with_vertex(std::move(s), y);
  }
  pad_connected(g, s, k);
  s = checked(g, k, std::move(s), k, "double-anchored set");
  if (static_cast<int>(s.size()) != k || !in_set(s, x) || !in_set(s, y))
    fail(Err::InternalInvariantViolation, "double-anchored set malformed");
  return DomSet{std::move(s), k};
}

DomSet even_anchored_set(const MopGraph& g, int k, int x) {
  const int n = g.n();
  if (k < 1 || n != 2 * k + 2) fail(Err::WrongOrder, "needs order 2k+2");
  if (g.degree(x) < 3) fail(Err::DegreeTooSmall, "anchor needs degree at least 3");
  std::vector<int> s;
  if (k == 1) {
    s = {x};
  } else {
    int y = (x + 1) % n;
    if (g.degree(y) == 2) {
      auto del = delete_vertices(g, {y});
      auto inner = anchored_set(del.graph, k, del.new_of_old[x]).vertices;
      s = lift_labels(inner, del.to_parent);
    } else {
      int z = g.apex_of_outer(x, y);
      Sub gx = side_without(g, y, z, x);
      Sub gy = side_without(g, x, z, y);
      const int lx = gx.g.n() - 1, ly = gy.g.n() - 1;
      if (lx % 2 == 1) {
        auto dy = anchored_set(gy.g, ly / 2, gy.from_parent[x]).vertices;
        auto dx = edge_meeting_set(gx.g, (lx - 1) / 2,
                            norm_pair(gx.from_parent[y], gx.from_parent[z]))
                      .vertices;
        auto dxp = lift_labels(dx, gx.to_parent);
        auto dyp = lift_labels(dy, gy.to_parent);
        s = merge_sets({&dxp, &dyp});
      } else {
        auto dy = edge_meeting_set(gy.g, (ly - 1) / 2,
                            norm_pair(gy.from_parent[x], gy.from_parent[z]))
                      .vertices;
        auto dx = anchored_set(gx.g, lx / 2, gx.from_parent[z]).vertices;
        auto dxp = lift_labels(dx, gx.to_parent);
        auto dyp = lift_labels(dy, gy.to_parent);
        s = merge_sets({&dxp, &dyp});
        s = with_vertex(std::move(s), x);
      }
      pad_connected(g, s, k);
    }
  }
  s = checked(g, k, std::move(s), k, "anchored order-2k+2 set");
  if (static_cast<int>(s.size()) != k || !in_set(s, x))
    fail(Err::InternalInvariantViolation, "anchored order-2k+2 set malformed");
  return DomSet{std::move(s), k};
}

DomSet small_order_set(const MopGraph& g, int k) {
  const int n = g.n();
  if (k < 1 || n < 2 * k + 1 || n > 4 * k + 3)
    fail(Err::WrongOrder, "needs 2k+1 <= n <= 4k+3");
  std::vector<int> s;
  if (n == 2 * k + 1) {
    s = anchored_set(g, k, 0).vertices;
  } else if (n % 2 == 0) {
    s = edge_meeting_set(g, (n - 2) / 2, {0, 1}).vertices;
  } else {
    s = odd_order_set(g).vertices;
  }
  s = checked(g, k, std::move(s), floor_bound(k, n), "small-order construction");
  return DomSet{std::move(s), k};
}

LowDegreePattern low_degree_pattern(const MopGraph& g) {
  const int n = g.n();
  if (n < 7) fail(Err::WrongOrder, "pattern search needs n >= 7");
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != 2) continue;
    auto [a, b] = g.outer_neighbors(u);
    int nb[2] = {std::min(a, b), std::max(a, b)};
    for (int x : nb) {
      for (int v : g.neighbors(x)) {
        if (v == u || g.degree(v) != 2 || g.has_edge(u, v)) continue;
        LowDegreePattern p;
        p.kind = LowDegreePattern::distance2;
        p.u = u;
        p.v = v;
        p.x = x;
        p.y = other_outer(g, u, x);
        p.z = other_outer(g, v, x);
        return p;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != 2) continue;
    auto [a, b] = g.outer_neighbors(u);
    int nb[2] = {std::min(a, b), std::max(a, b)};
    for (int v : nb) {
      if (g.degree(v) != 3) continue;
      LowDegreePattern p;
      p.kind = LowDegreePattern::adjacent23;
      p.u = u;
      p.v = v;
      p.x = other_outer(g, u, v);
      for (int w : g.neighbors(v))
        if (w != u && w != p.x) p.y = w;
      p.z = -1;
      return p;
    }
  }
  fail(Err::InternalInvariantViolation, "no low-degree pattern found");
}

namespace {

struct ApexSplit {
  int x, y, z;
  Sub gx, gy, gz;
  int lx, ly, lz;
};

// Splits along the designated chord: gz is the side away from the chosen
// m-side, z the apex of xy inside the m-side, gx/gy the z-sides.
ApexSplit apex_split(const MopGraph& g, const ChordChoice& sc) {
  ApexSplit a;
  a.x = sc.chord.first;
  a.y = sc.chord.second;
  auto sr = split_by_chord(g, sc.chord);
  bool m_is_a = sr.m_a == sc.m;
  Sub gxy = make_sub(std::move(sr), m_is_a, g.n());
  {
    auto sr2 = split_by_chord(g, sc.chord);
    a.gz = make_sub(std::move(sr2), !m_is_a, g.n());
  }
  int probe = -1;
  for (int i = 0; i < gxy.g.n() && probe < 0; ++i) {
    int pv = gxy.to_parent[i];
    if (pv != a.x && pv != a.y) probe = pv;
  }
  a.z = g.apex_toward(a.x, a.y, probe);
  a.gx = side_without(g, a.y, a.z, a.x);
  a.gy = side_without(g, a.x, a.z, a.y);
  a.lx = a.gx.g.n() - 1;
  a.ly = a.gy.g.n() - 1;
  a.lz = a.gz.g.n() - 1;
  return a;
}

std::vector<int> anchored_lift(const Sub& side, int level, int parent_anchor) {
  return lift_labels(anchored_set(side.g, level, side.from_parent[parent_anchor]).vertices,
                     side.to_parent);
}

std::vector<int> edge_lift(const Sub& side, int level, int pa, int pb) {
  return lift_labels(
      edge_meeting_set(side.g, level, norm_pair(side.from_parent[pa], side.from_parent[pb]))
          .vertices,
      side.to_parent);
}

std::vector<int> double_anchor_lift(const Sub& side, int level, int pa, int pb) {
  return lift_labels(
      pair_anchored_set(side.g, level, side.from_parent[pa], side.from_parent[pb]).vertices,
      side.to_parent);
}

// 4(iv) applied after removing a degree-2 marked endpoint.
std::vector<int> reduced_anchor_lift(const Sub& side, int level, int drop_parent,
                                     int anchor_parent) {
  auto del = delete_vertices(side.g, {side.from_parent[drop_parent]});
  auto inner =
      even_anchored_set(del.graph, level, del.new_of_old[side.from_parent[anchor_parent]])
          .vertices;
  return lift_labels(lift_labels(inner, del.to_parent), side.to_parent);
}

}  // namespace

DomSet mid_order_construct(const MopGraph& g, int k) {
  const int n = g.n();
  if (k < 2 || n < 4 * k + 4 || n > 6 * k || (n - 4 * k) % 2 != 0)
    fail(Err::WrongOrder, "needs n = 4k+2l with 2 <= l <= k");
  const int l = (n - 4 * k) / 2;
  const long long cap = 2 * k + l - 2;

  auto sc = shermer_chord(g, 2 * k + 2);
  if (sc.m == 2 * k + 2) {
    auto sr = split_by_chord(g, sc.chord);
    bool m_is_a = sr.m_a == sc.m;
    Sub gxy = make_sub(std::move(sr), m_is_a, n);
    auto sr2 = split_by_chord(g, sc.chord);
    Sub gz = make_sub(std::move(sr2), !m_is_a, n);
    auto dxy = lift_labels(odd_order_set(gxy.g).vertices, gxy.to_parent);
    auto dz = lift_labels(small_order_set(gz.g, k).vertices, gz.to_parent);
    return DomSet{checked(g, k, merge_sets({&dxy, &dz}), cap, "short-side split"), k};
  }

  ApexSplit a = apex_split(g, sc);
  const int x = a.x, y = a.y, z = a.z;
  const int lx = a.lx, ly = a.ly, lz = a.lz;
  if (lx < 2 || ly < 2)
    fail(Err::InternalInvariantViolation, "minimal chord left a trivial side");

  if (lx % 2 == 1 && ly % 2 == 1) {
    auto dx = edge_lift(a.gx, (lx - 1) / 2, y, z);
    auto dy = edge_lift(a.gy, (ly - 1) / 2, x, z);
    std::vector<int> dz;
    if (in_set(dx, z) && in_set(dy, z))
      dz = anchored_lift(a.gz, lz / 2, x);
    else if (in_set(dy, x))
      dz = anchored_lift(a.gz, lz / 2, x);
    else
      dz = anchored_lift(a.gz, lz / 2, y);
    return DomSet{checked(g, k, merge_sets({&dx, &dy, &dz}), cap, "odd-odd case"), k};
  }

  if (lx % 2 != ly % 2) {
    // normalize: lx odd, ly even
    ApexSplit b = a;
    int bx = x, by = y;
    if (lx % 2 == 0) {
      std::swap(b.gx, b.gy);
      std::swap(b.lx, b.ly);
      std::swap(bx, by);
    }
    auto dx = edge_lift(b.gx, (b.lx - 1) / 2, by, z);
    std::vector<int> dy;
    if (in_set(dx, z))
      dy = anchored_lift(b.gy, b.ly / 2, z);
    else
      dy = anchored_lift(b.gy, b.ly / 2, bx);
    auto dz = edge_lift(b.gz, (b.lz - 1) / 2, bx, by);
    return DomSet{checked(g, k, merge_sets({&dx, &dy, &dz}), cap, "odd-even case"), k};
  }

  // both even
  if (!(lx >= 4 && lx <= 2 * k && ly >= 4 && ly <= 2 * k && lz >= 4 && lz % 2 == 0))
    fail(Err::InternalInvariantViolation, "even-even side bounds violated");

  struct SideRole {
    const Sub* side;
    int len;
    int ea, eb;  // marked edge endpoints in parent labels
  };
  SideRole roles[3] = {{&a.gx, lx, y, z}, {&a.gy, ly, x, z}, {&a.gz, lz, x, y}};

  // Degree analysis per side: a 4(iii)/4(iv) construction settles the graph
  // unless every marked edge has degree pattern {2, 3}.
  for (int which = 0; which < 3; ++which) {
    const SideRole& r = roles[which];
    int da = r.side->g.degree(r.side->from_parent[r.ea]);
    int db = r.side->g.degree(r.side->from_parent[r.eb]);
    std::vector<int> dmain;
    if (da >= 3 && db >= 3)
      dmain = double_anchor_lift(*r.side, r.len / 2, r.ea, r.eb);
    else if (da == 2 && db >= 4)
      dmain = reduced_anchor_lift(*r.side, r.len / 2 - 1, r.ea, r.eb);
    else if (db == 2 && da >= 4)
      dmain = reduced_anchor_lift(*r.side, r.len / 2 - 1, r.eb, r.ea);
    else
      continue;
    std::vector<int> o1, o2;
    if (which == 0) {
      o1 = anchored_lift(a.gy, ly / 2, z);
      o2 = anchored_lift(a.gz, lz / 2, y);
    } else if (which == 1) {
      o1 = anchored_lift(a.gx, lx / 2, z);
      o2 = anchored_lift(a.gz, lz / 2, x);
    } else {
      o1 = anchored_lift(a.gx, lx / 2, y);
      o2 = anchored_lift(a.gy, ly / 2, x);
    }
    return DomSet{
        checked(g, k, merge_sets({&dmain, &o1, &o2}), cap, "high-degree case"), k};
  }

  if (lz >= 2 * k + 2) {
    auto dx = anchored_lift(a.gx, lx / 2, z);
    auto dy = anchored_lift(a.gy, ly / 2, z);
    auto del = delete_vertices(a.gz.g,
                               {a.gz.from_parent[x], a.gz.from_parent[y]});
    auto inner = anchored_set(del.graph, lz / 2 - 1, 0).vertices;
    auto dz = lift_labels(lift_labels(inner, del.to_parent), a.gz.to_parent);
    return DomSet{checked(g, k, merge_sets({&dx, &dy, &dz}), cap, "long-far-side case"),
                  k};
  }

  for (int which = 0; which < 3; ++which) {
    const SideRole& r = roles[which];
    auto mp = MarkedPair::make(r.side->g, r.side->from_parent[r.ea],
                               r.side->from_parent[r.eb]);
    if (in_marked_family(mp)) continue;
    auto wit = lift_labels(marked_family_refutation(mp), r.side->to_parent);
    std::vector<int> o1, o2;
    if (which == 0) {
      o1 = anchored_lift(a.gy, ly / 2, z);
      o2 = anchored_lift(a.gz, lz / 2, y);
    } else if (which == 1) {
      o1 = anchored_lift(a.gx, lx / 2, z);
      o2 = anchored_lift(a.gz, lz / 2, x);
    } else {
      o1 = anchored_lift(a.gx, lx / 2, y);
      o2 = anchored_lift(a.gy, ly / 2, x);
    }
    return DomSet{
        checked(g, k, merge_sets({&wit, &o1, &o2}), cap, "family refutation case"), k};
  }

  fail(Err::IsExceptional,
       "all three marked sides certify membership in the exceptional family");
}

namespace {

struct Ctx {
  int k = 1;
  std::vector<std::string>* trace = nullptr;
  void tag(const char* t) {
    if (trace) trace->emplace_back(t);
  }
};

std::vector<int> dichotomy_rec(const MopGraph& g, Ctx& c);

// Candidate lifts of a contracted piece-assembled set: the merged vertex can
// expand to nothing, either chord endpoint, or both; the first candidate
// that yields a valid set within the cap wins.
std::optional<std::vector<int>> first_valid(const MopGraph& g, int k,
                                            const std::vector<int>& base,
                                            const std::vector<int>& piece_lift,
                                            int x, int y, long long cap) {
  const std::vector<int> variants[4] = {
      piece_lift, with_vertex(piece_lift, x), with_vertex(piece_lift, y),
      with_vertex(with_vertex(piece_lift, x), y)};
  for (const auto& v : variants) {
    auto s = merge_sets({&base, &v});
    if (static_cast<long long>(s.size()) <= cap && is_kcds(g, k, s)) return s;
  }
  return std::nullopt;
}

std::vector<int> dichotomy_rec(const MopGraph& g, Ctx& c) {
  const int k = c.k;
  const int n = g.n();
  const long long fl = floor_bound(k, n);

  if (n <= 4 * k + 3) {
    c.tag("small-case");
    return small_order_set(g, k).vertices;
  }
  if (auto dec = detect_exceptional(g, k)) {
    c.tag("exceptional");
    return exceptional_kcds(g, *dec).vertices;
  }
  if (k == 1) {
    c.tag("three-coloring");
    return checked(g, 1, three_color_set(g), fl, "three-coloring");
  }

  int rem = n % (2 * k + 1);
  bool residue_even_small = rem % 2 == 0 && rem >= 2 && rem <= 2 * k - 2;
  if (!residue_even_small) {
    c.tag("peel");
    auto pat = low_degree_pattern(g);
    auto del = delete_vertices(g, {pat.u, pat.v});
    auto dec = detect_exceptional(del.graph, k);
    if (!dec) {
      auto s = lift_labels(dichotomy_rec(del.graph, c), del.to_parent);
      s = with_vertex(std::move(s), pat.x);
      return checked(g, k, std::move(s), fl, "peel recursion");
    }
    if (n % 2 != 0 || n != 6 * k + 2)
      fail(Err::InternalInvariantViolation, "peel fallback order mismatch");
    int xl = del.new_of_old[pat.x];
    if (!on_cycle(dec->cycle, xl)) {
      c.tag("peel-semi-x");
      auto s = lift_labels(semi_kcds(del.graph, *dec, xl).all(), del.to_parent);
      s = with_vertex(std::move(s), pat.u);
      return checked(g, k, std::move(s), fl, "peel semi at x");
    }
    c.tag("peel-semi-y");
    int yl = del.new_of_old[pat.y];
    if (on_cycle(dec->cycle, yl))
      fail(Err::InternalInvariantViolation, "peel: neighbor also on cycle");
    auto semi = semi_kcds(del.graph, *dec, yl);
    auto sa = semi.all();
    if (in_set(sa, xl))
      fail(Err::InternalInvariantViolation, "peel: excluded vertex was used");
    auto s = lift_labels(sa, del.to_parent);
    s = with_vertex(std::move(s), pat.x);
    return checked(g, k, std::move(s), fl, "peel semi at y");
  }

  if (n <= 6 * k + 4) {
    c.tag("mid-order");
    try {
      return checked(g, k, mid_order_construct(g, k).vertices, fl, "medium order");
    } catch (const MopError& e) {
      if (e.code() == Err::IsExceptional)
        fail(Err::InternalInvariantViolation,
             "membership certified although the detector returned none");
      throw;
    }
  }

  auto sc = shermer_chord(g, 2 * k + 2);
  const int x = sc.chord.first, y = sc.chord.second;

  if (sc.m == 2 * k + 2) {
    c.tag("short-side");
    auto sr = split_by_chord(g, sc.chord);
    bool m_is_a = sr.m_a == sc.m;
    Sub gxy = make_sub(std::move(sr), m_is_a, n);
    auto sr2 = split_by_chord(g, sc.chord);
    Sub gz = make_sub(std::move(sr2), !m_is_a, n);
    auto dec = detect_exceptional(gz.g, k);
    if (!dec) {
      auto dxy = lift_labels(odd_order_set(gxy.g).vertices, gxy.to_parent);
      auto dz = lift_labels(dichotomy_rec(gz.g, c), gz.to_parent);
      return checked(g, k, merge_sets({&dxy, &dz}), fl, "short-side recursion");
    }
    c.tag("short-side-semi");
    int anchor = !on_cycle(dec->cycle, gz.from_parent[x]) ? x : y;
    if (on_cycle(dec->cycle, gz.from_parent[anchor]))
      fail(Err::InternalInvariantViolation, "both chord ends on the inner cycle");
    auto semi = semi_kcds(gz.g, *dec, gz.from_parent[anchor]);
    auto dz = lift_labels(semi.all(), gz.to_parent);
    auto dxy = lift_labels(
        anchored_set(gxy.g, k + 1, gxy.from_parent[anchor]).vertices, gxy.to_parent);
    return checked(g, k, merge_sets({&dxy, &dz}), fl, "short-side semi");
  }

  ApexSplit a = apex_split(g, sc);
  if (a.lx < 2 || a.ly < 2)
    fail(Err::InternalInvariantViolation, "minimal chord left a trivial side");
  const int z = a.z;

  if (a.lx % 2 == 1 && a.ly % 2 == 1) {
    auto dx = edge_lift(a.gx, (a.lx - 1) / 2, a.y, z);
    auto dy = edge_lift(a.gy, (a.ly - 1) / 2, a.x, z);
    if (in_set(dx, z) && in_set(dy, z)) {
      c.tag("odd-odd");
      auto dec = detect_exceptional(a.gz.g, k);
      std::vector<int> dz;
      if (!dec) {
        dz = lift_labels(dichotomy_rec(a.gz.g, c), a.gz.to_parent);
      } else {
        c.tag("odd-odd-semi");
        int anchor = !on_cycle(dec->cycle, a.gz.from_parent[a.x]) ? a.x : a.y;
        if (on_cycle(dec->cycle, a.gz.from_parent[anchor]))
          fail(Err::InternalInvariantViolation, "both chord ends on the inner cycle");
        dz = lift_labels(semi_kcds(a.gz.g, *dec, a.gz.from_parent[anchor]).all(),
                         a.gz.to_parent);
      }
      return checked(g, k, merge_sets({&dx, &dy, &dz}), fl, "odd-odd");
    }
    c.tag("odd-odd-peel");
    int cx = a.x, cy = a.y;
    if (in_set(dx, z)) {
      // mirror so that the y role carries the shared vertex
      std::swap(dx, dy);
      std::swap(cx, cy);
    }
    if (!in_set(dx, cy))
      fail(Err::InternalInvariantViolation, "odd-odd subcase anchor bookkeeping");
    int xl = a.gz.from_parent[cx], yl = a.gz.from_parent[cy];
    auto con = contract_outer_edge(a.gz.g, {xl, yl});
    auto dec = detect_exceptional(con.graph, k);
    if (!dec) {
      auto inner = dichotomy_rec(con.graph, c);
      auto [lifted, had] = uncontract(inner, con, a.gz.g.n());
      auto dz = lift_labels(lifted, a.gz.to_parent);
      auto s = merge_sets({&dx, &dy, &dz});
      if (had) s = with_vertex(std::move(s), cx);
      return checked(g, k, std::move(s), fl, "odd-odd subcase recursion");
    }
    if (!on_cycle(dec->cycle, con.merged)) {
      c.tag("odd-odd-peel-semi-merged");
      auto semi = semi_kcds(con.graph, *dec, con.merged);
      auto lifted = uncontract(semi.all(), con, a.gz.g.n()).first;
      auto dz = lift_labels(lifted, a.gz.to_parent);
      auto s = merge_sets({&dx, &dy, &dz});
      s = with_vertex(std::move(s), cx);
      return checked(g, k, std::move(s), fl, "odd-odd subcase semi merged");
    }
    c.tag("odd-odd-peel-semi-next");
    int ypl = con.new_of_old[other_outer(a.gz.g, yl, xl)];
    if (on_cycle(dec->cycle, ypl))
      fail(Err::InternalInvariantViolation, "odd-odd subcase: outer neighbor on cycle");
    auto semi = semi_kcds(con.graph, *dec, ypl);
    auto sa = semi.all();
    if (in_set(sa, con.merged))
      fail(Err::InternalInvariantViolation, "odd-odd subcase: merged vertex not excluded");
    auto lifted = uncontract(sa, con, a.gz.g.n()).first;
    auto dz = lift_labels(lifted, a.gz.to_parent);
    return checked(g, k, merge_sets({&dx, &dy, &dz}), fl, "odd-odd subcase semi next");
  }

  if (a.lx % 2 != a.ly % 2) {
    int cx = a.x, cy = a.y;
    Sub *gx = &a.gx, *gy = &a.gy;
    int lx = a.lx, ly = a.ly;
    if (lx % 2 == 0) {
      std::swap(gx, gy);
      std::swap(lx, ly);
      std::swap(cx, cy);
    }
    auto dx = edge_lift(*gx, (lx - 1) / 2, cy, z);
    if (in_set(dx, z)) {
      c.tag("odd-even");
      auto dy = anchored_lift(*gy, ly / 2, z);
      auto dec = detect_exceptional(a.gz.g, k);
      std::vector<int> dz;
      if (!dec) {
        dz = lift_labels(dichotomy_rec(a.gz.g, c), a.gz.to_parent);
      } else {
        c.tag("odd-even-semi");
        int anchor = !on_cycle(dec->cycle, a.gz.from_parent[cx]) ? cx : cy;
        if (on_cycle(dec->cycle, a.gz.from_parent[anchor]))
          fail(Err::InternalInvariantViolation, "both chord ends on the inner cycle");
        dz = lift_labels(semi_kcds(a.gz.g, *dec, a.gz.from_parent[anchor]).all(),
                         a.gz.to_parent);
      }
      return checked(g, k, merge_sets({&dx, &dy, &dz}), fl, "odd-even");
    }
    c.tag("odd-even-peel");
    if (!in_set(dx, cy))
      fail(Err::InternalInvariantViolation, "odd-even subcase anchor bookkeeping");
    auto dy = anchored_lift(*gy, ly / 2, cx);
    int xl = a.gz.from_parent[cx], yl = a.gz.from_parent[cy];
    int ypl_gz = other_outer(a.gz.g, yl, xl);
    int yp = a.gz.to_parent[ypl_gz];
    auto c1 = contract_outer_edge(a.gz.g, {xl, yl});
    auto c2 = contract_outer_edge(c1.graph, {c1.merged, c1.new_of_old[ypl_gz]});
    const int ustar = c2.merged;
    // compose the two contractions into one old->new map
    Contraction comp;
    comp.graph = c2.graph;
    comp.merged = ustar;
    comp.new_of_old.resize(a.gz.g.n());
    for (int i = 0; i < a.gz.g.n(); ++i)
      comp.new_of_old[i] = c2.new_of_old[c1.new_of_old[i]];
    auto dec = detect_exceptional(comp.graph, k);
    if (!dec) {
      auto inner = dichotomy_rec(comp.graph, c);
      auto [lifted, had] = uncontract(inner, comp, a.gz.g.n());
      auto dz = lift_labels(lifted, a.gz.to_parent);
      auto s = merge_sets({&dx, &dy, &dz});
      if (had) s = with_vertex(std::move(s), yp);
      return checked(g, k, std::move(s), fl, "odd-even subcase recursion");
    }
    if (!on_cycle(dec->cycle, ustar)) {
      c.tag("odd-even-peel-semi-merged");
      auto semi = semi_kcds(comp.graph, *dec, ustar);
      auto lifted = uncontract(semi.all(), comp, a.gz.g.n()).first;
      auto dz = lift_labels(lifted, a.gz.to_parent);
      auto s = merge_sets({&dx, &dy, &dz});
      s = with_vertex(std::move(s), yp);
      return checked(g, k, std::move(s), fl, "odd-even subcase semi merged");
    }
    c.tag("odd-even-peel-semi-next");
    int xpf = comp.new_of_old[other_outer(a.gz.g, xl, yl)];
    if (on_cycle(dec->cycle, xpf))
      fail(Err::InternalInvariantViolation, "odd-even subcase: outer neighbor on cycle");
    auto semi = semi_kcds(comp.graph, *dec, xpf);
    auto sa = semi.all();
    if (in_set(sa, ustar))
      fail(Err::InternalInvariantViolation, "odd-even subcase: merged vertex not excluded");
    auto lifted = uncontract(sa, comp, a.gz.g.n()).first;
    auto dz = lift_labels(lifted, a.gz.to_parent);
    return checked(g, k, merge_sets({&dx, &dy, &dz}), fl, "odd-even subcase semi next");
  }

  // both arcs even
  c.tag("even-even");
  if (!(a.lx >= 4 && a.lx <= 2 * k && a.ly >= 4 && a.ly <= 2 * k && sc.m <= 4 * k))
    fail(Err::InternalInvariantViolation, "even-even side bounds violated");
  int xl = a.gz.from_parent[a.x], yl = a.gz.from_parent[a.y];
  auto con = contract_outer_edge(a.gz.g, {xl, yl});
  auto dec = detect_exceptional(con.graph, k);
  if (!dec) {
    auto inner = dichotomy_rec(con.graph, c);
    auto [lifted, had] = uncontract(inner, con, a.gz.g.n());
    auto dz = lift_labels(lifted, a.gz.to_parent);
    std::vector<int> dx, dy;
    if (had) {
      dx = anchored_lift(a.gx, a.lx / 2, a.y);
      dy = anchored_lift(a.gy, a.ly / 2, a.x);
    } else {
      dx = anchored_lift(a.gx, a.lx / 2, z);
      dy = anchored_lift(a.gy, a.ly / 2, z);
    }
    return checked(g, k, merge_sets({&dx, &dy, &dz}), fl, "even-even recursion");
  }
  if (!on_cycle(dec->cycle, con.merged)) {
    c.tag("even-even-semi");
    auto semi = semi_kcds(con.graph, *dec, con.merged);
    auto lifted = uncontract(semi.all(), con, a.gz.g.n()).first;
    auto dz = lift_labels(lifted, a.gz.to_parent);
    auto dx = anchored_lift(a.gx, a.lx / 2, a.y);
    auto dy = anchored_lift(a.gy, a.ly / 2, a.x);
    return checked(g, k, merge_sets({&dx, &dy, &dz}), fl, "even-even semi");
  }

  // The contraction vertex sits on the inner cycle of the decomposition.
  c.tag("even-even-cycle");
  const int p = dec->p;
  int rot = -1;
  for (size_t i = 0; i < dec->cycle.size(); ++i)
    if (dec->cycle[i] == con.merged) rot = static_cast<int>(i);
  auto assembled = alternating_piece_set(con.graph, *dec, rot, 2 * p + 1);
  auto piece_core = uncontract(assembled, con, a.gz.g.n()).first;
  auto piece_lift = lift_labels(piece_core, a.gz.to_parent);

  auto dxz = anchored_lift(a.gx, a.lx / 2, z);
  auto dyz = anchored_lift(a.gy, a.ly / 2, z);
  auto base = merge_sets({&dxz, &dyz});
  if (auto s = first_valid(g, k, base, piece_lift, a.x, a.y, n / 2 - (p + 1))) {
    if (static_cast<long long>(s->size()) <= fl) {
      c.tag("even-even-cycle-direct");
      return *s;
    }
  }
  if (p == k - 1)
    fail(Err::InternalInvariantViolation, "even-even cycle with maximal p");

  // Degree analysis of the two apex sides; any high-degree pattern yields a
  // set one unit smaller.
  struct SideRole {
    Sub* side;
    int len;
    int ea, eb;  // marked edge: shared chord endpoint and apex
  };
  SideRole roles[2] = {{&a.gy, a.ly, a.x, z}, {&a.gx, a.lx, a.y, z}};
  for (const SideRole& r : roles) {
    int da = r.side->g.degree(r.side->from_parent[r.ea]);
    int db = r.side->g.degree(r.side->from_parent[r.eb]);
    std::vector<int> dmain;
    if (da >= 3 && db >= 3)
      dmain = double_anchor_lift(*r.side, r.len / 2, r.ea, r.eb);
    else if (da == 2 && db >= 4)
      dmain = reduced_anchor_lift(*r.side, r.len / 2 - 1, r.ea, r.eb);
    else if (db == 2 && da >= 4)
      dmain = reduced_anchor_lift(*r.side, r.len / 2 - 1, r.eb, r.ea);
    else
      continue;
    const std::vector<int>& other = (r.side == &a.gy) ? dxz : dyz;
    auto b2 = merge_sets({&dmain, &other});
    if (auto s = first_valid(g, k, b2, piece_lift, a.x, a.y, fl)) {
      c.tag("even-even-cycle-degree");
      return *s;
    }
    fail(Err::InternalInvariantViolation, "even-even degree branch failed");
  }

  for (const SideRole& r : roles) {
    auto mp = MarkedPair::make(r.side->g, r.side->from_parent[r.ea],
                               r.side->from_parent[r.eb]);
    if (in_marked_family(mp)) continue;
    auto wit = lift_labels(marked_family_refutation(mp), r.side->to_parent);
    const std::vector<int>& other = (r.side == &a.gy) ? dxz : dyz;
    auto b2 = merge_sets({&wit, &other});
    if (auto s = first_valid(g, k, b2, piece_lift, a.x, a.y, fl)) {
      c.tag("even-even-cycle-refuted");
      return *s;
    }
    fail(Err::InternalInvariantViolation, "even-even refutation branch failed");
  }

  fail(Err::InternalInvariantViolation,
       "apex sides certify a larger decomposition; detector disagreed");
}

}  // namespace

DomSet dichotomy_construct(const MopGraph& g, int k) {
  std::vector<std::string> trace;
  return dichotomy_construct(g, k, trace);
}

DomSet dichotomy_construct(const MopGraph& g, int k,
                          std::vector<std::string>& trace) {
  if (k < 1) fail(Err::BadParameter, "k must be positive");
  if (g.n() < 2 * k + 1) fail(Err::OrderTooSmall, "needs n >= 2k+1");
  Ctx c;
  c.k = k;
  c.trace = &trace;
  auto s = dichotomy_rec(g, c);
  if (!is_kcds(g, k, s))
    fail(Err::InternalInvariantViolation, "final set is not k-component dominating");
  if (static_cast<long long>(s.size()) > ceil_bound(k, g.n()))
    fail(Err::InternalInvariantViolation, "final set exceeds the dichotomy bound");
  return DomSet{std::move(s), k};
}

}  // namespace mop
