#include "mop/families.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace mop {

MopGraph fan(int n) {
  if (n < 3) fail(Err::BadParameter, "fan needs n >= 3");
  std::vector<VertexPair> chords;
  for (int i = 2; i <= n - 2; ++i) chords.push_back({0, i});
  return MopGraph::validate(n, std::move(chords));
}

MopGraph strip(int m) {
  if (m < 1) fail(Err::BadParameter, "strip needs m >= 1");
  std::vector<VertexPair> chords;
  for (int j = 1; j <= m; ++j) chords.push_back(norm_pair(j, 2 * m + 2 - j));
  for (int j = 0; j + 1 <= m; ++j) chords.push_back(norm_pair(j + 1, 2 * m + 2 - j));
  return MopGraph::validate(2 * m + 3, std::move(chords));
}

MopGraph strip_minus(int m) {
  if (m < 1) fail(Err::BadParameter, "strip_minus needs m >= 1");
  return delete_vertices(strip(m), {m + 1}).graph;
}

namespace {

// Incremental polygon triangulation: a cyclic boundary of node ids plus
// chords on ids.  graft() replaces one boundary edge by a ladder (optionally
// capped with an ear apex) lying outside the old boundary.
struct Builder {
  std::vector<int> boundary;
  std::vector<VertexPair> chords;
  std::deque<VertexPair> sites;  // oriented boundary edges usable for grafting
  int next = 0;

  int fresh() { return next++; }

  size_t edge_pos(VertexPair e) const {
    for (size_t i = 0; i < boundary.size(); ++i)
      if (boundary[i] == e.first && boundary[(i + 1) % boundary.size()] == e.second)
        return i;
    fail(Err::InternalInvariantViolation, "graft site is not a boundary edge");
  }

  // Single branch: ladder of `rungs` rungs rising over the edge, optionally
  // capped with an ear apex.
  void graft(VertexPair e, int rungs, bool cap) {
    size_t pos = edge_pos(e);
    int a = e.first, b = e.second;
    std::vector<int> l(rungs), r(rungs);
    for (int i = 0; i < rungs; ++i) l[i] = fresh();
    int ap = cap ? fresh() : -1;
    for (int i = rungs - 1; i >= 0; --i) r[i] = fresh();

    chords.push_back({a, b});
    if (rungs > 0) {
      chords.push_back({l[0], b});
      for (int i = 0; i < rungs; ++i)
        if (cap || i + 1 < rungs) chords.push_back({l[i], r[i]});
      for (int i = 0; i + 1 < rungs; ++i) chords.push_back({l[i + 1], r[i]});
    }

    std::vector<int> insert;
    insert.insert(insert.end(), l.begin(), l.end());
    if (cap) insert.push_back(ap);
    for (int i = rungs - 1; i >= 0; --i) insert.push_back(r[i]);
    boundary.insert(boundary.begin() + pos + 1, insert.begin(), insert.end());
  }

  // Whole ladder with ear caps at both ends, attached through a cut in the
  // middle of one column, so both of its arms run a full half-ladder away
  // from the junction.  Leaves the opposite column's middle edge on the
  // boundary as a fresh mount site.
  void graft_bridge(VertexPair e, int k) {
    size_t pos = edge_pos(e);
    int a = e.first, b = e.second;
    const int rungs = 2 * k;
    int e0 = fresh();
    std::vector<int> l(rungs), r(rungs);
    for (int i = 0; i < rungs; ++i) l[i] = fresh();
    int et = fresh();
    for (int i = rungs - 1; i >= 0; --i) r[i] = fresh();

    for (int i = 0; i < rungs; ++i) chords.push_back({l[i], r[i]});
    for (int i = 0; i + 1 < rungs; ++i) chords.push_back({l[i + 1], r[i]});
    chords.push_back({a, b});
    chords.push_back({r[k], r[k - 1]});  // the cut column edge survives inside
    chords.push_back({a, r[k]});

    std::vector<int> insert;
    for (int i = k - 1; i >= 0; --i) insert.push_back(r[i]);
    insert.push_back(e0);
    for (int i = 0; i < rungs; ++i) insert.push_back(l[i]);
    insert.push_back(et);
    for (int i = rungs - 1; i >= k; --i) insert.push_back(r[i]);
    boundary.insert(boundary.begin() + pos + 1, insert.begin(), insert.end());

    sites.push_back({l[k - 1], l[k]});
  }

  VertexPair pop_site() {
    if (sites.empty()) fail(Err::InternalInvariantViolation, "no graft site left");
    auto s = sites.front();
    sites.pop_front();
    return s;
  }

  MopGraph finish() const {
    std::vector<int> label(next, -1);
    for (size_t i = 0; i < boundary.size(); ++i) label[boundary[i]] = static_cast<int>(i);
    std::vector<VertexPair> mapped;
    mapped.reserve(chords.size());
    for (auto [a, b] : chords) mapped.push_back(norm_pair(label[a], label[b]));
    return MopGraph::validate(static_cast<int>(boundary.size()), std::move(mapped));
  }
};

// Ladder of `rungs` rungs with optional ear caps at the ends; vertical
// column edges are registered as graft sites.
Builder ladder_core(int rungs, bool bottom_ear, bool top_ear) {
  Builder b;
  int e0 = bottom_ear ? b.fresh() : -1;
  std::vector<int> l(rungs), r(rungs);
  for (int i = 0; i < rungs; ++i) l[i] = b.fresh();
  int et = top_ear ? b.fresh() : -1;
  for (int i = rungs - 1; i >= 0; --i) r[i] = b.fresh();

  if (bottom_ear) b.boundary.push_back(e0);
  for (int i = 0; i < rungs; ++i) b.boundary.push_back(l[i]);
  if (top_ear) b.boundary.push_back(et);
  for (int i = rungs - 1; i >= 0; --i) b.boundary.push_back(r[i]);

  for (int i = 0; i < rungs; ++i) {
    bool outer = (i == 0 && !bottom_ear) || (i == rungs - 1 && !top_ear);
    if (!outer) b.chords.push_back({l[i], r[i]});
  }
  for (int i = 0; i + 1 < rungs; ++i) b.chords.push_back({l[i + 1], r[i]});

  // Graft sites sit as far from the ear caps as the ladder allows: the
  // middle column edges when both ends are capped, the top ones when only
  // the bottom is.
  if (rungs >= 2) {
    int i = top_ear ? (rungs - 1) / 2 : rungs - 2;
    b.sites.push_back({l[i], l[i + 1]});
    b.sites.push_back({r[i + 1], r[i]});
  }
  return b;
}

Builder triangle_core() {
  Builder b;
  b.boundary = {b.fresh(), b.fresh(), b.fresh()};
  b.sites.push_back({b.boundary[1], b.boundary[2]});
  b.sites.push_back({b.boundary[2], b.boundary[0]});
  return b;
}

// s blocks of 2k+1 vertices: a double ladder as the trunk, one k-rung
// branch when the block count is odd, and whole bridged ladders for the
// rest, every mount sitting a half-ladder away from the nearest ear.
Builder ladder_builder(int k, int s) {
  if (k < 1 || s < 1) fail(Err::BadParameter, "ladder family needs k, s >= 1");
  if (k == 1 && s == 1) return triangle_core();
  if (s == 1) return ladder_core(k, /*bottom_ear=*/true, /*top_ear=*/false);
  Builder b = ladder_core(2 * k, true, true);
  int rem = s - 2;
  if (rem % 2 == 1) {
    b.graft(b.pop_site(), k, /*cap=*/true);
    rem -= 1;
  }
  for (; rem > 0; rem -= 2) b.graft_bridge(b.pop_site(), k);
  return b;
}

}  // namespace

MopGraph ladder_graph(int k, int s) {
  auto g = ladder_builder(k, s).finish();
  if (g.n() != s * (2 * k + 1))
    fail(Err::InternalInvariantViolation, "fig5 order mismatch");
  return g;
}

MopGraph ladder_graph_odd(int k, int s, int t) {
  if (t < 1 || t > k) fail(Err::BadParameter, "fig6 needs t in [1, k]");
  Builder b = ladder_builder(k, s);
  b.graft(b.pop_site(), t - 1, /*cap=*/true);
  auto g = b.finish();
  if (g.n() != s * (2 * k + 1) + 2 * t - 1)
    fail(Err::InternalInvariantViolation, "fig6 order mismatch");
  return g;
}

MopGraph ladder_graph_even(int k, int s, int t) {
  if (t < 1 || t > k) fail(Err::BadParameter, "fig6_even needs t in [1, k]");
  Builder b = ladder_builder(k, s);
  b.graft(b.pop_site(), t, /*cap=*/false);
  auto g = b.finish();
  if (g.n() != s * (2 * k + 1) + 2 * t)
    fail(Err::InternalInvariantViolation, "fig6_even order mismatch");
  return g;
}

namespace {

// Worklist of arcs [a..b] still needing an apex; choosing apex c for the
// base edge {a,b} adds chords {a,c}, {c,b} and queues the two sub-arcs.
void enum_arcs(std::vector<VertexPair>& arcs, size_t idx,
               std::vector<VertexPair>& chords, int n,
               const std::function<void(MopGraph&&)>& cb) {
  while (idx < arcs.size() && arcs[idx].second - arcs[idx].first < 2) ++idx;
  if (idx == arcs.size()) {
    cb(MopGraph::validate(n, chords));
    return;
  }
  auto [a, b] = arcs[idx];
  for (int c = a + 1; c < b; ++c) {
    size_t cm = chords.size(), am = arcs.size();
    if (c - a >= 2) chords.push_back({a, c});
    if (b - c >= 2) chords.push_back({c, b});
    arcs.push_back({a, c});
    arcs.push_back({c, b});
    enum_arcs(arcs, idx + 1, chords, n, cb);
    arcs.resize(am);
    chords.resize(cm);
  }
}

}  // namespace

void enum_mops_cb(int n, const std::function<void(MopGraph&&)>& cb) {
  if (n < 3) fail(Err::BadParameter, "enum needs n >= 3");
  std::vector<VertexPair> chords;
  std::vector<VertexPair> arcs{{0, n - 1}};
  enum_arcs(arcs, 0, chords, n, cb);
}

std::vector<MopGraph> enum_mops(int n, bool dedup) {
  std::vector<MopGraph> out;
  if (!dedup) {
    enum_mops_cb(n, [&](MopGraph&& g) { out.push_back(std::move(g)); });
    return out;
  }
  std::set<std::vector<VertexPair>> seen;
  enum_mops_cb(n, [&](MopGraph&& g) { seen.insert(g.canonical_form()); });
  for (const auto& ch : seen) out.push_back(MopGraph::validate(n, ch));
  return out;
}

namespace {

// Node of a growing binary tree; leaves are -1/-1.
struct TreeNode {
  int left = -1, right = -1;
};

// Uniform random binary tree with `leaves` leaves via uniform leaf-edge
// insertion; returns node vector and root index.
std::pair<std::vector<TreeNode>, int> random_binary_tree(int leaves,
                                                         std::mt19937_64& rng) {
  std::vector<TreeNode> nodes;
  nodes.push_back({});  // single leaf
  int root = 0;
  std::vector<int> parent{-1};
  std::vector<int> order{0};  // all node ids, for uniform picks
  for (int q = 2; q <= leaves; ++q) {
    std::uniform_int_distribution<size_t> pick(0, order.size() - 1);
    int at = order[pick(rng)];
    std::uniform_int_distribution<int> side(0, 1);
    bool new_left = side(rng) == 0;
    int leaf = static_cast<int>(nodes.size());
    nodes.push_back({});
    int inner = static_cast<int>(nodes.size());
    nodes.push_back({});
    parent.resize(nodes.size(), -1);
    nodes[inner].left = new_left ? leaf : at;
    nodes[inner].right = new_left ? at : leaf;
    int p = parent[at];
    parent[at] = inner;
    parent[leaf] = inner;
    parent[inner] = p;
    if (p < 0) {
      root = inner;
    } else if (nodes[p].left == at) {
      nodes[p].left = inner;
    } else {
      nodes[p].right = inner;
    }
    order.push_back(leaf);
    order.push_back(inner);
  }
  return {std::move(nodes), root};
}

int leaf_count(const std::vector<TreeNode>& nodes, int v, std::vector<int>& memo) {
  if (memo[v] >= 0) return memo[v];
  if (nodes[v].left < 0) return memo[v] = 1;
  return memo[v] = leaf_count(nodes, nodes[v].left, memo) +
                   leaf_count(nodes, nodes[v].right, memo);
}

void tree_to_chords(const std::vector<TreeNode>& nodes, int v, int a, int b,
                    std::vector<int>& memo, std::vector<VertexPair>& chords) {
  if (nodes[v].left < 0) return;
  int c = a + leaf_count(nodes, nodes[v].left, memo);
  if (c - a >= 2) chords.push_back({a, c});
  if (b - c >= 2) chords.push_back({c, b});
  tree_to_chords(nodes, nodes[v].left, a, c, memo, chords);
  tree_to_chords(nodes, nodes[v].right, c, b, memo, chords);
}

}  // namespace

MopGraph random_mop(int n, uint64_t seed) {
  if (n < 3) fail(Err::BadParameter, "random_mop needs n >= 3");
  std::mt19937_64 rng(seed);
  auto [nodes, root] = random_binary_tree(n - 1, rng);
  std::vector<int> memo(nodes.size(), -1);
  std::vector<VertexPair> chords;
  tree_to_chords(nodes, root, 0, n - 1, memo, chords);
  return MopGraph::validate(n, std::move(chords));
}

}  // namespace mop
