#include "mop/exact.hpp"

#include <algorithm>
#include <cstdint>

#include "mop/families.hpp"
#include "mop/util.hpp"

namespace mop {

bool is_dominating(const MopGraph& g, const std::vector<int>& s) {
  std::vector<char> hit(g.n(), 0);
  for (int v : s) {
    hit[v] = 1;
    for (int w : g.neighbors(v)) hit[w] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<std::vector<int>> induced_components(const MopGraph& g,
                                                 const std::vector<int>& s) {
  std::vector<char> in(g.n(), 0), seen(g.n(), 0);
  for (int v : s) in[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int v : s) {
    if (seen[v]) continue;
    std::vector<int> comp, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_kcds(const MopGraph& g, int k, const std::vector<int>& s) {
  for (int v : s)
    if (v < 0 || v >= g.n()) return false;
  if (!is_dominating(g, s)) return false;
  if (k <= 0) return true;
  for (const auto& comp : induced_components(g, s))
    if (static_cast<int>(comp.size()) < k) return false;
  return true;
}

namespace {

struct Searcher {
  const MopGraph& g;
  int n, k;
  const Constraints& c;
  std::vector<uint32_t> closed;  // closed neighborhoods as bitmasks
  uint32_t full = 0, forbidden_mask = 0, forced_mask = 0;
  int max_cover = 1;
  int target = 0;
  uint32_t best = 0;
  bool found = false;

  explicit Searcher(const MopGraph& gr, int kk, const Constraints& cc)
      : g(gr), n(gr.n()), k(kk), c(cc) {
    closed.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      closed[v] = 1u << v;
      for (int w : g.neighbors(v)) closed[v] |= 1u << w;
      max_cover = std::max(max_cover, g.degree(v) + 1);
    }
    full = n == 32 ? ~0u : (1u << n) - 1;
    for (int v : c.forbidden) forbidden_mask |= 1u << v;
    for (int v : c.must_contain) forced_mask |= 1u << v;
  }

  bool components_ok(uint32_t chosen, bool final_check, int next) const {
    if (k <= 0) return true;
    uint32_t left = chosen;
    uint32_t future = next >= n ? 0 : (full & ~((1u << next) - 1)) & ~forbidden_mask;
    while (left) {
      int v = __builtin_ctz(left);
      uint32_t comp = 1u << v, frontier = comp;
      while (frontier) {
        uint32_t grow = 0;
        uint32_t f = frontier;
        while (f) {
          int u = __builtin_ctz(f);
          f &= f - 1;
          grow |= closed[u] & chosen & ~comp;
        }
        comp |= grow;
        frontier = grow;
      }
      left &= ~comp;
      if (__builtin_popcount(comp) >= k) continue;
      if (final_check) return false;
      // A small component must still be able to grow through a future vertex.
      uint32_t reach = 0;
      uint32_t cc = comp;
      while (cc) {
        int u = __builtin_ctz(cc);
        cc &= cc - 1;
        reach |= closed[u];
      }
      if (!(reach & future)) return false;
    }
    return true;
  }

  bool accept(uint32_t chosen) const {
    uint32_t dom = 0;
    uint32_t cc = chosen;
    while (cc) {
      int u = __builtin_ctz(cc);
      cc &= cc - 1;
      dom |= closed[u];
    }
    if (dom != full) return false;
    for (auto [a, b] : c.must_intersect)
      if (!(chosen & ((1u << a) | (1u << b)))) return false;
    if ((chosen & forced_mask) != forced_mask) return false;
    return components_ok(chosen, true, n);
  }

  bool dfs(int i, int count, uint32_t chosen, uint32_t dominated) {
    if (count == target) {
      if (accept(chosen)) {
        best = chosen;
        found = true;
        return true;
      }
      return false;
    }
    if (i == n) return false;
    int needed = target - count;
    uint32_t future = (full & ~((1u << i) - 1)) & ~forbidden_mask;
    if (__builtin_popcount(forced_mask & ~chosen) > needed) return false;
    uint32_t undom = full & ~dominated;
    if (__builtin_popcount(undom) > needed * max_cover) return false;
    {
      uint32_t u = undom;
      while (u) {
        int v = __builtin_ctz(u);
        u &= u - 1;
        if (!(closed[v] & future)) return false;
      }
    }
    for (auto [a, b] : c.must_intersect) {
      uint32_t pm = (1u << a) | (1u << b);
      if (!(chosen & pm) && !(future & pm)) return false;
    }
    if (!components_ok(chosen, false, i)) return false;

    bool can_take = !(forbidden_mask & (1u << i));
    bool must_take = (forced_mask & (1u << i)) != 0;
    if (can_take) {
      if (dfs(i + 1, count + 1, chosen | (1u << i), dominated | closed[i]))
        return true;
    }
    if (!must_take) return dfs(i + 1, count, chosen, dominated);
    return false;
  }
};

}  // namespace

std::optional<DomSet> min_kcds(const MopGraph& g, int k, const Constraints& c,
                               int guard) {
  if (g.n() > guard)
    fail(Err::TooLarge, "order " + std::to_string(g.n()) + " exceeds solver guard " +
                            std::to_string(guard));
  if (g.n() > 31) fail(Err::TooLarge, "solver handles at most 31 vertices");
  for (int v : c.must_contain)
    for (int w : c.forbidden)
      if (v == w) fail(Err::BadParameter, "must_contain intersects forbidden");
  if (k > g.n()) return std::nullopt;

  Searcher s(g, k, c);
  int lo = std::max<int>(c.must_contain.size(), std::max(k, 1));
  int hi = std::min(c.max_size.value_or(g.n()), g.n());
  for (int target = lo; target <= hi; ++target) {
    s.target = target;
    s.found = false;
    if (s.dfs(0, 0, 0, 0)) {
      DomSet d;
      d.k = k;
      for (int v = 0; v < g.n(); ++v)
        if (s.best & (1u << v)) d.vertices.push_back(v);
      return d;
    }
  }
  return std::nullopt;
}

int gamma_k_exact(const MopGraph& g, int k, int guard) {
  auto d = min_kcds(g, k, {}, guard);
  if (!d) fail(Err::Infeasible, "no k-component dominating set exists");
  return static_cast<int>(d->vertices.size());
}

GammaTable gamma_table(int k, int n_min, int n_max, int guard, int threads) {
  if (n_max > kEnumGuard)
    fail(Err::TooLarge, "exhaustive tables stop at order " + std::to_string(kEnumGuard));
  GammaTable t;
  for (int n = std::max({3, k, n_min}); n <= n_max; ++n) {
    auto reps = enum_mops(n, /*dedup=*/true);
    std::vector<int> gam(reps.size(), 0);
    parallel_for(reps.size(), threads,
                 [&](size_t i) { gam[i] = gamma_k_exact(reps[i], k, guard); });
    GammaRow row;
    row.k = k;
    row.n = n;
    row.gamma = *std::max_element(gam.begin(), gam.end());
    for (size_t i = 0; i < reps.size(); ++i)
      if (gam[i] == row.gamma) row.extremal.push_back(reps[i].canonical_form());
    std::sort(row.extremal.begin(), row.extremal.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace mop
