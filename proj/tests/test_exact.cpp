#include <algorithm>
#include <random>

#include "doctest.h"
#include "mop/exact.hpp"
#include "mop/families.hpp"
#include "mop/exceptional.hpp"
#include "oracles.hpp"

using namespace mop;

namespace {

MopGraph exceptional12() {
  auto pieces = enum_marked_family(4);
  return build_glued(2, {pieces[0], pieces[0], pieces[0]}, {}).first;
}

}  // namespace

TEST_CASE("is_kcds basics") {
  auto tri = MopGraph::validate(3, {});
  CHECK(is_kcds(tri, 1, {0}));
  CHECK_FALSE(is_kcds(tri, 2, {0}));
  CHECK(is_kcds(tri, 2, {0, 1}));
  // the interior bottom row of the two-row strip dominates with one path
  auto s3 = strip(3);
  CHECK(is_kcds(s3, 2, {1, 2, 3}));
  CHECK(is_kcds(s3, 3, {1, 2, 3}));
  CHECK_FALSE(is_kcds(s3, 2, {1, 3}));  // splits into two singletons
  // plain domination: k = 0 ignores components
  CHECK(is_kcds(s3, 0, {1, 3}) == is_dominating(s3, {1, 3}));
}

TEST_CASE("no 4-set totally dominates the order-12 exceptional graph") {
  auto h = exceptional12();
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = b + 1; c < 12; ++c)
        for (int d = c + 1; d < 12; ++d)
          CHECK_FALSE(is_kcds(h, 2, {a, b, c, d}));
}

TEST_CASE("min_kcds examples") {
  CHECK(min_kcds(fan(5), 1)->vertices.size() == 1);
  CHECK(min_kcds(strip(5), 5)->vertices.size() == 5);
  for (const auto& g : enum_mops(5))
    CHECK(min_kcds(g, 2)->vertices.size() == 2);
  CHECK(gamma_k_exact(exceptional12(), 2) == 5);
  CHECK(gamma_k_exact(MopGraph::validate(3, {}), 1) == 1);
  CHECK(gamma_k_exact(strip(4), 3) == 4);
}

TEST_CASE("infeasibility and the guard") {
  // a size-0 set cannot intersect an edge: the order-4 marked-family test
  auto mp = enum_marked_family(4).at(0);
  auto del = delete_vertices(mp.g, {mp.x, mp.y});
  Constraints c;
  c.must_intersect.push_back(
      norm_pair(del.new_of_old[mp.x_prime()], del.new_of_old[mp.y_prime()]));
  c.max_size = 0;
  CHECK_FALSE(min_kcds(del.graph, 0, c).has_value());
  CHECK_THROWS_AS((void)min_kcds(fan(30), 1, {}, 26), MopError);
  CHECK(min_kcds(fan(30), 1, {}, 31)->vertices.size() == 1);
  // no set exists when k exceeds the order
  CHECK_FALSE(min_kcds(fan(5), 6).has_value());
}

TEST_CASE("solver equals the subset oracle on small orders") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& g : enum_mops(n)) {
      for (int k = 1; k <= 3; ++k) {
        auto got = min_kcds(g, k);
        auto want = oracle::naive_min_kcds(g, k);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(got->vertices == *want);
      }
    }
  }
}

TEST_CASE("constraint satisfaction on random instances") {
  std::mt19937_64 rng(20240521);
  for (int it = 0; it < 200; ++it) {
    int n = 5 + (int)(rng() % 8);
    auto g = random_mop(n, rng());
    int k = 1 + (int)(rng() % 3);
    Constraints c;
    int mc = (int)(rng() % n);
    c.must_contain.push_back(mc);
    int f = (int)(rng() % n);
    if (f != mc) c.forbidden.push_back(f);
    int a = (int)(rng() % n), b = (int)(rng() % n);
    if (a != b) c.must_intersect.push_back(norm_pair(a, b));
    auto r = min_kcds(g, k, c);
    if (!r) continue;
    CHECK(is_kcds(g, k, r->vertices));
    CHECK(std::binary_search(r->vertices.begin(), r->vertices.end(), mc));
    for (int v : c.forbidden)
      CHECK_FALSE(std::binary_search(r->vertices.begin(), r->vertices.end(), v));
    for (auto [x, y] : c.must_intersect)
      CHECK((std::binary_search(r->vertices.begin(), r->vertices.end(), x) ||
             std::binary_search(r->vertices.begin(), r->vertices.end(), y)));
  }
}

TEST_CASE("solver is deterministic") {
  auto g = random_mop(12, 99);
  auto a = min_kcds(g, 2);
  auto b = min_kcds(g, 2);
  CHECK(a->vertices == b->vertices);
}

TEST_CASE("constrained solving equals the subset oracle") {
  std::mt19937_64 rng(424242);
  for (int it = 0; it < 300; ++it) {
    int n = 4 + (int)(rng() % 7);
    auto g = random_mop(n, rng());
    int k = (int)(rng() % 4);  // includes plain domination k = 0
    Constraints c;
    if (rng() % 2) c.must_contain.push_back((int)(rng() % n));
    int f = (int)(rng() % n);
    if (std::find(c.must_contain.begin(), c.must_contain.end(), f) ==
        c.must_contain.end())
      c.forbidden.push_back(f);
    int a = (int)(rng() % n), b = (int)(rng() % n);
    if (a != b) c.must_intersect.push_back(norm_pair(a, b));
    if (rng() % 3 == 0) c.max_size = (int)(rng() % (n / 2 + 1));
    auto got = min_kcds(g, k, c);
    auto want = oracle::naive_min_kcds(g, k, c);
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(got->vertices == *want);
  }
}

TEST_CASE("gamma tables for small k") {
  auto t1 = gamma_table(1, 3, 9);
  std::vector<int> got1;
  for (const auto& r : t1.rows) got1.push_back(r.gamma);
  CHECK(got1 == std::vector<int>{1, 1, 1, 2, 2, 2, 3});

  auto t2 = gamma_table(2, 5, 11);
  std::vector<int> got2;
  for (const auto& r : t2.rows) got2.push_back(r.gamma);
  CHECK(got2 == std::vector<int>{2, 2, 2, 3, 3, 4, 4});

  for (size_t i = 0; i + 1 < t1.rows.size(); ++i)
    CHECK(t1.rows[i].gamma <= t1.rows[i + 1].gamma);
  for (const auto& r2 : t2.rows)
    for (const auto& r1 : t1.rows)
      if (r1.n == r2.n) CHECK(r1.gamma <= r2.gamma);
}

TEST_CASE("gamma table records extremal witnesses") {
  auto t = gamma_table(1, 6, 6);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].gamma == 2);
  CHECK(!t.rows[0].extremal.empty());
  for (const auto& ch : t.rows[0].extremal) {
    auto g = MopGraph::validate(6, ch);
    CHECK(gamma_k_exact(g, 1) == 2);
    CHECK(g.canonical_form() == ch);
  }
}
