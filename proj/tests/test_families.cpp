#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "mop/exact.hpp"
#include "mop/families.hpp"
#include "mop/io.hpp"

using namespace mop;

TEST_CASE("fan basics") {
  CHECK(fan(3) == MopGraph::validate(3, {}));
  auto f5 = fan(5);
  CHECK(f5.degree(0) == 4);  // universal hub
  for (int n = 3; n <= 12; ++n) CHECK(gamma_k_exact(fan(n), 1) == 1);
}

TEST_CASE("strips have the stated orders and ears") {
  CHECK(strip(1).n() == 5);
  for (int m = 1; m <= 6; ++m) {
    auto s = strip(m);
    CHECK(s.n() == 2 * m + 3);
    int ears = 0;
    for (int v = 0; v < s.n(); ++v)
      if (s.degree(v) == 2) ++ears;
    CHECK(ears == 2);
    auto sm = strip_minus(m);
    CHECK(sm.n() == 2 * m + 2);
  }
}

TEST_CASE("strip families attain the small-order maxima") {
  // gamma_k(strip(k+l)) = gamma_k(strip_minus(k+l)) = k+l for l <= k
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= k; ++l) {
      CHECK(gamma_k_exact(strip(k + l), k) == k + l);
      if (l >= 1) CHECK(gamma_k_exact(strip_minus(k + l), k) == k + l);
    }
}

TEST_CASE("enumeration counts are Catalan numbers") {
  long long cat = 1;  // C_1 for n = 3
  for (int n = 3; n <= 10; ++n) {
    CHECK((long long)enum_mops(n).size() == cat);
    cat = cat * 2 * (2 * (n - 2) + 1) / (n);  // C_{m+1} = C_m * 2(2m+1)/(m+2)
  }
  CHECK(enum_mops(5, true).size() == 1);
  CHECK(enum_mops(6, true).size() == 3);
}

TEST_CASE("random sampling is uniform over labeled triangulations") {
  // all 14 hexagon outcomes, chi-squared against uniform at df 13
  std::map<std::string, long> counts;
  const long samples = 100000;
  for (long i = 0; i < samples; ++i)
    counts[to_graph_json(random_mop(6, 777000 + i))]++;
  CHECK(counts.size() == 14);
  double expected = samples / 14.0, chi = 0;
  for (const auto& [s, c] : counts) chi += (c - expected) * (c - expected) / expected;
  CHECK(chi < 34.53);  // df 13 quantile at significance 1e-3
}

TEST_CASE("random sampling determinism and validity") {
  CHECK(random_mop(3, 7) == MopGraph::validate(3, {}));
  CHECK(random_mop(50, 123) == random_mop(50, 123));
  for (uint64_t s = 0; s < 10; ++s) {
    auto g = random_mop(50, s);
    CHECK(g.n() == 50);
    CHECK((int)g.chords().size() == 47);
  }
}

TEST_CASE("ladder family orders") {
  for (int k = 1; k <= 5; ++k)
    for (int s = 1; s <= 5; ++s) {
      CHECK(ladder_graph(k, s).n() == s * (2 * k + 1));
      for (int t = 1; t <= k; ++t) {
        CHECK(ladder_graph_odd(k, s, t).n() == s * (2 * k + 1) + 2 * t - 1);
        CHECK(ladder_graph_even(k, s, t).n() == s * (2 * k + 1) + 2 * t);
      }
    }
  CHECK(ladder_graph_odd(5, 2, 4).n() == 29);
  CHECK_THROWS_AS(ladder_graph_odd(2, 1, 3), MopError);
  CHECK_THROWS_AS(ladder_graph(0, 1), MopError);
}

TEST_CASE("ladder families are extremal at desk scale") {
  for (int s = 1; s <= 8; ++s) CHECK(gamma_k_exact(ladder_graph(1, s), 1) == s);
  for (int s = 1; s <= 5; ++s) CHECK(gamma_k_exact(ladder_graph(2, s), 2) == 2 * s);
  for (int s = 1; s <= 3; ++s) CHECK(gamma_k_exact(ladder_graph(3, s), 3) == 3 * s);
  CHECK(gamma_k_exact(ladder_graph(4, 2), 4) == 8);
  CHECK(gamma_k_exact(ladder_graph(5, 1), 5) == 5);
  CHECK(gamma_k_exact(ladder_graph(5, 2), 5) == 10);
  for (int t = 1; t <= 2; ++t) {
    CHECK(gamma_k_exact(ladder_graph_odd(2, 2, t), 2) == 3 + t);
    CHECK(gamma_k_exact(ladder_graph_even(2, 2, t), 2) == 3 + t);
    CHECK(gamma_k_exact(ladder_graph_odd(2, 3, t), 2) == 5 + t);
    CHECK(gamma_k_exact(ladder_graph_even(2, 3, t), 2) == 5 + t);
    CHECK(gamma_k_exact(ladder_graph_odd(2, 4, t), 2) == 7 + t);
  }
  for (int t = 1; t <= 3; ++t) {
    CHECK(gamma_k_exact(ladder_graph_odd(3, 2, t), 3) == 5 + t);
    CHECK(gamma_k_exact(ladder_graph_even(3, 2, t), 3) == 5 + t);
  }
  CHECK(gamma_k_exact(ladder_graph_even(1, 2, 1), 1) == 2);
  CHECK(gamma_k_exact(ladder_graph_odd(1, 3, 1), 1) == 3);
}
