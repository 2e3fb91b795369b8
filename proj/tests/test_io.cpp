#include "doctest.h"
#include "mop/families.hpp"
#include "mop/harness.hpp"
#include "mop/io.hpp"

using namespace mop;

TEST_CASE("graph serialization is frozen byte for byte") {
  CHECK(to_graph_json(fan(5)) == "{\"n\":5,\"chords\":[[0,2],[0,3]]}\n");
  CHECK(to_graph_json(fan(3)) == "{\"n\":3,\"chords\":[]}\n");
}

TEST_CASE("parsing tolerates whitespace and round-trips") {
  auto g = parse_graph_json("{ \"n\": 5,\n \"chords\": [[2, 0], [0, 3]] }");
  CHECK(g == fan(5));
  for (uint64_t s = 0; s < 20; ++s) {
    auto r = random_mop(9, s);
    CHECK(parse_graph_json(to_graph_json(r)) == r);
  }
  CHECK_THROWS_AS(parse_graph_json("{\"n\": 5}"), MopError);
  CHECK_THROWS_AS(parse_graph_json("{\"n\": 5, \"chords\": [[0]]}"), MopError);
  CHECK_THROWS_AS(parse_graph_json("not json"), MopError);
}

TEST_CASE("compact chord ids") {
  CHECK(chords_id(fan(5).chords()) == "0-2;0-3");
  CHECK(chords_id({}) == "-");
}

TEST_CASE("table csv schema is frozen") {
  auto t = gamma_table(1, 3, 5);
  CHECK(table_csv(t, {}) ==
        "k,n,gamma,extremal_count,extremal_files\n"
        "1,3,1,1,-\n"
        "1,4,1,1,-\n"
        "1,5,1,1,-\n");
}

TEST_CASE("verify report schema and determinism") {
  auto rep = run_verify(1, 5);
  CHECK(rep.ok);
  auto csv = verify_csv(rep);
  CHECK(csv.rfind("id,n,k,gamma,constructed,bound,in_hk\n", 0) == 0);
  auto rep2 = run_verify(1, 5);
  CHECK(verify_csv(rep2) == csv);
  CHECK(verify_json(rep2) == verify_json(rep));
}

TEST_CASE("verify harness sees no exceptional rows below their window") {
  auto rep1 = run_verify(1, 10);
  CHECK(rep1.ok);
  for (const auto& row : rep1.rows) {
    CHECK_FALSE(row.in_hk);
    CHECK(row.exact <= floor_bound(1, row.n));
  }
  auto rep3 = run_verify(3, 9, kDefaultSolverGuard, 4);
  CHECK(rep3.ok);
  for (const auto& row : rep3.rows) {
    CHECK_FALSE(row.in_hk);
    CHECK(row.constructed <= floor_bound(row.k, row.n));
  }
}

TEST_CASE("closing formula windows") {
  // k = 1 never has exceptional orders; k = 2 only order 12
  for (int n = 3; n <= 20; ++n) CHECK_FALSE(in_exceptional_window(1, n));
  for (int n = 5; n <= 20; ++n)
    CHECK(in_exceptional_window(2, n) == (n == 12));
  CHECK(closing_formula(2, 12) == 5);
  // k = 3: two bands with a gap between 18 and 30
  for (int n = 7; n <= 32; ++n)
    CHECK(in_exceptional_window(3, n) ==
          ((n % 2 == 0 && n >= 16 && n <= 18) || n == 30));
}

TEST_CASE("gamma formula harness over every order within the guard") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> ns;
    for (int n = 2 * k + 1; n <= 26; ++n) ns.push_back(n);
    auto rep = run_gamma_formula(k, ns, 13, kDefaultSolverGuard, 4);
    CHECK(rep.ok);
    for (const auto& row : rep.rows) {
      CHECK(row.ok);
      CHECK(row.lower == closing_formula(k, row.n));
      CHECK(row.method == (row.n <= 13 ? "exhaustive" : "family+construct"));
    }
  }
  CHECK_THROWS_AS(run_gamma_formula(3, {29}), MopError);  // witness beyond guard
}

TEST_CASE("extremal witnesses cover every admissible order") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k + 1; n <= 20; ++n) {
      auto w = extremal_witness(k, n);
      CHECK(w.n() == n);
    }
  // window orders produce detected members
  auto w12 = extremal_witness(2, 12);
  CHECK(gamma_k_exact(w12, 2) == 5);
}
