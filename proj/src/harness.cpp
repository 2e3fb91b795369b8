#include "mop/harness.hpp"

#include <algorithm>
#include <sstream>

#include "mop/families.hpp"
#include "mop/io.hpp"
#include "mop/util.hpp"

namespace mop {

bool in_exceptional_window(int k, int n) {
  if (n % 2 != 0) return false;
  for (int p = 1; p <= k - 1; ++p)
    if (n >= 4 * k * p + 2 * p + 2 && n <= 2 * k * (2 * p + 1)) return true;
  return false;
}

long long closing_formula(int k, int n) {
  return in_exceptional_window(k, n) ? ceil_bound(k, n) : floor_bound(k, n);
}

namespace {

// Smallest p whose window contains n, plus an even arc profile in [4, 2k]
// of 2p+1 parts summing to n.
std::pair<int, std::vector<int>> window_profile(int k, int n) {
  for (int p = 1; p <= k - 1; ++p) {
    if (n < 4 * k * p + 2 * p + 2 || n > 2 * k * (2 * p + 1)) continue;
    int parts = 2 * p + 1;
    std::vector<int> ell(parts, 4);
    int extra = n - 4 * parts;
    for (int i = 0; i < parts && extra > 0; ++i) {
      int add = std::min(extra, 2 * k - 4);
      add -= add % 2;
      ell[i] += add;
      extra -= add;
    }
    if (extra != 0) continue;
    return {p, ell};
  }
  fail(Err::InternalInvariantViolation, "no arc profile for the window");
}

MopGraph window_member(int k, int n) {
  auto [p, ell] = window_profile(k, n);
  std::vector<MarkedPair> pieces;
  for (int e : ell) pieces.push_back(enum_marked_family(e).front());
  std::vector<VertexPair> tri;
  for (int j = 2; j < 2 * p; ++j) tri.push_back({0, j});
  return build_glued(k, pieces, tri).first;
}

}  // namespace

MopGraph extremal_witness(int k, int n) {
  if (n < 2 * k + 1) fail(Err::BadParameter, "witness needs n >= 2k+1");
  if (in_exceptional_window(k, n)) return window_member(k, n);
  if (n <= 4 * k + 3) {
    if (n == 2 * k + 1) return fan(n);
    if (n % 2 == 1) return strip((n - 3) / 2);
    return strip_minus((n - 2) / 2);
  }
  int s = n / (2 * k + 1), r = n % (2 * k + 1);
  if (r == 0) return ladder_graph(k, s);
  if (r % 2 == 1) return ladder_graph_odd(k, s, (r + 1) / 2);
  return ladder_graph_even(k, s, r / 2);
}

VerifyReport run_verify(int k_max, int n_max, int guard, int threads) {
  if (n_max > kEnumGuard)
    fail(Err::TooLarge,
         "exhaustive verification stops at order " + std::to_string(kEnumGuard));
  VerifyReport rep;
  rep.k_max = k_max;
  rep.n_max = n_max;
  for (int k = 1; k <= k_max; ++k) {
    for (int n = std::max(3, 2 * k + 1); n <= n_max; ++n) {
      auto reps = enum_mops(n, /*dedup=*/true);
      std::vector<VerifyRow> rows(reps.size());
      std::vector<std::string> errs(reps.size());
      parallel_for(reps.size(), threads, [&](size_t i) {
        const MopGraph& g = reps[i];
        VerifyRow row;
        row.id = chords_id(g.canonical_form());
        row.n = n;
        row.k = k;
        try {
          row.exact = gamma_k_exact(g, k, guard);
          auto dec = detect_exceptional(g, k);
          row.in_hk = dec.has_value();
          row.bound = dichotomy_bound(k, n, row.in_hk);
          auto d = dichotomy_construct(g, k);
          row.constructed = static_cast<int>(d.vertices.size());
          if (!is_kcds(g, k, d.vertices))
            errs[i] = "constructed set invalid";
          else if (row.exact > row.constructed || row.constructed > row.bound)
            errs[i] = "bound chain violated (" + std::to_string(row.exact) + " <= " +
                      std::to_string(row.constructed) + " <= " +
                      std::to_string(row.bound) + ")";
        } catch (const MopError& e) {
          errs[i] = e.what();
        }
        rows[i] = std::move(row);
      });
      for (size_t i = 0; i < reps.size(); ++i) {
        if (!errs[i].empty()) {
          rep.ok = false;
          rep.notes.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                              " " + rows[i].id + ": " + errs[i]);
        }
        rep.rows.push_back(std::move(rows[i]));
      }
    }
  }
  size_t exceptional = 0;
  for (const auto& r : rep.rows) exceptional += r.in_hk ? 1 : 0;
  rep.notes.push_back("rows=" + std::to_string(rep.rows.size()) +
                      " exceptional=" + std::to_string(exceptional));
  return rep;
}

std::string verify_csv(const VerifyReport& r) {
  std::ostringstream out;
  out << "id,n,k,gamma,constructed,bound,in_hk\n";
  for (const auto& row : r.rows)
    out << row.id << "," << row.n << "," << row.k << "," << row.exact << ","
        << row.constructed << "," << row.bound << "," << (row.in_hk ? 1 : 0)
        << "\n";
  return out.str();
}

std::string verify_json(const VerifyReport& r) {
  std::ostringstream out;
  out << "{\"k_max\":" << r.k_max << ",\"n_max\":" << r.n_max << ",\"ok\":"
      << (r.ok ? "true" : "false") << ",\"rows\":[";
  bool first = true;
  for (const auto& row : r.rows) {
    if (!first) out << ",";
    first = false;
    out << "{\"id\":\"" << row.id << "\",\"n\":" << row.n << ",\"k\":" << row.k
        << ",\"gamma\":" << row.exact << ",\"constructed\":" << row.constructed
        << ",\"bound\":" << row.bound << ",\"in_hk\":" << (row.in_hk ? "true" : "false")
        << "}";
  }
  out << "]}\n";
  return out.str();
}

FormulaReport run_gamma_formula(int k, const std::vector<int>& ns, int enum_limit,
                                int guard, int threads) {
  FormulaReport rep;
  rep.k = k;
  for (int n : ns) {
    if (n < 2 * k + 1)
      fail(Err::BadParameter, "gamma formula needs n >= 2k+1");
    FormulaRow row;
    row.k = k;
    row.n = n;
    row.formula = closing_formula(k, n);
    if (n <= enum_limit) {
      auto t = gamma_table(k, n, n, guard, threads);
      row.lower = row.upper = t.rows.at(0).gamma;
      row.method = "exhaustive";
      row.ok = row.lower == row.formula;
    } else {
      MopGraph wit = extremal_witness(k, n);
      if (wit.n() > guard)
        fail(Err::TooLarge, "witness order " + std::to_string(wit.n()) +
                                " beyond the solver guard");
      row.lower = gamma_k_exact(wit, k, guard);
      row.method = "family+construct";
      long long worst = 0;
      bool valid = true;
      std::vector<MopGraph> sample{wit};
      for (uint64_t s = 0; s < 8; ++s) sample.push_back(random_mop(n, s));
      for (const auto& g : sample) {
        auto d = dichotomy_construct(g, k);
        bool member = detect_exceptional(g, k).has_value();
        valid = valid && is_kcds(g, k, d.vertices) &&
                static_cast<long long>(d.vertices.size()) <=
                    dichotomy_bound(k, n, member);
        worst = std::max<long long>(worst, d.vertices.size());
      }
      row.upper = worst;
      row.ok = valid && row.lower == row.formula && row.upper <= row.formula;
    }
    if (!row.ok) {
      rep.ok = false;
      rep.notes.push_back("n=" + std::to_string(n) + ": formula " +
                          std::to_string(row.formula) + " vs [" +
                          std::to_string(row.lower) + "," +
                          std::to_string(row.upper) + "]");
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string formula_csv(const FormulaReport& r) {
  std::ostringstream out;
  out << "k,n,formula,lower,upper,method,ok\n";
  for (const auto& row : r.rows)
    out << row.k << "," << row.n << "," << row.formula << "," << row.lower << ","
        << row.upper << "," << row.method << "," << (row.ok ? 1 : 0) << "\n";
  return out.str();
}

std::string formula_json(const FormulaReport& r) {
  std::ostringstream out;
  out << "{\"k\":" << r.k << ",\"ok\":" << (r.ok ? "true" : "false") << ",\"rows\":[";
  bool first = true;
  for (const auto& row : r.rows) {
    if (!first) out << ",";
    first = false;
    out << "{\"n\":" << row.n << ",\"formula\":" << row.formula
        << ",\"lower\":" << row.lower << ",\"upper\":" << row.upper
        << ",\"method\":\"" << row.method << "\",\"ok\":" << (row.ok ? "true" : "false")
        << "}";
  }
  out << "]}\n";
  return out.str();
}

std::string table_csv(const GammaTable& t,
                      const std::vector<std::string>& files_per_row) {
  std::ostringstream out;
  out << "k,n,gamma,extremal_count,extremal_files\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    out << row.k << "," << row.n << "," << row.gamma << "," << row.extremal.size()
        << "," << (i < files_per_row.size() && !files_per_row[i].empty()
                       ? files_per_row[i]
                       : "-")
        << "\n";
  }
  return out.str();
}

}  // namespace mop
