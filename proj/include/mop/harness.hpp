#pragma once

#include <string>
#include <vector>

#include "mop/construct.hpp"
#include "mop/exact.hpp"
#include "mop/exceptional.hpp"

namespace mop {

// Closing formula for the maximum of gamma_k over order-n MOPs: the ceiling
// branch applies exactly when some p in [1, k-1] admits exceptional members
// of order n (n even in [4kp+2p+2, 2k(2p+1)]); floor otherwise.
long long closing_formula(int k, int n);
bool in_exceptional_window(int k, int n);

// Lower-bound witness family for gamma_k(n): two-row strips below 4k+4,
// ladder families at larger orders, glued exceptional members inside the
// ceiling windows.
MopGraph extremal_witness(int k, int n);

struct VerifyRow {
  std::string id;  // canonical chord id
  int n = 0, k = 0, exact = 0, constructed = 0;
  long long bound = 0;
  bool in_hk = false;
};

struct VerifyReport {
  int k_max = 0, n_max = 0;
  std::vector<VerifyRow> rows;
  std::vector<std::string> notes;
  bool ok = true;
};

// Exhaustive check over canonical MOPs of every order up to n_max: exact
// solver vs constructive algorithm vs family detector, asserting the
// dichotomy bound on each row.
VerifyReport run_verify(int k_max, int n_max, int guard = kDefaultSolverGuard,
                        int threads = 1);
std::string verify_csv(const VerifyReport& r);
std::string verify_json(const VerifyReport& r);

struct FormulaRow {
  int k = 0, n = 0;
  long long formula = 0;
  long long lower = 0;   // exact value, or witness gamma for large n
  long long upper = 0;   // max constructed size over witness + samples
  std::string method;    // "exhaustive" or "family+construct"
  bool ok = false;
};

struct FormulaReport {
  int k = 0;
  std::vector<FormulaRow> rows;
  std::vector<std::string> notes;
  bool ok = true;
};

// Checks gamma_k(n) against the closing formula: exhaustively for
// n <= enum_limit, otherwise by sandwiching with the witness family (solved
// exactly) and constructive upper bounds on samples.  Throws TooLarge when
// neither route applies.
FormulaReport run_gamma_formula(int k, const std::vector<int>& ns,
                                int enum_limit = 13,
                                int guard = kDefaultSolverGuard,
                                int threads = 1);
std::string formula_csv(const FormulaReport& r);
std::string formula_json(const FormulaReport& r);

std::string table_csv(const GammaTable& t,
                      const std::vector<std::string>& files_per_row);

}  // namespace mop
