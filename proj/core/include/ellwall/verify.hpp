#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ellwall/fock.hpp"
#include "ellwall/local_model.hpp"
#include "ellwall/serialize.hpp"

namespace ellwall {

// Reference computations the criteria compare against. The CLI uses the
// built-in set; the acceptance test injects its own.
struct Oracles {
  // Walls of v = (1, 0, -n) on II_{1,1} as (m, k) for roots m delta_pt + k delta_E.
  std::function<std::set<std::pair<long long, long long>>(long long n)> am1_walls;
  // Sign of Im(Z(v) conj Z(w)) for v = (1,0,-n), w = (0, r E, s) at H = P + bE,
  // B = cP + dE, evaluated in floating point.
  std::function<int(long long n, long long r, long long s, long double b, long double c, long double d)> phase_sign;
  // Whether the module with y-matrix y_matrix(n, p) is J + J.
  std::function<bool(int n, const BimoduleParam& p)> splits;
  // rho(s) applied to prod alpha_{-k_i}(E) on the charge-c vacuum.
  std::function<FockState(const std::vector<int>& ks, int charge)> rho_s_e;
};

Oracles builtin_oracles();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;  // never serialized
  double limit_seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 20241016;
  std::set<int> only;  // empty: all of 1..10
  Oracles oracles;
  Conventions conventions;
};

// Criteria 1..10. Time limits are recorded but not enforced here.
std::vector<CriterionResult> run_criteria(const VerifyOptions& opt);

// Deterministic report (no timings).
json verify_report(const std::vector<CriterionResult>& results, const VerifyOptions& opt);

// Criterion 11: runs the suite twice and compares the dumped reports.
CriterionResult determinism_check(const VerifyOptions& opt, std::vector<CriterionResult>* first_run = nullptr);

}  // namespace ellwall
