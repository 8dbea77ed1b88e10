// Acceptance run: one PASS/FAIL line per criterion, checked against its time
// budget, using the independent oracles under tests/oracles.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "ellwall/verify.hpp"
#include "oracles/oracles.hpp"

int main(int argc, char** argv) {
  ellwall::VerifyOptions opt;
  opt.oracles = oracle::test_oracles();
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  std::printf("seed %llu\n", static_cast<unsigned long long>(opt.seed));
  std::fflush(stdout);

  std::vector<ellwall::CriterionResult> results;
  ellwall::CriterionResult det = ellwall::determinism_check(opt, &results);
  results.push_back(det);

  int failed = 0;
  for (const auto& r : results) {
    bool in_time = r.limit_seconds <= 0 || r.seconds <= r.limit_seconds;
    bool ok = r.pass && in_time;
    if (!ok) ++failed;
    std::string budget = r.limit_seconds > 0 ? " / limit " + std::to_string(r.limit_seconds) + "s" : "";
    std::printf("%s criterion %2d  %-52s %9.4fs%s  %s%s\n", ok ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                budget.c_str(), r.detail.c_str(), in_time ? "" : " [over time budget]");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
