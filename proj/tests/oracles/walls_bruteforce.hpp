#pragma once

// Brute-force wall finder on the A-1 surface: scan the slice b = 1, c = 0 of
// the (b, c, d) chart and record every d where the phase of some candidate
// class (0, kE, m) crosses that of (1, 0, -n). The candidates are all
// integer classes with 1 <= m <= n and |k| <= 3n; a crossing is reported as
// the reduced class (m, k mod m) that produced it.

#include <set>
#include <utility>

#include "phase_longdouble.hpp"

namespace oracle {

inline bool coprime(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  for (long long d = 2; d <= a && d <= (b == 0 ? a : b); ++d)
    if (a % d == 0 && b % d == 0) return false;
  return b != 0 || a == 1;
}

inline std::set<std::pair<long long, long long>> am1_walls_bruteforce(long long n) {
  std::set<std::pair<long long, long long>> out;
  const long double b = 1, c = 0;
  for (long long m = 1; m <= n; ++m)
    for (long long k = -3 * n; k <= 3 * n; ++k) {
      if (!coprime(m, k)) continue;
      // Scan d on a grid fine enough to separate distinct crossings.
      const long double lo = -4.0L * (n + 1), hi = 4.0L * (n + 1);
      const int steps = 4000;
      int prev = phase_sign(n, k, m, b, c, lo);
      for (int t = 1; t <= steps; ++t) {
        long double d = lo + (hi - lo) * t / steps;
        int s = phase_sign(n, k, m, b, c, d);
        if (s != 0 && prev != 0 && s != prev) {
          out.emplace(m, ((k % m) + m) % m);
          break;
        }
        if (s != 0) prev = s;
      }
    }
  return out;
}

}  // namespace oracle
