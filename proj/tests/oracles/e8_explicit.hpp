#pragma once

// E8 roots in the even coordinate model, doubled so every entry is an
// integer: 2(+-e_i +- e_j) and (+-1)^8 with an even number of minus signs.
// Norms are then 8 and pairings are 4 times the usual ones.

#include <array>
#include <map>
#include <vector>

namespace oracle {

using E8Vec = std::array<long long, 8>;

inline std::vector<E8Vec> e8_roots_explicit() {
  std::vector<E8Vec> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {-2, 2})
        for (int sj : {-2, 2}) {
          E8Vec v{};
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    E8Vec v{};
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

inline long long e8_dot(const E8Vec& a, const E8Vec& b) {
  long long s = 0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

// Histogram of <alpha, beta> over all roots beta, for one fixed root alpha,
// in the usual normalization (roots of norm 2).
inline std::map<long long, int> e8_pairing_histogram() {
  auto roots = e8_roots_explicit();
  std::map<long long, int> h;
  for (const auto& b : roots) ++h[e8_dot(roots.front(), b) / 4];
  return h;
}

}  // namespace oracle
