#pragma once

// rho(s) on states built from alpha_{-k}(E) modes. Each creator alpha_{-k}(E)
// goes to the z^k coefficient h_k of exp(sum_j x_j z^j / j) with
// x_j = alpha_{-j}(E); the E-modes pair trivially, so no cross factors
// appear. h_k comes from Newton's recursion k h_k = sum_{j=1}^k x_j h_{k-j}.

#include <algorithm>
#include <map>
#include <vector>

#include "ellwall/fock.hpp"

namespace oracle {

// Polynomial in commuting x_j: sorted multiset of indices -> coefficient.
using XPoly = std::map<std::vector<int>, ellwall::Rational>;

inline XPoly xmul(const XPoly& a, const XPoly& b) {
  XPoly c;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      c[m] += ca * cb;
    }
  return c;
}

inline std::vector<XPoly> complete_homogeneous(int kmax) {
  std::vector<XPoly> h(kmax + 1);
  h[0][{}] = 1;
  for (int k = 1; k <= kmax; ++k) {
    for (int j = 1; j <= k; ++j) {
      XPoly xj;
      xj[{j}] = 1;
      for (const auto& [m, c] : xmul(xj, h[k - j])) h[k][m] += c;
    }
    for (auto& [m, c] : h[k]) c /= k;
  }
  return h;
}

inline ellwall::FockState rho_s_on_e_modes(const std::vector<int>& ks, int charge) {
  int kmax = 0;
  for (int k : ks) kmax = std::max(kmax, k);
  auto h = complete_homogeneous(kmax);
  XPoly total;
  total[{}] = 1;
  for (int k : ks) total = xmul(total, h[k]);
  ellwall::FockState out(charge + static_cast<int>(ks.size()));
  for (const auto& [m, c] : total) {
    if (sgn(c) == 0) continue;
    ellwall::Monomial mono;
    for (int j : m) mono.push_back(ellwall::Mode{static_cast<std::int16_t>(j), ellwall::Label::E});
    ellwall::canonicalize(mono);
    out.add(mono, ellwall::QH(c));
  }
  return out;
}

}  // namespace oracle
