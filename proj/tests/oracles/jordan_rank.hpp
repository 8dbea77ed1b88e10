#pragma once

// Splitting test by realified ranks: build y = [[J, diag(A)], [0, J]] over
// Q(zeta_k), replace every entry by its phi(k) x phi(k) multiplication
// matrix, and check whether y^{n+1} has rational rank 0 (all blocks <= n+1).

#include <vector>

#include "ellwall/cyclotomic.hpp"

namespace oracle {

using QMat = std::vector<std::vector<ellwall::Rational>>;

inline QMat qmul(const QMat& a, const QMat& b) {
  std::size_t n = a.size(), m = b[0].size(), l = b.size();
  QMat c(n, std::vector<ellwall::Rational>(m, ellwall::Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < l; ++t) {
      if (sgn(a[i][t]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

inline std::size_t qrank(QMat a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < (a.empty() ? 0 : a[0].size()) && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][col]) == 0) continue;
      ellwall::Rational f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// A_j = sum_g a_g zeta^{jg}.
inline ellwall::Cyclotomic char_at(int k, const std::vector<ellwall::Cyclotomic>& a, long long j) {
  ellwall::Cyclotomic s = ellwall::Cyclotomic::zero(k);
  for (int g = 0; g < k; ++g) s += a[g] * ellwall::Cyclotomic::zeta_power(k, j * g);
  return s;
}

inline bool splits_by_rank(int k, const std::vector<ellwall::Cyclotomic>& a, int n) {
  const int dim = 2 * (n + 1);
  const int phi = ellwall::euler_phi(k);
  const auto zero = ellwall::Cyclotomic::zero(k);
  std::vector<std::vector<ellwall::Cyclotomic>> y(dim, std::vector<ellwall::Cyclotomic>(dim, zero));
  for (int i = 0; i + 1 <= n; ++i) {
    y[i][i + 1] = ellwall::Cyclotomic::one(k);
    y[n + 1 + i][n + 2 + i] = ellwall::Cyclotomic::one(k);
  }
  for (int i = 0; i <= n; ++i) y[i][n + 1 + i] = char_at(k, a, i);
  QMat real(dim * phi, std::vector<ellwall::Rational>(dim * phi, ellwall::Rational(0)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      auto m = y[i][j].multiplication_matrix();
      for (int s = 0; s < phi; ++s)
        for (int t = 0; t < phi; ++t) real[i * phi + s][j * phi + t] = m[s][t];
    }
  QMat p = real;
  for (int e = 1; e < n + 1; ++e) p = qmul(p, real);
  return qrank(p) == 0;
}

}  // namespace oracle
