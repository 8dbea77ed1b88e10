#pragma once

// Floating-point phase comparison on II_{1,1} with basis (E, P), E.P = 1.
// Z(v) = int e^{-Omega} ch(v), Omega = B - iH, H = P + bE and B = cP + dE,
// computed in complex long double without expanding real and imaginary parts.

#include <complex>

namespace oracle {

using cld = std::complex<long double>;

inline int phase_sign(long long n, long long r, long long s, long double b, long double c, long double d) {
  // Omega as a complexified class (coefficient on E, coefficient on P).
  cld oe(d, -b), op(c, -1);
  auto dot = [](cld xe, cld xp, cld ye, cld yp) { return xe * yp + xp * ye; };
  auto Z = [&](long double rank, long double ce, long double cp, long double ch2) {
    cld ch1 = dot(ce, cp, oe, op);
    cld sq = dot(oe, op, oe, op);
    return cld(ch2) - ch1 + cld(rank) * sq / 2.0L;
  };
  cld zv = Z(1, 0, 0, -static_cast<long double>(n));
  cld zw = Z(0, static_cast<long double>(r), 0, static_cast<long double>(s));
  long double x = std::imag(zv * std::conj(zw));
  const long double tol = 1e-12L * (1 + std::abs(zv) * std::abs(zw));
  return x > tol ? 1 : (x < -tol ? -1 : 0);
}

}  // namespace oracle
