#pragma once

// Independent oracles wired into the verification harness.

#include "e8_explicit.hpp"
#include "ellwall/verify.hpp"
#include "jordan_rank.hpp"
#include "phase_longdouble.hpp"
#include "rho_s_generating.hpp"
#include "walls_bruteforce.hpp"

namespace oracle {

inline ellwall::Oracles test_oracles() {
  ellwall::Oracles o;
  o.am1_walls = am1_walls_bruteforce;
  o.phase_sign = phase_sign;
  o.splits = [](int n, const ellwall::BimoduleParam& p) { return splits_by_rank(p.k, p.a, n); };
  o.rho_s_e = rho_s_on_e_modes;
  return o;
}

}  // namespace oracle
