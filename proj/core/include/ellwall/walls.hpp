#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ellwall/coh_lattice.hpp"
#include "ellwall/poly.hpp"
#include "ellwall/root_system.hpp"

namespace ellwall {

struct CentralCharge {
  Rational re;
  Rational im;
};

// Z_{H,B}(v) = int e^{iH} ch^B(v):
//   Re = s - c.B + r (B^2 - H^2)/2,  Im = H.c - r H.B.
CentralCharge central_charge(const MukaiVector& v, const BilinearLattice& ns, const QVector& h,
                             const QVector& b);

// Im(Z(v) conj Z(w)); positive when the phase of v exceeds that of w.
Rational phase_alignment(const MukaiVector& v, const MukaiVector& w, const BilinearLattice& ns,
                         const QVector& h, const QVector& b);

// Im(Z(v) conj Z(w)) in the A-1 chart H = P + bE, B = cP + dE, as a
// polynomial in b, c, d. Both vectors must live on II_{1,1}.
Poly phase_equal_locus(const MukaiVector& v, const MukaiVector& w);

// Same quantity with H, B kept symbolic: variables "H:<label>", "B:<label>".
Poly phase_equal_locus_general(const MukaiVector& v, const MukaiVector& w, const BilinearLattice& ns);

// Convenience for v = (1,0,-n), w = (0, rE, s): r(n + b + b c^2) - s(d + b c).
Poly wall_rs_polynomial(long long n, long long r, long long s);

// Wall equation in its printed shape, 2cdr - br - nr - (sd + bcs - rbc^2).
// Agrees with wall_rs_polynomial only when r = 0; kept for comparison.
Poly printed_wall_polynomial(long long n, long long r, long long s);

struct WallSpec {
  EllipticRoot root;
  MukaiVector kclass;
  Poly locus;
  // Curve class coefficients: (C_E, C_pt) then finite simple-root part.
  IntVector curve;
  // Direction in the (D.C_E, D.C_pt) plane; absent for walls with no
  // imaginary part (they do not meet the level-1 slice).
  std::optional<std::array<long long, 2>> n1_ray;
  std::optional<Rational> level1_pos;
  Rational pairing;          // <kclass, v>
  bool bound_equality = false;  // |<beta,v>| = <v,v>/2
  bool degenerate = false;      // the n = 1 Hilbert-Chow wall
};

struct WallOptions {
  int pairing_sign = 1;   // multiplies the Mukai pairing in the bound
  bool with_locus = true;
};

// Walls for v = (1, 0, -n) on the NS lattice of R, in the window 0 <= k < m,
// 1 <= m <= n (plus the m = 0 finite layer for types with finite part).
// Throws UnsupportedType outside {A-1, D4, E6, E7, E8}.
std::vector<WallSpec> enumerate_v_walls(const MukaiVector& v, CartanType r, const WallOptions& opt = {});

struct BayerMacriClass {
  Rational r_sigma;
  Rational s_sigma;
  QVector c_sigma;
};

// r = B.H, c = -(B.H) B + (-n + (B^2 - H^2)/2) H, s = -n B.H.
BayerMacriClass bayer_macri_class(const QVector& h, const QVector& b, const MukaiVector& v,
                                  const BilinearLattice& ns);

// (D.C_E, D.C_pt) = (-<l, (0,E,0)>, <l, (0,0,1)>).
std::array<Rational, 2> n1_coordinates(const BayerMacriClass& bm, const BilinearLattice& ns);

struct Chamber {
  std::array<long long, 2> lower_ray;
  std::array<long long, 2> upper_ray;
  std::optional<Rational> lower_pos;  // absent: boundary D.C_E = 0
  std::optional<Rational> upper_pos;
};

struct ChamberDecomposition {
  long long n = 0;
  CartanType type = CartanType::Am1;
  std::vector<WallSpec> walls;
  std::vector<Rational> level1_positions;          // strictly increasing
  std::vector<std::array<long long, 2>> rays;      // one per position, same order
  std::vector<Chamber> chambers;                   // positions + 1
  std::vector<std::string> assumptions;
};

ChamberDecomposition chamber_decomposition(long long n, CartanType r, const WallOptions& opt = {});

struct SvgStyle {
  int width = 640;
  int height = 480;
  bool shade = true;
  bool labels = true;
};

std::string emit_chamber_svg(const ChamberDecomposition& dec, const SvgStyle& style = {});

}  // namespace ellwall
