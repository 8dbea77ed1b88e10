#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ellwall/errors.hpp"
#include "ellwall/walls.hpp"
#include "oracles/walls_bruteforce.hpp"

using namespace ellwall;

namespace {
Poly var(const char* s) { return Poly::var(s); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST(WallLocus, Substitutions) {
  Poly b = var("b"), c = var("c"), d = var("d");
  EXPECT_EQ(wall_rs_polynomial(3, 0, 2), Poly(-2) * (d + b * c));
  EXPECT_EQ(wall_rs_polynomial(5, 0, 1), -(d + b * c));
  // The printed shape agrees only on the r = 0 slice.
  EXPECT_EQ(printed_wall_polynomial(3, 0, 2), wall_rs_polynomial(3, 0, 2));
  EXPECT_NE(printed_wall_polynomial(3, 1, 2), wall_rs_polynomial(3, 1, 2));
}

TEST(WallLocus, MatchesPhaseAlignment) {
  auto ns = BilinearLattice::hyperbolic_plane();
  for (long long n = 1; n <= 4; ++n)
    for (long long r = -2; r <= 2; ++r)
      for (long long s = 1; s <= 3; ++s) {
        MukaiVector v = MukaiVector::hilbert(2, n), w(0, {r, 0}, rat(s));
        Poly p = phase_equal_locus(v, w);
        EXPECT_EQ(p, wall_rs_polynomial(n, r, s)) << n << " " << r << " " << s;
        Rational b = rat(3, 2), c = rat(-1, 3), d = rat(5, 7);
        EXPECT_EQ(p.evaluate({{"b", b}, {"c", c}, {"d", d}}), phase_alignment(v, w, ns, {b, 1}, {d, c}));
      }
}

TEST(Walls, Am1SmallN) {
  auto one = chamber_decomposition(1, CartanType::Am1);
  ASSERT_EQ(one.walls.size(), 1u);
  EXPECT_TRUE(one.walls[0].degenerate);
  auto two = chamber_decomposition(2, CartanType::Am1);
  ASSERT_EQ(two.walls.size(), 2u);
  EXPECT_EQ(two.level1_positions, (std::vector<Rational>{rat(-1, 2), Rational(0)}));
  EXPECT_EQ(chamber_decomposition(4, CartanType::Am1).walls.size(), 6u);
}

TEST(Walls, Am1MatchesBruteForce) {
  for (long long n = 1; n <= 7; ++n) {
    auto dec = chamber_decomposition(n, CartanType::Am1);
    std::set<std::pair<long long, long long>> got;
    for (const auto& w : dec.walls) got.emplace(w.root.m, w.root.n);
    EXPECT_EQ(got, oracle::am1_walls_bruteforce(n)) << n;
  }
}

TEST(Walls, ChamberInvariants) {
  for (long long n = 1; n <= 12; ++n) {
    auto dec = chamber_decomposition(n, CartanType::Am1);
    EXPECT_EQ(dec.chambers.size(), dec.walls.size() + 1);
    EXPECT_EQ(dec.level1_positions.size(), dec.walls.size());
    for (std::size_t i = 1; i < dec.level1_positions.size(); ++i)
      EXPECT_LT(dec.level1_positions[i - 1], dec.level1_positions[i]);
    for (const auto& r : dec.rays) EXPECT_GE(r[0], 0);
    if (n > 1) {
      auto prev = chamber_decomposition(n - 1, CartanType::Am1);
      for (const auto& p : prev.level1_positions)
        EXPECT_TRUE(std::binary_search(dec.level1_positions.begin(), dec.level1_positions.end(), p));
    }
  }
}

TEST(Walls, BoundHoldsForEveryWall) {
  auto ns = BilinearLattice::hyperbolic_plane();
  for (long long n = 1; n <= 8; ++n) {
    auto v = MukaiVector::hilbert(2, n);
    Rational half = mukai_pair(v, v, ns) / 2;
    for (const auto& w : enumerate_v_walls(v, CartanType::Am1)) {
      Rational p = mukai_pair(w.kclass, v, ns);
      EXPECT_LE(abs(p), half);
      EXPECT_EQ(w.pairing, p);
    }
  }
}

TEST(Walls, D4IncludesSimpleRoots) {
  auto ns = BilinearLattice::ns_lattice(CartanType::D4);
  auto walls = enumerate_v_walls(MukaiVector::hilbert(ns.rank(), 2), CartanType::D4);
  auto fin = build_finite(CartanType::D4);
  for (int i = 0; i < fin.rank; ++i) {
    bool found = false;
    for (const auto& w : walls)
      if (w.root.m == 0 && (w.root.finite == fin.simple_root(i) || w.root.finite == (-EllipticRoot{fin.simple_root(i), 0, 0}).finite))
        found = true;
    EXPECT_TRUE(found) << i;
  }
}

TEST(Walls, WildTypesRejected) {
  EXPECT_THROW(chamber_decomposition(2, CartanType::A1), UnsupportedType);
  EXPECT_THROW(chamber_decomposition(2, CartanType::A0), UnsupportedType);
  EXPECT_THROW(chamber_decomposition(2, CartanType::G2), UnsupportedType);
  EXPECT_THROW(chamber_decomposition(0, CartanType::Am1), DomainError);
}

TEST(BayerMacri, ZeroBField) {
  auto ns = BilinearLattice::hyperbolic_plane();
  QVector h{Rational(2), Rational(1)};
  auto v = MukaiVector::hilbert(2, 3);
  auto bm = bayer_macri_class(h, {Rational(0), Rational(0)}, v, ns);
  EXPECT_EQ(bm.r_sigma, Rational(0));
  EXPECT_EQ(bm.s_sigma, Rational(0));
  Rational hh = ns.pair(h, h);
  EXPECT_EQ(bm.c_sigma, (QVector{(-3 - hh / 2) * h[0], (-3 - hh / 2) * h[1]}));
  auto scaled = bayer_macri_class(h, {Rational(2), Rational(4)}, v, ns);
  auto base = bayer_macri_class(h, {Rational(1), Rational(2)}, v, ns);
  EXPECT_EQ(scaled.r_sigma, 2 * base.r_sigma);
  EXPECT_EQ(scaled.s_sigma, 2 * base.s_sigma);
}

TEST(Svg, Deterministic) {
  auto dec = chamber_decomposition(12, CartanType::Am1);
  std::string a = emit_chamber_svg(dec), b = emit_chamber_svg(dec);
  EXPECT_EQ(a, b);
  auto start = a.find("<g id=\"walls\"");
  auto stop = a.find("</g>", start);
  ASSERT_NE(start, std::string::npos);
  std::size_t rays = 0;
  for (auto pos = a.find("<line", start); pos < stop; pos = a.find("<line", pos + 1)) ++rays;
  EXPECT_EQ(rays, dec.walls.size());
}

TEST(Svg, EmptyDecompositionHasAxesOnly) {
  ChamberDecomposition empty;
  std::string s = emit_chamber_svg(empty);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}

TEST(Svg, GoldenN4) {
  std::string golden = read_file(std::string(ELLWALL_GOLDEN_DIR) + "/chambers_am1_n4.svg");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(emit_chamber_svg(chamber_decomposition(4, CartanType::Am1)), golden);
}
