#include <gtest/gtest.h>

#include <map>

#include "ellwall/errors.hpp"
#include "ellwall/root_system.hpp"
#include "oracles/e8_explicit.hpp"

using namespace ellwall;

namespace {
EllipticRoot root(IntVector fin, long long m, long long n) { return EllipticRoot{std::move(fin), m, n}; }
}  // namespace

TEST(FiniteRoots, Counts) {
  EXPECT_EQ(build_finite(CartanType::A1).roots.size(), 2u);
  EXPECT_EQ(build_finite(CartanType::A2).roots.size(), 6u);
  EXPECT_EQ(build_finite(CartanType::D4).roots.size(), 24u);
  EXPECT_EQ(build_finite(CartanType::E6).roots.size(), 72u);
  EXPECT_EQ(build_finite(CartanType::E7).roots.size(), 126u);
  EXPECT_EQ(build_finite(CartanType::E8).roots.size(), 240u);
}

TEST(FiniteRoots, E8MatchesCoordinateModel) {
  auto fin = build_finite(CartanType::E8);
  auto explicit_roots = oracle::e8_roots_explicit();
  ASSERT_EQ(explicit_roots.size(), fin.roots.size());
  // The Weyl group is transitive on roots, so the pairing histogram against a
  // single root is an invariant of the root system.
  std::map<long long, int> mine;
  for (const auto& b : fin.roots) ++mine[to_integer(fin.pair(fin.roots.front(), b))];
  EXPECT_EQ(mine, oracle::e8_pairing_histogram());
  EXPECT_EQ(mine[1], 56);
  EXPECT_EQ(mine[0], 126);
}

TEST(FiniteRoots, HighestRootIsDominant) {
  for (CartanType t : {CartanType::A2, CartanType::D4, CartanType::E6, CartanType::E7, CartanType::E8}) {
    auto fin = build_finite(t);
    ASSERT_TRUE(fin.is_root(fin.highest_root));
    for (int i = 0; i < fin.rank; ++i) EXPECT_GE(fin.pair(fin.highest_root, fin.simple_root(i)), 0) << to_string(t);
  }
}

TEST(EllipticRoots, Am1IsPunctured) {
  EllipticRootSystem sys(CartanType::Am1);
  EXPECT_EQ(sys.roots_in_box(1, 1).size(), 8u);
  for (const auto& r : sys.roots_in_box(3, 3)) EXPECT_TRUE(sys.is_imaginary(r));
  EXPECT_FALSE(sys.contains(root({}, 0, 0)));
}

TEST(EllipticRoots, BoxExamples) {
  EllipticRootSystem a1(CartanType::A1);
  auto small = a1.roots_in_box(0, 0, 1);
  ASSERT_EQ(small.size(), 2u);
  EXPECT_EQ(small[0], -small[1]);
  EllipticRootSystem d4(CartanType::D4);
  EXPECT_EQ(d4.roots_in_box(1, 0).size(), 3u * 24u + 2u);
}

TEST(EllipticRoots, RealAndImaginary) {
  EllipticRootSystem a1(CartanType::A1);
  EXPECT_TRUE(a1.is_imaginary(root({0}, 1, 0)));
  EXPECT_TRUE(a1.is_real(root({1}, 0, 1)));
  EXPECT_TRUE(a1.is_imaginary(root({0}, 2, 3)));
  EXPECT_THROW(a1.validate(root({2}, 0, 0)), DomainError);
}

TEST(EllipticRoots, AffineLayerCountsConstant) {
  EllipticRootSystem d4(CartanType::D4);
  std::map<std::pair<IntVector, long long>, int> per_affine;
  for (const auto& r : d4.roots_in_box(2, 2)) {
    auto a = d4.affine_image(r);
    if (a) ++per_affine[{a->finite, a->k}];
  }
  ASSERT_FALSE(per_affine.empty());
  int first = per_affine.begin()->second;
  for (const auto& [k, v] : per_affine) EXPECT_EQ(v, first);
}

TEST(EllipticRoots, CoordsRoundTrip) {
  EllipticRootSystem e6(CartanType::E6);
  for (const auto& r : e6.roots_in_box(1, 1, 3)) EXPECT_EQ(e6.from_coords(e6.coords(r)), r);
}

TEST(CartanTypes, ParseAndSeries) {
  EXPECT_EQ(parse_cartan_type("A-1"), CartanType::Am1);
  EXPECT_EQ(parse_cartan_type("E8"), CartanType::E8);
  EXPECT_THROW(parse_cartan_type("B3"), DomainError);
  EXPECT_FALSE(deligne_series().empty());
}

TEST(CyclicQuiver, Roots) {
  EXPECT_TRUE(CyclicQuiverRoots::is_root(3, {1, 0, 0}));
  EXPECT_TRUE(CyclicQuiverRoots::is_real(3, {1, 1, 0}));
  EXPECT_FALSE(CyclicQuiverRoots::is_real(3, CyclicQuiverRoots::delta(3)));
  EXPECT_FALSE(CyclicQuiverRoots::is_root(3, {2, 0, 0}));
}
