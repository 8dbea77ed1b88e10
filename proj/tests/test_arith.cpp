#include <gtest/gtest.h>

#include "ellwall/cyclotomic.hpp"
#include "ellwall/matrix.hpp"
#include "ellwall/poly.hpp"
#include "ellwall/qh.hpp"

using namespace ellwall;

TEST(Rational, LongLongOverloads) {
  Rational q = rat(3, 4);
  EXPECT_EQ(q * 4LL, Rational(3));
  EXPECT_EQ(4LL * q, Rational(3));
  EXPECT_EQ(q + 1LL, rat(7, 4));
  EXPECT_EQ(1LL - q, rat(1, 4));
}

TEST(QH, ArithmeticAndParse) {
  QH x = QH(2) + QH::hbar() * QH(rat(1, 2));
  EXPECT_EQ(x.degree(), 1);
  EXPECT_EQ(QH::parse(x.to_string()), x);
  Rational q;
  EXPECT_TRUE((x * QH(3)).proportional_to(x, &q));
  EXPECT_EQ(q, Rational(3));
}

TEST(Poly, EvaluateAndSubstitute) {
  Poly b = Poly::var("b"), c = Poly::var("c");
  Poly p = b * c + Poly(2) * b;
  EXPECT_EQ(p.evaluate({{"b", Rational(3)}, {"c", Rational(-1)}}), Rational(3));
  EXPECT_EQ(p.substitute("c", Poly(0)), Poly(2) * b);
  EXPECT_EQ(p.coefficient("c", 1), b);
}

TEST(Cyclotomic, ZetaRelations) {
  for (int k : {1, 2, 3, 4, 6}) {
    Cyclotomic s = Cyclotomic::zero(k);
    for (int j = 0; j < k; ++j) s += Cyclotomic::zeta_power(k, j);
    EXPECT_EQ(s, k == 1 ? Cyclotomic::one(1) : Cyclotomic::zero(k)) << k;
    EXPECT_EQ(Cyclotomic::zeta_power(k, k), Cyclotomic::one(k));
  }
  Cyclotomic z = Cyclotomic::zeta_power(6, 1);
  EXPECT_EQ(z * z.inverse(), Cyclotomic::one(6));
  EXPECT_EQ(Cyclotomic::parse(6, z.to_string()), z);
}

TEST(Matrix, InverseAndRank) {
  QMatrix m(2, 2, Rational(0));
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  auto inv = inverse(m, Rational(0), Rational(1));
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, QMatrix::identity(2, Rational(0), Rational(1)));
  m(1, 0) = 2;
  m(1, 1) = 1;
  EXPECT_EQ(rank(m), 1u);
  EXPECT_FALSE(inverse(m, Rational(0), Rational(1)));
}
