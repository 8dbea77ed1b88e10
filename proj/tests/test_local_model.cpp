#include <gtest/gtest.h>

#include "ellwall/errors.hpp"
#include "ellwall/local_model.hpp"
#include "oracles/jordan_rank.hpp"

using namespace ellwall;

namespace {
BimoduleParam param(int k, std::vector<long long> a) {
  BimoduleParam p;
  p.k = k;
  for (long long x : a) p.a.push_back(Cyclotomic(k, rat(x)));
  return p;
}
}  // namespace

TEST(HH0, Table) {
  EXPECT_EQ(hh0_dim(1), 2);
  EXPECT_EQ(hh0_dim(2), 6);
  EXPECT_EQ(hh0_dim(3), 8);
  EXPECT_EQ(hh0_dim(4), 9);
  EXPECT_EQ(hh0_dim(6), 10);
  EXPECT_THROW(hh0_dim(5), DomainError);
  for (int k : {1, 2, 3}) {
    auto b = hh0_breakdown(k);
    ASSERT_TRUE(b);
    int sum = 0;
    for (int x : *b) sum += x;
    EXPECT_EQ(sum, hh0_dim(k));
  }
}

TEST(CharValues, Examples) {
  for (const auto& v : char_values(BimoduleParam::delta_e(4))) EXPECT_EQ(v.value, Cyclotomic::one(4));
  auto two = param(2, {0, 1});
  EXPECT_EQ(char_value(two, 0), Cyclotomic(2, rat(1)));
  EXPECT_EQ(char_value(two, 1), Cyclotomic(2, rat(-1)));
  auto three = param(3, {0, 1, 0});
  for (int r = 0; r < 3; ++r) EXPECT_EQ(char_value(three, r), Cyclotomic::zeta_power(3, r));
  EXPECT_EQ(char_value(three, 5), char_value(three, 2));
}

TEST(Tensor, CaseSplit) {
  auto p = param(2, {1, 1});
  EXPECT_EQ(tensor_simple(1, p).kind, TensorKind::Split);
  EXPECT_EQ(tensor_simple(0, p).kind, TensorKind::Extension);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(tensor_simple(i, BimoduleParam::delta_e(5)).kind, TensorKind::Extension);
  EXPECT_EQ(tensor_simple(0, p).i_minus_1, 1);
  EXPECT_EQ(tensor_table_csv(p), "i,A_i,kind\n0,2,ext\n1,0,split\n");
}

TEST(YMatrix, Shape) {
  auto y = y_matrix(1, BimoduleParam::delta_e(1));
  ASSERT_EQ(y.rows(), 4u);
  EXPECT_EQ(y(0, 1), Cyclotomic::one(1));
  EXPECT_EQ(y(0, 2), Cyclotomic::one(1));
  EXPECT_EQ(y(1, 3), Cyclotomic::one(1));
  EXPECT_EQ(y(2, 3), Cyclotomic::one(1));
  EXPECT_EQ(y(0, 3), Cyclotomic::zero(1));
  EXPECT_EQ(nilpotent_jordan_type(y_matrix(0, BimoduleParam::zero(2))), (std::vector<int>{1, 1}));
}

TEST(Splitting, Examples) {
  EXPECT_TRUE(splits(3, BimoduleParam::zero(4)));
  for (int n = 0; n <= 4; ++n) EXPECT_FALSE(splits(n, BimoduleParam::delta_e(3)));
  auto p = param(2, {0, 1});
  EXPECT_EQ(trace_a(1, p), Cyclotomic::zero(2));
  EXPECT_TRUE(splits(1, p));
  EXPECT_EQ(splits(1, p), oracle::splits_by_rank(2, p.a, 1));
}

TEST(RootHyperplanes, SimpleRootsAndDelta) {
  auto p = param(3, {2, -1, 5});
  for (int i = 0; i < 3; ++i) {
    IntVector beta(3, 0);
    beta[i] = 1;
    EXPECT_EQ(root_hyperplane(3, beta).evaluate(p), char_value(p, i));
  }
  EXPECT_EQ(root_hyperplane(3, {1, 1, 1}).evaluate(p), Cyclotomic(3, rat(6)));
  EXPECT_THROW(root_hyperplane(3, {2, 2, 2}), DomainError);
}

TEST(RootHyperplanes, SimpleFunctionalsIndependent) {
  for (int k : {2, 3, 4, 6}) {
    // The functionals are rows of the character table; stack them over Q.
    int phi = euler_phi(k);
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < k; ++i) {
      IntVector beta(k, 0);
      beta[i] = 1;
      auto f = root_hyperplane(k, beta);
      for (int s = 0; s < phi; ++s) {
        std::vector<Rational> row;
        for (int g = 0; g < k; ++g) {
          auto m = f.coeff[g].multiplication_matrix();
          for (int t = 0; t < phi; ++t) row.push_back(m[s][t]);
        }
        rows.push_back(row);
      }
    }
    EXPECT_EQ(oracle::qrank(rows), static_cast<std::size_t>(k * phi)) << k;
  }
}

TEST(Preprojective, Examples) {
  PreprojRep zero;
  zero.k = 2;
  zero.dims = {1, 1};
  for (int i = 0; i < 2; ++i) {
    zero.cw.push_back(CMatrix(1, 1, Cyclotomic::zero(2)));
    zero.ccw.push_back(CMatrix(1, 1, Cyclotomic::zero(2)));
    zero.lambda.push_back(Cyclotomic::zero(2));
  }
  EXPECT_TRUE(preproj_check(zero, BimoduleParam::zero(2)).ok());

  PreprojRep one;
  one.k = 1;
  one.dims = {1};
  one.cw = {CMatrix(1, 1, Cyclotomic::zero(1))};
  one.ccw = {CMatrix(1, 1, Cyclotomic::zero(1))};
  one.lambda = {Cyclotomic::one(1)};
  auto rep = preproj_check(one, BimoduleParam::delta_e(1));
  EXPECT_FALSE(rep.relation_holds);
  EXPECT_TRUE(rep.lambda_matches);
  EXPECT_EQ(rep.residuals[0](0, 0), Cyclotomic(1, rat(-1)));
}

TEST(Preprojective, JetModuleNeedsZeroTrace) {
  auto p = param(2, {0, 1});
  EXPECT_TRUE(preproj_check(jet_module(1, p), p).ok());
  EXPECT_TRUE(preproj_check(jet_module(3, p, -1), p, -1).ok());
  auto q = BimoduleParam::delta_e(2);
  EXPECT_FALSE(preproj_check(jet_module(1, q), q).relation_holds);
}
