#include <gtest/gtest.h>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"

using namespace ellwall;

namespace {
CohClass cls(Label l) { return CohClass::basis(l); }
const std::vector<Label> kLabels(kAllLabels.begin(), kAllLabels.end());
}  // namespace

TEST(Labels, PairingAndParity) {
  EXPECT_EQ(label_pairing(Label::E, Label::Pt), 1);
  EXPECT_EQ(label_pairing(Label::SigmaPlus, Label::SigmaMinus), 1);
  EXPECT_EQ(label_pairing(Label::SigmaMinus, Label::SigmaPlus), -1);
  EXPECT_EQ(label_pairing(Label::E, Label::E), 0);
  for (Label l : kAllLabels) {
    EXPECT_EQ(parse_label(to_string(l)), l);
    EXPECT_NE(label_pairing(l, dual_label(l)), 0);
  }
  EXPECT_TRUE(is_odd(Label::SigmaPlus));
  EXPECT_FALSE(is_odd(Label::Pt));
}

TEST(StarProducts, Tables) {
  auto sp = star(Label::SigmaPlus, Label::SigmaMinus);
  EXPECT_EQ(sp.sign, 1);
  EXPECT_EQ(sp.label, Label::E);
  EXPECT_EQ(star(Label::SigmaMinus, Label::SigmaPlus).sign, -1);
  EXPECT_EQ(star(Label::E, Label::E).sign, 0);
  EXPECT_EQ(star(Label::Pt, Label::E).label, Label::E);
  auto cup = star(Label::SigmaPlus, Label::SigmaMinus, StarProduct::Cup);
  EXPECT_EQ(cup.label, Label::Pt);
  EXPECT_EQ(star(Label::E, Label::E, StarProduct::Cup).label, Label::E);
  EXPECT_EQ(star(Label::Pt, Label::Pt, StarProduct::Cup).sign, 0);
}

TEST(SL2, LabelAction) {
  SL2 id{{{1, 0}, {0, 1}}}, s{{{0, -1}, {1, 0}}};
  for (Label l : kAllLabels) EXPECT_EQ(sl2_label_action(id, cls(l)), cls(l));
  EXPECT_EQ(sl2_label_action(s, cls(Label::SigmaPlus)), cls(Label::SigmaMinus));
  CohClass minus_sp = cls(Label::SigmaPlus);
  minus_sp.c[1] = -1;
  EXPECT_EQ(sl2_label_action(s, cls(Label::SigmaMinus)), minus_sp);
  EXPECT_EQ(pairing(sl2_label_action(s, cls(Label::SigmaPlus)), sl2_label_action(s, cls(Label::SigmaMinus))),
            Rational(1));
  SL2 bad{{{2, 0}, {0, 1}}};
  EXPECT_THROW(sl2_label_action(bad, cls(Label::E)), DomainError);
}

TEST(Monomials, CanonicalSigns) {
  Monomial m{{1, Label::SigmaPlus}, {2, Label::SigmaMinus}};
  EXPECT_EQ(canonicalize(m), -1);
  Monomial rep{{1, Label::SigmaPlus}, {1, Label::SigmaPlus}};
  EXPECT_EQ(canonicalize(rep), 0);
  EXPECT_EQ(monomials_of_energy(2, {Label::E}).size(), 2u);
  EXPECT_EQ(monomial_basis(2, {Label::E}).size(), 4u);
}

TEST(Heisenberg, AlphaExamples) {
  FockState vac = FockState::vacuum();
  EXPECT_TRUE(alpha_apply(1, cls(Label::E), vac).is_zero());
  FockState one = alpha_apply(-1, cls(Label::Pt), vac);
  EXPECT_EQ(alpha_apply(1, cls(Label::E), one), vac);
  EXPECT_THROW(alpha_apply(-3, cls(Label::E), vac, 2), TruncationError);
}

TEST(Heisenberg, CommutatorOnBasis) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : monomial_basis(4, kLabels)) {
      FockState s = FockState::from_modes(0, m);
      FockState lhs = alpha_apply(n, cls(Label::E), alpha_apply(-n, cls(Label::Pt), s)) -
                      alpha_apply(-n, cls(Label::Pt), alpha_apply(n, cls(Label::E), s));
      EXPECT_EQ(lhs, s * QH(n));
    }
}

TEST(WSmall, Normalization) {
  const int N = 6;
  for (int n = 1; n <= 4; ++n) {
    OperatorExpr we = w_small(n, Label::E, N), wp = w_small(n, Label::Pt, N);
    OperatorExpr ae = OperatorExpr::mode(n, Label::E, N) * QH(rat(1, n));
    OperatorExpr ap = OperatorExpr::mode(n, Label::Pt, N) * QH(n);
    EXPECT_TRUE(equal_up_to(we, ae, N));
    EXPECT_TRUE(equal_up_to(wp, ap, N));
    OperatorExpr c = supercommutator(w_small(n, Label::E, N), w_small(-n, Label::Pt, N));
    EXPECT_TRUE(equal_up_to(c, OperatorExpr::scalar(QH(n), N), N));
  }
  EXPECT_THROW(w_small(0, Label::E, N), DomainError);
}

TEST(Vertex, ZeroChargeIsIdentity) {
  VertexField y(0, 6);
  EXPECT_TRUE(equal_up_to(y.mode(0), OperatorExpr::identity(6), 6));
  for (int n : {-3, -1, 1, 2}) EXPECT_TRUE(y.mode(n).is_zero()) << n;
}

TEST(Vertex, ConstantModeOnVacuum) {
  VertexField y(1, 6);
  EXPECT_EQ(y.mode(0).apply(FockState::vacuum()), FockState::vacuum(1));
  // Mode z^1 creates alpha_{-1}(E) with coefficient m = 1.
  FockState expect = FockState::from_modes(1, {{1, Label::E}});
  EXPECT_EQ(y.mode(-1).apply(FockState::vacuum()), expect);
}

TEST(Vertex, HeisenbergCommutator) {
  const int N = 5;
  for (int m : {-1, 2}) {
    VertexField y(m, N + 3);
    VertexField ref(m, N);
    for (int k : {-2, 1, 3})
      for (int n = -3; n <= 3; ++n) {
        OperatorExpr lhs = supercommutator(OperatorExpr::mode(k, Label::Pt, 2 * N + 8), y.mode(n));
        EXPECT_TRUE(equal_up_to(lhs, ref.mode(n + k) * QH(m), N)) << m << " " << k << " " << n;
      }
  }
}

TEST(WGeneral, ReducesToSmallAtSlopeZero) {
  for (Label l : kAllLabels)
    for (int n : {-2, -1, 1, 3}) EXPECT_TRUE(equal_up_to(w_general(0, n, l, 6), w_small(n, l, 6), 6));
}

TEST(WGeneral, SlopeOneE) {
  VertexField y(1, 6);
  EXPECT_TRUE(equal_up_to(w_general(1, 0, Label::E, 6), y.mode(0), 6));
  EXPECT_TRUE(equal_up_to(w_general(2, 1, Label::E, 6), VertexField(2, 6).mode(1) * QH(rat(1, 2)), 6));
}

TEST(WGeneral, PointClassNeedsExtendedConventions) {
  EXPECT_THROW(w_general(1, 0, Label::Pt, 4), ConventionError);
  ExtendedConventions ext;
  ext.enabled = true;
  EXPECT_NO_THROW(w_general(1, 0, Label::Pt, 4, ext));
}

TEST(Bracket, CentralPair) {
  auto p = bracket_pair({0, 1, Label::E}, {0, -1, Label::Pt}, 6);
  EXPECT_TRUE(p.central);
  EXPECT_EQ(p.status, PairStatus::Central);
  EXPECT_EQ(p.value, Rational(1));
}

TEST(Bracket, OddSquareVanishes) {
  auto p = bracket_pair({0, 1, Label::SigmaPlus}, {0, 1, Label::SigmaPlus}, 6);
  EXPECT_EQ(p.status, PairStatus::Zero);
  EXPECT_FALSE(p.target);
}

TEST(Bracket, SlopeOneWithSlopeZero) {
  // E * E = 0 for the convolution product, so the bracket predicts zero and
  // the commutator vanishes.
  auto p = bracket_pair({1, 0, Label::E}, {0, 1, Label::E}, 6);
  EXPECT_EQ(p.status, PairStatus::Zero);
  auto q = bracket_pair({1, 0, Label::E}, {0, 1, Label::Pt}, 6);
  EXPECT_EQ(q.status, PairStatus::Proportional);
  ASSERT_TRUE(q.target);
  EXPECT_EQ(*q.target, (Generator{1, 1, Label::E}));
}

TEST(Bracket, CupProductMismatchWitness) {
  // With the cup product E is the unit, so E * E = E and the bracket would
  // predict -w^{1,1}_E; the commutator is zero. Kept as a recorded witness.
  auto p = bracket_pair({1, 0, Label::E}, {0, 1, Label::E}, 6, StarProduct::Cup);
  EXPECT_EQ(p.status, PairStatus::Mismatch);
  EXPECT_FALSE(p.witness.empty());
}

TEST(Bracket, SmallSweepMatches) {
  BracketOptions o;
  o.truncation = 5;
  o.a_max = 1;
  o.b_max = 1;
  auto rep = bracket_sweep(o);
  EXPECT_TRUE(rep.match()) << (rep.failures.empty() ? "" : rep.failures.front());
  ASSERT_TRUE(rep.c_t);
  EXPECT_EQ(*rep.c_t, Rational(1));
  for (const auto& f : rep.rescale) EXPECT_NE(sgn(f.lambda), 0);
}

TEST(Bracket, CupSweepFails) {
  BracketOptions o;
  o.truncation = 4;
  o.b_max = 1;
  o.product = StarProduct::Cup;
  EXPECT_FALSE(bracket_sweep(o).match());
}
