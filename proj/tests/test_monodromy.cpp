#include <gtest/gtest.h>

#include "ellwall/errors.hpp"
#include "ellwall/fock.hpp"
#include "oracles/rho_s_generating.hpp"

using namespace ellwall;

TEST(RhoF, PointModesKeepSign) {
  for (int n = 1; n <= 4; ++n) {
    Monomial m(n, Mode{1, Label::Pt});
    FockState s = FockState::from_modes(0, m);
    EXPECT_EQ(monodromy_f(s, n), FockState::from_modes(-n, m));
  }
}

TEST(RhoF, EvenModeFlipsSign) {
  FockState s = FockState::from_modes(0, {{2, Label::E}});
  EXPECT_EQ(monodromy_f(s, 2), FockState::from_modes(-2, {{2, Label::E}}, QH(-1)));
}

TEST(RhoF, InvolutionOnWeightThree) {
  std::vector<Label> all(kAllLabels.begin(), kAllLabels.end());
  for (const auto& m : monomials_of_energy(3, all)) {
    FockState s = FockState::from_modes(1, m);
    EXPECT_EQ(monodromy_f(monodromy_f(s, 3), 3), s);
  }
}

TEST(RhoF, MixedWeightRejected) {
  FockState s = FockState::from_modes(0, {{1, Label::E}}) + FockState::from_modes(0, {{2, Label::E}});
  EXPECT_THROW(monodromy_f(s, 2), DomainError);
}

TEST(RhoS, VacuumFixed) { EXPECT_EQ(monodromy_s(FockState::vacuum(), 4), FockState::vacuum()); }

TEST(RhoS, SingleMode) {
  FockState s = FockState::from_modes(0, {{1, Label::E}});
  FockState expect = w_general(1, -1, Label::E, 6).apply(FockState::vacuum());
  EXPECT_EQ(monodromy_s(s, 6), expect);
}

TEST(RhoS, TwoModesAgainstGeneratingFunction) {
  FockState s = FockState::from_modes(0, {{1, Label::E}, {2, Label::E}});
  EXPECT_EQ(monodromy_s(s, 6), oracle::rho_s_on_e_modes({2, 1}, 0));
  FockState direct = w_general(1, -1, Label::E, 6).apply(w_general(1, -2, Label::E, 6).apply(FockState::vacuum()));
  EXPECT_EQ(monodromy_s(s, 6), direct);
}

TEST(RhoS, PointLabelNeedsExtendedConventions) {
  FockState s = FockState::from_modes(0, {{1, Label::Pt}});
  EXPECT_THROW(monodromy_s(s, 4), ConventionError);
}
