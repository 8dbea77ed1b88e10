#include <gtest/gtest.h>

#include "ellwall/errors.hpp"
#include "ellwall/serialize.hpp"
#include "ellwall/verify.hpp"

using namespace ellwall;

TEST(Serialize, MetadataEchoesOverrides) {
  Conventions c;
  c.pairing_sign = -1;
  c.star = StarProduct::Cup;
  c.ext.enabled = true;
  json m = metadata(c);
  EXPECT_EQ(m["paper_conventions"]["pairing_sign"], -1);
  EXPECT_EQ(m["paper_conventions"]["star_product"], "cup");
  EXPECT_EQ(m["paper_conventions"]["extended"]["enabled"], true);
  EXPECT_EQ(m["tool_version"], tool_version());
}

TEST(Serialize, FockStateRoundTrip) {
  FockState s = FockState::from_modes(2, {{3, Label::SigmaPlus}, {1, Label::E}}, QH(rat(-3, 2)));
  s += FockState::from_modes(2, {{4, Label::Pt}}, QH::hbar());
  EXPECT_EQ(fock_state_from_json(to_json(s)), s);
  EXPECT_THROW(fock_state_from_json(json::parse(R"({"charge": 0, "terms": [{"modes": [[0, "E"]], "coeff": "1"}]})")),
               DomainError);
}

TEST(Serialize, FockStateCanonicalizesWithSign) {
  json j = json::parse(R"({"charge": 0, "terms": [{"modes": [[1, "s+"], [2, "s-"]], "coeff": "1"}]})");
  EXPECT_EQ(fock_state_from_json(j), FockState::from_modes(0, {{2, Label::SigmaMinus}, {1, Label::SigmaPlus}}, QH(-1)));
}

TEST(Serialize, WallsSchema) {
  json j = to_json(chamber_decomposition(3, CartanType::Am1));
  EXPECT_EQ(j["type"], "A-1");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["chambers"], j["walls"].size() + 1);
  for (const auto& w : j["walls"]) {
    EXPECT_TRUE(w.contains("root"));
    EXPECT_TRUE(w.contains("kclass"));
    EXPECT_TRUE(w.contains("level1_pos"));
  }
  EXPECT_TRUE(j["assumptions"].is_array());
}

TEST(Serialize, BracketReportSchema) {
  BracketOptions o;
  o.truncation = 4;
  o.b_max = 1;
  json j = to_json(bracket_sweep(o));
  for (const char* key : {"lhs_params", "rhs_params", "match", "rescale_factors", "central", "truncation"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Serialize, VerifyReportIsStable) {
  VerifyOptions o;
  o.only = {1, 6, 9};
  o.oracles = builtin_oracles();
  auto a = verify_report(run_criteria(o), o).dump();
  auto b = verify_report(run_criteria(o), o).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"seed\""), std::string::npos);
}
