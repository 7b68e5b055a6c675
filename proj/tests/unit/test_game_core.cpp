#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "scg/errors.hpp"
#include "scg/game_io.hpp"
#include "scg/oracle.hpp"
#include "scg/reductions.hpp"

using namespace scg;
using namespace scg::testing;

namespace {

Game two_resource_symmetric() {
  return tclass_game(2, {FollowerClass{2, singletons({0, 1})}}, {0, 1}, {{1, 3}, {2, 5}}, {{1, 3}, {2, 5}});
}

bool has_message(const ValidationReport& r, const std::string& text) {
  for (const auto& v : r.violations) {
    if (v.message.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(Validate, SymmetricSingletonGameIsValid) {
  const auto report = validate(two_resource_symmetric());
  EXPECT_TRUE(report.ok()) << report.summary();
}

TEST(Validate, RejectsNonSingletonActionInTclassGame) {
  Game g = two_resource_symmetric();
  g.classes[0].actions.push_back({0, 1});
  EXPECT_TRUE(has_message(validate(g), "singleton required"));
}

TEST(Validate, RejectsShortCostRow) {
  Game g = two_resource_symmetric();
  auto rows = g.follower_costs.rows();
  rows[1].resize(2);
  g.follower_costs = CostTable(rows);
  EXPECT_TRUE(has_message(validate(g), "cost table too short"));
}

TEST(Validate, RejectsOutOfRangeResourceAndEmptyClass) {
  Game g = two_resource_symmetric();
  g.leader_actions.push_back({5});
  g.classes.push_back(FollowerClass{0, singletons({0})});
  EXPECT_GE(validate(g).violations.size(), 2u);
}

TEST(Validate, MonotoneFlagIsChecked) {
  Game g = two_resource_symmetric();
  g.follower_costs = padded(g, {{3, 1}, {2, 5}}, true);
  EXPECT_FALSE(validate(g).ok());
}

TEST(GameShape, CountsAndRequiredLengths) {
  const Game g = two_resource_symmetric();
  EXPECT_EQ(g.follower_count(), 2);
  EXPECT_EQ(g.player_count(), 3);
  EXPECT_EQ(g.max_follower_congestion(), (std::vector<int>{2, 2}));
  EXPECT_EQ(g.required_cost_length(), (std::vector<int>{5, 5}));
}

TEST(GameShape, ExpandToGeneralKeepsFollowers) {
  const Game g = two_resource_symmetric();
  const Game e = expand_to_general(g);
  EXPECT_EQ(e.kind, GameKind::general_scg);
  EXPECT_EQ(e.followers.size(), 2u);
  EXPECT_TRUE(has_symmetric_singleton_followers(e));
  EXPECT_TRUE(validate(e).ok()) << validate(e).summary();
}

TEST(GameIo, RoundTripRandomTclass) {
  const Game g = small_tclass(11, 2, 4, 3, false);
  const Game back = load_game(save_game(g));
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.metadata, g.metadata);
}

TEST(GameIo, RoundTripGeneral) {
  const Game g = small_scg(5, 4, 4, 2, 3, true);
  EXPECT_EQ(load_game(save_game(g)), g);
}

TEST(GameIo, MalformedRationalIsParseError) {
  auto doc = nlohmann::json::parse(save_game(two_resource_symmetric()));
  doc["follower_costs"][1][0] = "3/";
  try {
    load_game(doc.dump());
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "follower_costs[1][0]");
  }
}

TEST(GameIo, SyntaxErrorReportsLine) {
  try {
    load_game("{\n \"kind\": \"tclass_sscg\",\n oops\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(GameIo, MissingFieldNamesIt) {
  auto doc = nlohmann::json::parse(save_game(two_resource_symmetric()));
  doc.erase("leader_costs");
  try {
    load_game(doc.dump());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("leader_costs"), std::string::npos);
  }
}

TEST(GameIo, RationalsStayExact) {
  EXPECT_EQ(rational_from_json(nlohmann::json("5/3"), "x"), Q(5, 3));
  EXPECT_EQ(rational_from_json(nlohmann::json::parse("0.1"), "x"), Q(1, 10));
  EXPECT_EQ(rational_to_json(Q(4, 2)), nlohmann::ordered_json(2));
  EXPECT_EQ(rational_to_json(Q(-1, 3)), nlohmann::ordered_json("-1/3"));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(GameIo, ThreeSatGameReloadsToSameOseValue) {
  CnfInstance cnf{2, {{Literal{0, false}, Literal{1, false}, Literal{0, true}}}};
  const Game g = reduce_3sat(cnf, Q(1, 4));
  const Game back = load_game(save_game(g));
  EXPECT_EQ(back, g);
  EXPECT_EQ(ose_oracle_mixed_leader(back).leader_cost, ose_oracle_mixed_leader(g).leader_cost);
}

TEST(Outcomes, ProfileFromConfigurationsMatchesCongestion) {
  const Game g = small_tclass(3, 2, 4, 3, false);
  Configurations cfg;
  cfg.counts.assign(2, std::vector<int>(4, 0));
  for (int t = 0; t < 2; ++t) cfg.counts[t][g.classes[t].actions[0][0]] = g.classes[t].count;
  const Profile prof = profile_from_configurations(g, cfg);
  EXPECT_EQ(congestion(expand_to_general(g), prof), congestion(g, cfg));
}

TEST(Outcomes, ViolationsCatchWrongCounts) {
  const Game g = two_resource_symmetric();
  EXPECT_TRUE(outcome_violations(g, Configurations{{{1, 1}}}).empty());
  EXPECT_FALSE(outcome_violations(g, Configurations{{{2, 1}}}).empty());
  EXPECT_FALSE(outcome_violations(g, Profile{{0, 1}}).empty());
}

TEST(Strategies, MarginalsAndViolations) {
  Game g = small_scg(2, 4, 3, 2, 2, false);
  LeaderStrategy s;
  s.probabilities = {Q(1, 3), Q(2, 3)};
  const auto m = resource_marginals(g, s);
  Rational total = 0;
  for (const auto& p : m) total += p;
  EXPECT_EQ(total, Q(2));  // two resources per action
  EXPECT_TRUE(strategy_violations(g, s).empty());
  s.probabilities = {Q(1, 3), Q(1, 3)};
  EXPECT_FALSE(strategy_violations(g, s).empty());
}
