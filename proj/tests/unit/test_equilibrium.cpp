#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "scg/enumerate.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/reductions.hpp"

using namespace scg;
using namespace scg::testing;

namespace {

Game split_game() {
  return tclass_game(2, {FollowerClass{2, singletons({0, 1})}}, {0, 1}, {{1, 3}, {2, 5}}, {{1, 3}, {2, 5}});
}

LeaderStrategy no_mass(const Game& g) {
  LeaderStrategy s;
  s.probabilities.assign(g.leader_actions.size(), Q(0));
  return s;
}

}  // namespace

TEST(ExpectedCost, PureCommitments) {
  const Game g = split_game();
  const ExpectedCostView<Rational> none(g.follower_costs, {Q(0), Q(0)});
  const ExpectedCostView<Rational> full(g.follower_costs, {Q(1), Q(0)});
  EXPECT_EQ(none(0, 0), Q(0));
  EXPECT_EQ(none(0, 2), Q(3));
  EXPECT_EQ(full(0, 0), Q(1));
  EXPECT_EQ(full(0, 1), Q(3));
}

TEST(ExpectedCost, MixedMassOnKPartitionResource) {
  // c(1) = 2/K, c(2) = C_y with K = 2, leader mass (2K−1)/(2K).
  CostTable t({{Q(1), Q(5, 3), Q(5, 3)}});
  const ExpectedCostView<Rational> v(t, {Q(3, 4)});
  EXPECT_EQ(v(0, 1), Q(3, 2));
}

TEST(LeaderCost, PureSingletonAndUniformMix) {
  const Game g = split_game();
  const Configurations empty{{{0, 0}}};
  EXPECT_EQ(leader_cost(g, LeaderStrategy::pure(2, 0), empty), Q(1));
  const Configurations cfg{{{1, 1}}};
  LeaderStrategy mix;
  mix.probabilities = {Q(1, 2), Q(1, 2)};
  EXPECT_EQ(leader_cost(g, mix, cfg), (Q(3) + Q(5)) / 2);
}

TEST(LeaderCost, ThreeSatLeaderOnW) {
  CnfInstance cnf{2, {{Literal{0, false}, Literal{1, false}, Literal{0, true}}}};
  const Game g = reduce_3sat(cnf, Q(1, 4));
  const Profile prof = three_sat_witness(cnf, {true, false}, g);
  EXPECT_EQ(congestion(g, prof)[0], 0);
  EXPECT_EQ(leader_cost(g, LeaderStrategy::pure(g.leader_actions.size(), 0), prof), Q(1, 4));
}

TEST(FollowerCost, SingletonWithoutMass) {
  const Game g = split_game();
  const Configurations cfg{{{2, 0}}};
  EXPECT_EQ(follower_cost(g, no_mass(g), cfg, 0, 0), Q(3));
}

TEST(FollowerCost, ThreeSatVariableFollower) {
  CnfInstance cnf{2, {{Literal{0, false}, Literal{1, false}, Literal{0, true}}}};
  const Game g = reduce_3sat(cnf, Q(1, 4));
  const ThreeSatLayout lay(cnf);
  // u1 false: p_u1 plays a_u1 and is alone on r_u1 and r_u1,t.
  Profile prof = three_sat_witness(cnf, {false, true}, g);
  ASSERT_EQ(prof.actions[0], lay.a_pos(0));
  EXPECT_EQ(follower_cost(g, LeaderStrategy::pure(g.leader_actions.size(), 0), prof, 0, lay.a_pos(0)), Q(3));
}

TEST(FollowerCost, TwoResourceActionSumsBothTerms) {
  Game g;
  g.kind = GameKind::general_scg;
  g.resources = 2;
  g.leader_actions = {{0}};
  g.followers = {FollowerSpec{{{0, 1}}}, FollowerSpec{{{1}}}};
  g.follower_costs = padded(g, {{4, 6}, {1, 7}});
  g.leader_costs = padded(g, {{0}, {0}});
  LeaderStrategy s;
  s.probabilities = {Q(0)};
  EXPECT_EQ(follower_cost(g, s, Profile{{0, 0}}, 0, 0), Q(4) + Q(7));
}

TEST(IsNash, SingleResourceHasNoDeviation) {
  const Game g = tclass_game(1, {FollowerClass{1, singletons({0})}}, {0}, {{3}}, {{1}});
  EXPECT_TRUE(is_nash(g, no_mass(g), Configurations{{{1}}}));
}

TEST(IsNash, CrowdedResourceHasWitness) {
  const Game g = split_game();
  const auto check = is_nash(g, no_mass(g), Configurations{{{2, 0}}});
  ASSERT_FALSE(check);
  ASSERT_TRUE(check.witness);
  EXPECT_EQ(check.witness->improving_action, 1);
  EXPECT_EQ(check.witness->current_cost, Q(3));
  EXPECT_EQ(check.witness->deviated_cost, Q(2));
  EXPECT_TRUE(is_nash(g, no_mass(g), Configurations{{{1, 1}}}));
}

TEST(IsNash, ThreeSatWitnessIsEquilibrium) {
  const CnfInstance cnf{3,
                        {{Literal{0, false}, Literal{1, true}, Literal{2, false}},
                         {Literal{0, true}, Literal{1, false}, Literal{2, false}},
                         {Literal{0, false}, Literal{1, false}, Literal{2, true}}}};
  const Game g = reduce_3sat(cnf, Q(1, 4));
  const auto tau = brute_force_sat(cnf);
  ASSERT_TRUE(tau);
  const Profile prof = three_sat_witness(cnf, *tau, g);
  const auto s = LeaderStrategy::pure(g.leader_actions.size(), 0);
  EXPECT_TRUE(is_nash(g, s, prof));
  EXPECT_EQ(leader_cost(g, s, prof), Q(1, 4));
}

TEST(IsNash, GeneralTiesAreNotDeviations) {
  // Moving between actions of equal cost is not an improvement.
  Game g;
  g.kind = GameKind::general_scg;
  g.resources = 2;
  g.leader_actions = {{0}};
  g.followers = {FollowerSpec{{{0}, {1}}}};
  g.follower_costs = padded(g, {{2}, {2}});
  g.leader_costs = padded(g, {{0}, {0}});
  LeaderStrategy s;
  s.probabilities = {Q(0)};
  EXPECT_TRUE(is_nash(g, s, Profile{{0}}));
}

TEST(Brd, FixpointAndConvergence) {
  const Game g = split_game();
  const FollowersOutcome ne = Configurations{{{1, 1}}};
  EXPECT_EQ(best_response_dynamics(g, no_mass(g), ne), ne);
  const auto out = best_response_dynamics(g, no_mass(g), FollowersOutcome{Configurations{{{2, 0}}}});
  EXPECT_EQ(std::get<Configurations>(out).counts[0], (std::vector<int>{1, 1}));
}

TEST(Brd, RandomPureCommitmentsReachEquilibria) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Game g = small_tclass(seed, 1 + seed % 3, 2 + seed % 5, 3, seed % 2);
    const auto s = LeaderStrategy::pure(g.leader_actions.size(), seed % g.leader_actions.size());
    FollowersOutcome start;
    OutcomeEnumerator(g).next(start);
    Rational last = rosenthal_potential(g, s, start);
    const auto out = best_response_dynamics(g, s, start, {}, [&](const FollowersOutcome& o) {
      const Rational phi = rosenthal_potential(g, s, o);
      EXPECT_LT(phi, last) << "seed " << seed;
      last = phi;
    });
    EXPECT_TRUE(is_nash(g, s, out)) << "seed " << seed;
  }
}

TEST(Brd, BudgetExhaustionThrows) {
  const Game g = split_game();
  BrdOptions opts;
  opts.max_steps = 0;
  EXPECT_NO_THROW(best_response_dynamics(g, no_mass(g), FollowersOutcome{Configurations{{{1, 1}}}}, opts));
  Game big = small_tclass(4, 1, 5, 3, false);
  big.classes[0].count = 8;
  big.follower_costs = padded(big, {{1}, {1}, {1}, {1}, {1}});
  big.leader_costs = big.follower_costs;
  // Constant costs: nothing moves, so even a one-step budget suffices.
  opts.max_steps = 1;
  FollowersOutcome start;
  OutcomeEnumerator(big).next(start);
  EXPECT_NO_THROW(best_response_dynamics(big, LeaderStrategy::pure(big.leader_actions.size(), 0), start, opts));
}

TEST(Brd, SmallBudgetStopsLongRun) {
  // Four followers start stacked on one resource: at least two moves are needed.
  const Game g = tclass_game(2, {FollowerClass{4, singletons({0, 1})}}, {0}, {{1, 2, 3, 4}, {1, 2, 3, 4}},
                             {{1}, {1}});
  BrdOptions opts;
  opts.max_steps = 1;
  EXPECT_THROW(best_response_dynamics(g, no_mass(g), FollowersOutcome{Configurations{{{4, 0}}}}, opts),
               StepBudgetExhausted);
}

TEST(Enumerate, CompositionCounts) {
  const Game g = split_game();
  const auto all = enumerate_outcomes(g);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(std::get<Configurations>(all[0]).counts[0], (std::vector<int>{2, 0}));
  EXPECT_EQ(std::get<Configurations>(all[1]).counts[0], (std::vector<int>{1, 1}));
  EXPECT_EQ(std::get<Configurations>(all[2]).counts[0], (std::vector<int>{0, 2}));
}

TEST(Enumerate, ProfilesOfTwoFollowers) {
  Game g;
  g.kind = GameKind::general_scg;
  g.resources = 3;
  g.leader_actions = {{0}};
  g.followers.assign(2, FollowerSpec{singletons({0, 1, 2})});
  g.follower_costs = padded(g, {{1}, {1}, {1}});
  g.leader_costs = g.follower_costs;
  EXPECT_EQ(enumerate_outcomes(g).size(), 9u);
  EXPECT_EQ(enumerate_outcomes(g, {100, true}).size(), 6u);
}

TEST(Enumerate, ThreeSatProfiles) {
  CnfInstance cnf{2, {{Literal{0, false}, Literal{1, false}, Literal{0, true}}}};
  const Game g = reduce_3sat(cnf, Q(1, 4));
  // Three followers (two variable players, one clause player) with 8 actions each.
  ASSERT_EQ(g.follower_count(), 3);
  EXPECT_EQ(count_outcomes(g), 512.0);
  EXPECT_EQ(enumerate_outcomes(g).size(), 512u);
}

TEST(Enumerate, CapIsEnforced) {
  CnfInstance cnf{2, {{Literal{0, false}, Literal{1, false}, Literal{0, true}}}};
  const Game g = reduce_3sat(cnf, Q(1, 4));
  EXPECT_THROW(OutcomeEnumerator(g, {100, false}), CapExceeded);
}
