#include <gtest/gtest.h>

#include <optional>

#include "fixtures.hpp"
#include "scg/dp_solver.hpp"
#include "scg/enumerate.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/oracle.hpp"

using namespace scg;
using namespace scg::testing;

namespace {

LeaderStrategy no_mass(const Game& g) {
  LeaderStrategy s;
  s.probabilities.assign(g.leader_actions.size(), Q(0));
  return s;
}

Rational criterion_value(const Game& g, const OptimalityCriterion& crit, const Configurations& cfg) {
  const auto nu = congestion(g, cfg);
  Rational total = 0;
  for (int i = 0; i < g.resources; ++i) total += crit.contribution(g.follower_costs, i, nu[i]);
  return total;
}

// Enumeration oracle: best criterion value over all pure NEs.
std::optional<Rational> brute_force(const Game& g, const OptimalityCriterion& crit) {
  std::optional<Rational> best;
  OutcomeEnumerator it(g);
  FollowersOutcome o;
  const auto s = no_mass(g);
  while (it.next(o)) {
    if (!is_nash(g, s, o)) continue;
    const Rational v = criterion_value(g, crit, std::get<Configurations>(o));
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

TEST(OptimalNeDp, TwoPlayersSplit) {
  const Game g = tclass_game(2, {FollowerClass{2, singletons({0, 1})}}, {0}, {{1, 3}, {2, 5}}, {{0}, {0}});
  const auto res = optimal_ne_dp(g, OptimalityCriterion::sum_of_player_costs());
  EXPECT_EQ(res.value, Q(3));
  EXPECT_EQ(res.outcome.counts[0], (std::vector<int>{1, 1}));
}

TEST(OptimalNeDp, SingleResource) {
  for (int k = 1; k <= 4; ++k) {
    const Game g = tclass_game(1, {FollowerClass{k, singletons({0})}}, {0}, {{2, 3, 7, 11}}, {{0}});
    const auto res = optimal_ne_dp(g, OptimalityCriterion::sum_of_player_costs());
    EXPECT_EQ(res.value, Q(k) * g.follower_costs.at(0, k));
  }
}

TEST(OptimalNeDp, MatchesEnumerationOnRandomTwoClassGames) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Game g = small_tclass(seed, 2, 3, 3, seed % 2 == 0);
    for (const auto& crit : {OptimalityCriterion::sum_of_player_costs(),
                             OptimalityCriterion::resource_cost({static_cast<int>(seed % 3)}, g.leader_costs)}) {
      const auto res = optimal_ne_dp(g, crit);
      const auto oracle = brute_force(g, crit);
      ASSERT_TRUE(oracle);
      EXPECT_EQ(res.value, *oracle) << "seed " << seed;
      EXPECT_TRUE(is_nash(g, no_mass(g), res.outcome)) << "seed " << seed;
      EXPECT_EQ(criterion_value(g, crit, res.outcome), res.value) << "seed " << seed;
    }
  }
}

TEST(OptimalNeDp, MatchesEnumerationUpToFiveResourcesThreeClasses) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const Game g = small_tclass(seed, 1 + seed % 3, 1 + seed % 5, 3, seed % 3 == 0);
    const auto crit = OptimalityCriterion::sum_of_player_costs();
    const auto res = optimal_ne_dp(g, crit);
    EXPECT_EQ(res.value, *brute_force(g, crit)) << "seed " << seed;
  }
}

TEST(DpEntry, LooserBoundsNeverHurt) {
  // Raising an upper bound or lowering a lower bound can only enlarge the
  // feasible set of an entry.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Game g = small_tclass(seed, 1, 3, 3, false);
    const auto crit = OptimalityCriterion::sum_of_player_costs();
    const int top = static_cast<int>(dp_ladder(g).size()) - 1;
    const int n = g.classes[0].count;
    for (int prefix = 1; prefix <= g.resources; ++prefix) {
      for (int m = 0; m < top; ++m) {
        for (int v = 1; v <= top; ++v) {
          const auto tight = dp_entry(g, crit, prefix, {n}, {m}, {v});
          const auto looser = dp_entry(g, crit, prefix, {n}, {m + 1}, {v - 1});
          if (tight) {
            ASSERT_TRUE(looser) << "seed " << seed;
            EXPECT_LE(*looser, *tight);
          }
        }
      }
    }
  }
}

TEST(DpLadder, SentinelsFrameSortedCosts) {
  const Game g = tclass_game(2, {FollowerClass{2, singletons({0, 1})}}, {0}, {{1, 3}, {2, 5}}, {{0}, {0}});
  const auto ladder = dp_ladder(g);
  ASSERT_GE(ladder.size(), 4u);
  for (std::size_t k = 2; k + 1 < ladder.size(); ++k) EXPECT_LT(ladder[k - 1], ladder[k]);
}

TEST(PureLeaderTclass, LeaderTakesCheapResource) {
  const Game g = tclass_game(2, {FollowerClass{1, singletons({0, 1})}}, {0, 1}, {{1, 5}, {2, 6}}, {{1, 5}, {2, 6}});
  const auto res = ose_pure_leader_tclass(g);
  EXPECT_EQ(res.leader_action, 0);
  EXPECT_EQ(res.leader_cost, Q(1));
  EXPECT_EQ(std::get<Configurations>(res.outcome).counts[0], (std::vector<int>{0, 1}));
}

TEST(PureLeaderTclass, SingleLeaderAction) {
  const Game g = tclass_game(2, {FollowerClass{2, singletons({0, 1})}}, {1}, {{1, 3}, {2, 5}}, {{4, 4}, {1, 9}});
  const auto res = ose_pure_leader_tclass(g);
  EXPECT_EQ(res.leader_action, 0);
  const auto s = LeaderStrategy::pure(1, 0);
  EXPECT_TRUE(is_nash(g, s, res.outcome));
  EXPECT_EQ(leader_cost(g, s, res.outcome), res.leader_cost);
}

TEST(PureLeaderTclass, MatchesOracleOnTwoClassGames) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Game g = small_tclass(seed, 2, 2 + seed % 3, 3, seed % 2 == 1);
    const auto dp = ose_pure_leader_tclass(g);
    const auto oracle = ose_oracle_pure_leader(g);
    EXPECT_EQ(dp.leader_cost, oracle.leader_cost) << "seed " << seed;
    EXPECT_TRUE(is_nash(g, LeaderStrategy::pure(g.leader_actions.size(), dp.leader_action), dp.outcome));
  }
}

TEST(PureLeaderSymmetric, SingletonLeaderMatchesTclass) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Game g = small_tclass(seed, 1, 3, 3, false);
    g.leader_actions = singletons(g.class_resources(0));
    const Game e = expand_to_general(g);
    EXPECT_EQ(ose_pure_leader_symmetric_scg(e).leader_cost, ose_pure_leader_tclass(g).leader_cost) << seed;
  }
}

TEST(PureLeaderSymmetric, LeaderCoveringEverything) {
  Game g;
  g.kind = GameKind::general_scg;
  g.resources = 2;
  g.leader_actions = {{0, 1}};
  g.followers = {FollowerSpec{singletons({0, 1})}};
  g.follower_costs = padded(g, {{1, 4}, {2, 3}});
  g.leader_costs = padded(g, {{5, 7}, {1, 10}});
  const auto res = ose_pure_leader_symmetric_scg(g);
  // Shifted follower costs: resource 0 costs 4, resource 1 costs 3, so the follower sits on 1.
  EXPECT_EQ(std::get<Profile>(res.outcome).actions, (std::vector<int>{1}));
  EXPECT_EQ(res.leader_cost, Q(5) + Q(10));
}

TEST(PureLeaderSymmetric, MatchesOracleWithPairLeaderActions) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int r = 2 + seed % 3;
    Game g = small_scg(seed, r, 2 + seed % 3, 1, r, seed % 2);
    for (auto& f : g.followers) f.actions = g.followers[0].actions;
    Game leader_src = small_scg(seed + 1000, r, 2, 2, 3, false);
    g.leader_actions = leader_src.leader_actions;
    ASSERT_TRUE(validate(g).ok()) << validate(g).summary();
    const auto dp = ose_pure_leader_symmetric_scg(g);
    const auto oracle = ose_oracle_pure_leader(g);
    EXPECT_EQ(dp.leader_cost, oracle.leader_cost) << "seed " << seed;
    EXPECT_TRUE(is_nash(g, LeaderStrategy::pure(g.leader_actions.size(), dp.leader_action), dp.outcome));
  }
}

TEST(PureLeaderSymmetric, RejectsNonSymmetricFollowers) {
  const Game g = small_scg(3, 4, 3, 2, 2, false);
  EXPECT_THROW(ose_pure_leader_symmetric_scg(g), InapplicableSolver);
}

TEST(ShiftCosts, DropsFirstEntry) {
  const CostTable t({{Q(1), Q(2), Q(3)}, {Q(4), Q(5), Q(6)}});
  const CostTable s = shift_costs(t, {1});
  EXPECT_EQ(s.at(0, 1), Q(1));
  EXPECT_EQ(s.at(1, 1), Q(5));
  EXPECT_EQ(s.at(1, 2), Q(6));
}

TEST(OptimalNeDp, DeadlineIsHonoured) {
  const Game g = small_tclass(1, 3, 5, 3, false);
  DpOptions opts;
  opts.deadline = Deadline::after(0);
  EXPECT_THROW(optimal_ne_dp(g, OptimalityCriterion::sum_of_player_costs(), opts), TimeLimitReached);
}
