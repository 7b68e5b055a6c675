#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scg/deadline.hpp"
#include "scg/game.hpp"

namespace scg {

/// What the configuration DP minimizes. SumOfPlayerCosts accumulates
/// b·c_i(b); ResourceCost accumulates c_{i,ℓ}(b+1) over the target resources.
struct OptimalityCriterion {
  enum class Kind { sum_of_player_costs, resource_cost };

  Kind kind = Kind::sum_of_player_costs;
  ResourceSet targets;
  const CostTable* leader_costs = nullptr;

  static OptimalityCriterion sum_of_player_costs() { return {}; }
  static OptimalityCriterion resource_cost(ResourceSet targets, const CostTable& leader_costs) {
    return {Kind::resource_cost, std::move(targets), &leader_costs};
  }

  /// Contribution of resource i when b followers use it.
  Rational contribution(const CostTable& follower_costs, int i, int b) const;
};

struct DpOptions {
  Deadline deadline;
};

struct DpStats {
  std::uint64_t entries = 0;
  std::size_t ladder_size = 0;
};

struct DpResult {
  Rational value;
  Configurations outcome;
  DpStats stats;
};

/// Minimum of the criterion over pure NEs of the followers' T-class
/// singleton game with cost table `game.follower_costs` (no leader mass).
/// Throws InapplicableSolver for non-T-class input, TimeLimitReached.
DpResult optimal_ne_dp(const Game& game, const OptimalityCriterion& criterion, const DpOptions& options = {});

/// Sorted distinct follower costs the DP compares, framed by the −∞ and +∞
/// sentinels at the first and last index.
std::vector<Rational> dp_ladder(const Game& game);

/// Value of one table entry: prefix length, per-class budgets and ladder
/// indices of the cost bounds. nullopt stands for +∞. Used by property tests.
std::optional<Rational> dp_entry(const Game& game, const OptimalityCriterion& criterion, int prefix,
                                 const std::vector<int>& budgets, const std::vector<int>& upper,
                                 const std::vector<int>& lower);

struct PureLeaderOse {
  int leader_action = -1;
  FollowersOutcome outcome;
  Rational leader_cost;
  DpStats stats;
};

/// Best pure leader commitment for a T-class SSCG, one DP per leader action.
PureLeaderOse ose_pure_leader_tclass(const Game& game, const DpOptions& options = {});

/// Same for a general SCG whose followers share one singleton action list;
/// leader actions may be arbitrary resource sets. Outcome is a Profile.
PureLeaderOse ose_pure_leader_symmetric_scg(const Game& game, const DpOptions& options = {});

/// Follower table as seen when the leader surely occupies `shifted`.
CostTable shift_costs(const CostTable& costs, const ResourceSet& shifted);

}  // namespace scg
