#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "scg/game.hpp"

namespace scg {

/// Follower cost table seen under a leader commitment: with marginal p_i
/// the leader adds one unit of congestion to resource i with probability p_i.
template <class S>
class ExpectedCostView {
 public:
  ExpectedCostView(const CostTable& costs, std::vector<S> marginals);

  /// p_i·c_i(x+1) + (1−p_i)·c_i(x). Throws std::out_of_range.
  S operator()(int i, int x) const;
  const S& marginal(int i) const { return marginals_.at(static_cast<std::size_t>(i)); }
  const CostTable& costs() const { return *costs_; }

 private:
  const CostTable* costs_;
  std::vector<S> marginals_;
};

template <class S>
S expected_follower_cost(const ExpectedCostView<S>& view, int i, int x) {
  return view(i, x);
}

/// A unilateral deviation that strictly lowers a follower's cost.
/// `who` is a follower (general) or a class (tclass); actions index the
/// corresponding action list.
template <class S>
struct DeviationWitness {
  int who = -1;
  int current_action = -1;
  int improving_action = -1;
  S current_cost{};
  S deviated_cost{};
};

template <class S>
struct NashCheck {
  bool is_nash = true;
  std::optional<DeviationWitness<S>> witness;

  explicit operator bool() const { return is_nash; }
};

/// Expected leader cost Σ_a σ(a) Σ_{i∈a} c_{i,ℓ}(ν_i+1).
template <class S>
S leader_cost(const Game& game, const BasicLeaderStrategy<S>& strategy, const FollowersOutcome& outcome);

/// Σ_{i∈action} c^σ_{i,f}(ν_i) at the outcome's congestion. `who` is a
/// follower (general) or class (tclass); `action` indexes its action list.
template <class S>
S follower_cost(const Game& game, const BasicLeaderStrategy<S>& strategy, const FollowersOutcome& outcome,
                int who, int action);

/// Pure NE test under the commitment. A deviation counts only when it
/// improves by more than `tolerance` (0 gives the exact weak inequality).
template <class S>
NashCheck<S> is_nash(const Game& game, const BasicLeaderStrategy<S>& strategy, const FollowersOutcome& outcome,
                     double tolerance = 0.0);

/// Rosenthal potential Σ_i Σ_{x=1..ν_i} c^σ_{i,f}(x).
template <class S>
S rosenthal_potential(const Game& game, const BasicLeaderStrategy<S>& strategy, const FollowersOutcome& outcome);

struct BrdOptions {
  /// 0 selects the default n·r·(n·r+1).
  std::uint64_t max_steps = 0;
};

/// Round-robin best-response dynamics. Each step moves one follower to its
/// strictly best response (lowest index on ties). `on_step` sees every
/// intermediate outcome. Throws StepBudgetExhausted.
template <class S>
FollowersOutcome best_response_dynamics(const Game& game, const BasicLeaderStrategy<S>& strategy,
                                        FollowersOutcome start, BrdOptions options = {},
                                        const std::function<void(const FollowersOutcome&)>& on_step = {});

std::uint64_t default_brd_budget(const Game& game);

}  // namespace scg
