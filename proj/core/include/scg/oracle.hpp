#pragma once

#include <cstdint>

#include "scg/deadline.hpp"
#include "scg/enumerate.hpp"
#include "scg/game.hpp"

namespace scg {

struct OracleOptions {
  EnumerationOptions enumeration{10'000'000, true};
  Deadline deadline;
};

struct OseResult {
  LeaderStrategy strategy;
  LeaderStrategyF strategy_float;
  FollowersOutcome outcome;
  Rational leader_cost;
  /// Leader cost as found by the search (LP value for the mixed oracle).
  double value = 0;
  /// False when the mixed strategy could not be rounded to a rational that
  /// passes the exact NE test; the result then holds within 1e-9.
  bool exact = true;
  /// Pure oracle: index of the leader action, else -1.
  int leader_action = -1;
  std::uint64_t outcomes_examined = 0;
  std::uint64_t equilibria_found = 0;
  std::uint64_t lps_solved = 0;
};

/// Exhaustive OSE over pure leader commitments. Throws CapExceeded.
OseResult ose_oracle_pure_leader(const Game& game, const OracleOptions& options = {});

/// Exhaustive OSE over mixed commitments: one small LP over the leader
/// distribution per followers' outcome. Throws CapExceeded.
OseResult ose_oracle_mixed_leader(const Game& game, const OracleOptions& options = {});

}  // namespace scg
