#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scg/game.hpp"

namespace scg {

struct TclassParams {
  int resources = 0;
  /// Followers per class; its size is T.
  std::vector<int> class_sizes;
  bool monotone = false;
  /// Defaults: ⌊r/2⌋ (at least 1) actions per class and for the leader,
  /// costs uniform in {1..n·r·T} with n counting the leader.
  std::optional<int> actions_per_class;
  std::optional<int> leader_action_count;
  std::optional<std::int64_t> cost_max;
};

/// Random T-class SSCG. A_t and A_ℓ are uniform subsets, follower and leader
/// costs i.i.d. uniform per (resource, congestion); sorted when monotone.
Game gen_random_tclass(const TclassParams& params, std::uint64_t seed, std::uint64_t instance = 0);

struct ScgParams {
  int resources = 0;
  /// Players including the leader.
  int players = 0;
  int action_size = 1;
  /// Defaults to ⌊r/2⌋ (at least 1) distinct actions per player.
  std::optional<int> actions_per_player;
  std::optional<std::int64_t> cost_max;  // default n·r
  bool monotone = false;
};

/// Random general SCG; each player, the leader included, draws its own
/// distinct actions of the given cardinality.
Game gen_random_scg(const ScgParams& params, std::uint64_t seed, std::uint64_t instance = 0);

}  // namespace scg
