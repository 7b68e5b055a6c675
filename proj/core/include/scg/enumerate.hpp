#pragma once

#include <cstdint>
#include <vector>

#include "scg/game.hpp"

namespace scg {

struct EnumerationOptions {
  std::uint64_t cap = 10'000'000;
  /// General SCGs only: followers with identical action lists are
  /// interchangeable, so only non-decreasing action choices inside such a
  /// group are produced. Every NE is still represented up to relabeling.
  bool merge_identical_followers = false;
};

/// Number of outcomes enumerate would visit (as a double; may be huge).
double count_outcomes(const Game& game, const EnumerationOptions& options = {});

/// Exhaustive, duplicate-free walk over followers' outcomes. T-class games
/// yield per-class configurations (first action filled first), general games
/// yield profiles in lexicographic order. Throws CapExceeded up front.
class OutcomeEnumerator {
 public:
  explicit OutcomeEnumerator(const Game& game, EnumerationOptions options = {});

  /// Writes the next outcome; false once exhausted.
  bool next(FollowersOutcome& out);
  double size() const { return size_; }
  /// Zero-based position of the last outcome returned.
  std::uint64_t index() const { return index_ - 1; }

 private:
  bool advance_profile();
  bool advance_configurations();
  int lower_bound_of(std::size_t position) const;

  const Game* game_;
  double size_ = 0;
  std::uint64_t index_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> choice_;
  std::vector<int> group_prev_;  // previous follower in the same merge group, or -1
  std::vector<std::vector<int>> parts_;  // per class, count per action
};

std::vector<FollowersOutcome> enumerate_outcomes(const Game& game, const EnumerationOptions& options = {});

}  // namespace scg
