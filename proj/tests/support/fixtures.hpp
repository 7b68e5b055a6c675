#pragma once

#include <algorithm>
#include <vector>

#include "scg/game.hpp"
#include "scg/generators.hpp"

namespace scg::testing {

inline Rational Q(long long p, long long q = 1) { return Rational(p) / Rational(q); }

inline std::vector<ResourceSet> singletons(const std::vector<int>& ids) {
  std::vector<ResourceSet> out;
  for (int i : ids) out.push_back({i});
  return out;
}

/// Rows given as the first few costs; the last value repeats to the
/// length the game requires.
inline CostTable padded(const Game& g, const std::vector<std::vector<long long>>& rows, bool monotone = false) {
  const auto len = g.required_cost_length();
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rational> row(rows[i].begin(), rows[i].end());
    while (static_cast<int>(row.size()) < len[i]) row.push_back(row.back());
    out.push_back(std::move(row));
  }
  return CostTable(std::move(out), monotone);
}

/// T-class SSCG from hand-written rows.
inline Game tclass_game(int r, std::vector<FollowerClass> classes, std::vector<int> leader,
                        const std::vector<std::vector<long long>>& follower_rows,
                        const std::vector<std::vector<long long>>& leader_rows) {
  Game g;
  g.kind = GameKind::tclass_sscg;
  g.resources = r;
  g.classes = std::move(classes);
  g.leader_actions = singletons(leader);
  g.follower_costs = padded(g, follower_rows);
  g.leader_costs = padded(g, leader_rows);
  return g;
}

/// Small random T-class SSCG in the ranges the equivalence checks use.
inline Game small_tclass(std::uint64_t seed, int T, int r, int max_class, bool monotone, std::int64_t cost_max = 20) {
  TclassParams p;
  p.resources = r;
  for (int t = 0; t < T; ++t) p.class_sizes.push_back(1 + static_cast<int>((seed / (t + 1)) % max_class));
  p.monotone = monotone;
  p.cost_max = cost_max;
  p.actions_per_class = std::max(1, std::min(r, 1 + static_cast<int>(seed % r)));
  p.leader_action_count = std::max(1, std::min(r, 1 + static_cast<int>((seed / 7) % r)));
  return gen_random_tclass(p, seed);
}

inline int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return static_cast<int>(r);
}

/// Small random general SCG; the action count is clipped to what exists.
inline Game small_scg(std::uint64_t seed, int r, int players, int action_size, int actions, bool monotone) {
  ScgParams p;
  p.resources = r;
  p.players = players;
  p.action_size = std::min(action_size, r);
  p.actions_per_player = std::max(1, std::min(actions, binom(r, p.action_size)));
  p.monotone = monotone;
  return gen_random_scg(p, seed);
}

}  // namespace scg::testing
