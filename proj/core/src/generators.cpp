#include "scg/generators.hpp"

#include <algorithm>
#include <set>

#include "scg/errors.hpp"
#include "scg/rng.hpp"

namespace scg {
namespace {

int half(int r) { return std::max(1, r / 2); }

std::vector<std::vector<Rational>> random_rows(const std::vector<int>& lengths, std::int64_t cost_max, bool monotone,
                                               Rng& rng) {
  std::vector<std::vector<Rational>> rows;
  for (int len : lengths) {
    std::vector<std::int64_t> draw(static_cast<std::size_t>(len));
    for (auto& v : draw) v = rng.uniform(1, cost_max);
    if (monotone) std::sort(draw.begin(), draw.end());
    rows.emplace_back(draw.begin(), draw.end());
  }
  return rows;
}

double choose(int n, int k) {
  double r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::vector<ResourceSet> random_actions(int r, int size, int count, Rng& rng) {
  if (choose(r, size) < count) throw Error("not enough distinct actions of that size");
  std::set<ResourceSet> seen;
  std::vector<ResourceSet> out;
  while (static_cast<int>(out.size()) < count) {
    auto a = rng.subset(r, size);
    if (seen.insert(a).second) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

Game gen_random_tclass(const TclassParams& p, std::uint64_t seed, std::uint64_t instance) {
  const int r = p.resources, T = static_cast<int>(p.class_sizes.size());
  if (r < 1 || T < 1) throw Error("need at least one resource and one class");
  for (int n : p.class_sizes) {
    if (n < 1) throw Error("class sizes must be positive");
  }
  const int per_class = p.actions_per_class.value_or(half(r));
  const int leader_count = p.leader_action_count.value_or(half(r));
  if (per_class < 1 || per_class > r || leader_count < 1 || leader_count > r) throw Error("action count out of range");

  Game g;
  g.kind = GameKind::tclass_sscg;
  g.resources = r;
  Rng structure(seed, instance, kFieldStructure);
  for (int n : p.class_sizes) {
    FollowerClass c{n, {}};
    for (int i : structure.subset(r, per_class)) c.actions.push_back({i});
    g.classes.push_back(std::move(c));
  }
  Rng leader(seed, instance, kFieldLeaderActions);
  for (int i : leader.subset(r, leader_count)) g.leader_actions.push_back({i});

  const std::int64_t cost_max = p.cost_max.value_or(static_cast<std::int64_t>(g.player_count()) * r * T);
  const auto lengths = g.required_cost_length();
  Rng fc(seed, instance, kFieldFollowerCosts), lc(seed, instance, kFieldLeaderCosts);
  g.follower_costs = CostTable(random_rows(lengths, cost_max, p.monotone, fc), p.monotone);
  g.leader_costs = CostTable(random_rows(lengths, cost_max, p.monotone, lc), p.monotone);

  g.metadata = {{"generator", "tclass"},
                {"parameters",
                 {{"r", r}, {"T", T}, {"n_t", p.class_sizes}, {"monotone", p.monotone},
                  {"actions_per_class", per_class}, {"leader_actions", leader_count}, {"cost_max", cost_max}}},
                {"seed", seed},
                {"instance", instance},
                {"rng", Rng::kName}};
  return g;
}

Game gen_random_scg(const ScgParams& p, std::uint64_t seed, std::uint64_t instance) {
  const int r = p.resources;
  if (r < 1 || p.players < 2) throw Error("need at least one resource and one follower");
  if (p.action_size < 1 || p.action_size > r) throw Error("action size exceeds the resource count");
  const int count = p.actions_per_player.value_or(half(r));

  Game g;
  g.kind = GameKind::general_scg;
  g.resources = r;
  Rng leader(seed, instance, kFieldLeaderActions);
  g.leader_actions = random_actions(r, p.action_size, count, leader);
  Rng structure(seed, instance, kFieldStructure);
  for (int f = 0; f + 1 < p.players; ++f) g.followers.push_back(FollowerSpec{random_actions(r, p.action_size, count, structure)});

  const std::int64_t cost_max = p.cost_max.value_or(static_cast<std::int64_t>(p.players) * r);
  const auto lengths = g.required_cost_length();
  Rng fc(seed, instance, kFieldFollowerCosts), lc(seed, instance, kFieldLeaderCosts);
  g.follower_costs = CostTable(random_rows(lengths, cost_max, p.monotone, fc), p.monotone);
  g.leader_costs = CostTable(random_rows(lengths, cost_max, p.monotone, lc), p.monotone);

  g.metadata = {{"generator", "scg"},
                {"parameters",
                 {{"r", r}, {"n", p.players}, {"action_size", p.action_size}, {"actions_per_player", count},
                  {"cost_max", cost_max}, {"monotone", p.monotone}}},
                {"seed", seed},
                {"instance", instance},
                {"rng", Rng::kName}};
  return g;
}

}  // namespace scg
