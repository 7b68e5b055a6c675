#include "scg/dp_solver.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "scg/errors.hpp"

namespace scg {

Rational OptimalityCriterion::contribution(const CostTable& follower_costs, int i, int b) const {
  if (kind == Kind::sum_of_player_costs) return b == 0 ? Rational(0) : Rational(b) * follower_costs.at(i, b);
  if (std::binary_search(targets.begin(), targets.end(), i)) return leader_costs->at(i, b + 1);
  return 0;
}

CostTable shift_costs(const CostTable& costs, const ResourceSet& shifted) {
  auto rows = costs.rows();
  for (int i : shifted) {
    auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.empty()) row.erase(row.begin());
  }
  return CostTable(std::move(rows), costs.monotone());
}

namespace {

using Key = std::u16string;

struct Entry {
  bool feasible = false;
  Rational value;
  std::vector<int> choice;  // followers of each class placed on the resource
};

class ConfigurationDp {
 public:
  ConfigurationDp(const Game& g, const OptimalityCriterion& crit, Deadline deadline)
      : g_(g), deadline_(deadline), T_(g.class_count()), r_(g.resources) {
    if (g.kind != GameKind::tclass_sscg) throw InapplicableSolver("the DP needs a T-class singleton game");
    const auto vmax = g.max_follower_congestion();
    for (int i = 0; i < r_; ++i) {
      if (g.follower_costs.length(i) < vmax[i] + 1) {
        throw Error("follower cost row " + std::to_string(i) + " is shorter than " + std::to_string(vmax[i] + 1));
      }
      for (int x = 1; x <= vmax[i] + 1; ++x) ladder_.push_back(g.follower_costs.at(i, x));
    }
    std::sort(ladder_.begin(), ladder_.end());
    ladder_.erase(std::unique(ladder_.begin(), ladder_.end()), ladder_.end());
    top_ = static_cast<int>(ladder_.size()) + 1;

    cost_index_.resize(r_);
    gain_.resize(r_);
    for (int i = 0; i < r_; ++i) {
      cost_index_[i].push_back(0);
      for (int x = 1; x <= vmax[i] + 1; ++x) {
        const auto it = std::lower_bound(ladder_.begin(), ladder_.end(), g.follower_costs.at(i, x));
        cost_index_[i].push_back(static_cast<int>(it - ladder_.begin()) + 1);
      }
      for (int b = 0; b <= vmax[i]; ++b) gain_[i].push_back(crit.contribution(g.follower_costs, i, b));
    }

    member_.assign(T_, std::vector<bool>(r_, false));
    reachable_.assign(T_, std::vector<bool>(r_ + 1, false));
    for (int t = 0; t < T_; ++t) {
      for (const auto& a : g.classes[t].actions) {
        if (a.size() != 1) throw InapplicableSolver("the DP needs singleton follower actions");
        member_[t][a.front()] = true;
      }
      for (int i = 1; i <= r_; ++i) reachable_[t][i] = reachable_[t][i - 1] || member_[t][i - 1];
    }
  }

  int top() const { return top_; }
  std::vector<Rational> full_ladder() const { return ladder_; }
  std::uint64_t entries() const { return memo_.size(); }

  Key make_key(int i, const std::vector<int>& B, const std::vector<int>& M, const std::vector<int>& V) const {
    Key k;
    k.reserve(1 + 3 * T_);
    k.push_back(static_cast<char16_t>(i));
    for (int t = 0; t < T_; ++t) {
      int m = M[t], v = V[t];
      // Bounds that can no longer bind are dropped so equivalent keys coincide.
      if (!reachable_[t][i]) {
        m = top_;
        v = 0;
      } else if (B[t] == 0) {
        m = top_;
      }
      k.push_back(static_cast<char16_t>(B[t]));
      k.push_back(static_cast<char16_t>(m));
      k.push_back(static_cast<char16_t>(v));
    }
    return k;
  }

  const Entry& solve(const Key& key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Entry e = compute(key);
    if ((memo_.size() & 4095) == 0 && deadline_.expired()) throw TimeLimitReached("DP time limit reached");
    return memo_.emplace(key, std::move(e)).first->second;
  }

  Key child_key(const Key& key, const std::vector<int>& b_t) const {
    const int i = key[0];
    const int res = i - 1;
    int b = 0;
    for (int t = 0; t < T_; ++t) b += b_t[t];
    std::vector<int> B(T_), M(T_), V(T_);
    for (int t = 0; t < T_; ++t) {
      B[t] = key[1 + 3 * t] - b_t[t];
      M[t] = key[2 + 3 * t];
      V[t] = key[3 + 3 * t];
      if (member_[t][res]) M[t] = std::min(M[t], cost_index_[res][b + 1]);
      if (b_t[t] > 0) V[t] = std::max(V[t], cost_index_[res][b]);
    }
    return make_key(res, B, M, V);
  }

  Configurations reconstruct(Key key) {
    Configurations cfg;
    cfg.counts.assign(T_, std::vector<int>(r_, 0));
    while (key[0] > 0) {
      const Entry& e = solve(key);
      const int res = key[0] - 1;
      for (int t = 0; t < T_; ++t) cfg.counts[t][res] = e.choice[t];
      key = child_key(key, e.choice);
    }
    return cfg;
  }

 private:
  Entry compute(const Key& key) {
    Entry best;
    const int i = key[0];
    std::vector<int> B(T_);
    for (int t = 0; t < T_; ++t) B[t] = key[1 + 3 * t];
    if (i == 0) {
      best.feasible = std::all_of(B.begin(), B.end(), [](int x) { return x == 0; });
      best.value = 0;
      return best;
    }
    for (int t = 0; t < T_; ++t) {
      if (B[t] > 0 && !reachable_[t][i]) return best;
    }
    const int res = i - 1;

    // Per class: the range of followers placed on `res`.
    std::vector<int> lo(T_, 0), hi(T_, 0);
    for (int t = 0; t < T_; ++t) {
      if (!member_[t][res]) continue;
      hi[t] = B[t];
      if (!reachable_[t][res]) lo[t] = B[t];
    }
    std::vector<int> b_t = lo;
    for (;;) {
      int b = 0;
      for (int t = 0; t < T_; ++t) b += b_t[t];
      const int here = b > 0 ? cost_index_[res][b] : 0;
      const int dev = cost_index_[res][b + 1];
      bool ok = true;
      for (int t = 0; t < T_ && ok; ++t) {
        if (b_t[t] > 0 && here > key[2 + 3 * t]) ok = false;
        if (member_[t][res] && dev < key[3 + 3 * t]) ok = false;
      }
      if (ok) {
        const Entry& sub = solve(child_key(key, b_t));
        if (sub.feasible) {
          Rational v = gain_[res][b] + sub.value;
          if (!best.feasible || v < best.value) {
            best.feasible = true;
            best.value = std::move(v);
            best.choice = b_t;
          }
        }
      }
      int t = T_ - 1;
      while (t >= 0 && b_t[t] == hi[t]) {
        b_t[t] = lo[t];
        --t;
      }
      if (t < 0) break;
      ++b_t[t];
    }
    return best;
  }

  const Game& g_;
  Deadline deadline_;
  int T_, r_;
  std::vector<Rational> ladder_;
  int top_ = 0;
  std::vector<std::vector<int>> cost_index_;
  std::vector<std::vector<Rational>> gain_;
  std::vector<std::vector<bool>> member_;
  std::vector<std::vector<bool>> reachable_;
  std::unordered_map<Key, Entry> memo_;
};

std::vector<int> class_sizes(const Game& g) {
  std::vector<int> n;
  for (const auto& c : g.classes) n.push_back(c.count);
  return n;
}

// One DP per leader action on a T-class view of the followers.
PureLeaderOse best_pure_commitment(const Game& followers_view, const std::vector<ResourceSet>& leader_actions,
                                   const CostTable& leader_costs, const DpOptions& options) {
  if (leader_actions.empty()) throw Error("the leader has no actions");
  PureLeaderOse best;
  Configurations best_cfg;
  for (std::size_t k = 0; k < leader_actions.size(); ++k) {
    Game shifted = followers_view;
    shifted.follower_costs = shift_costs(followers_view.follower_costs, leader_actions[k]);
    const auto crit = OptimalityCriterion::resource_cost(leader_actions[k], leader_costs);
    DpResult r = optimal_ne_dp(shifted, crit, options);
    best.stats.entries += r.stats.entries;
    best.stats.ladder_size = std::max(best.stats.ladder_size, r.stats.ladder_size);
    if (best.leader_action < 0 || r.value < best.leader_cost) {
      best.leader_action = static_cast<int>(k);
      best.leader_cost = r.value;
      best_cfg = std::move(r.outcome);
    }
  }
  best.outcome = best_cfg;
  return best;
}

}  // namespace

std::vector<Rational> dp_ladder(const Game& game) {
  ConfigurationDp dp(game, OptimalityCriterion::sum_of_player_costs(), Deadline::never());
  auto inner = dp.full_ladder();
  std::vector<Rational> out;
  out.reserve(inner.size() + 2);
  // The sentinels carry no value; callers only compare indices.
  out.push_back(inner.empty() ? Rational(0) : inner.front() - 1);
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(inner.empty() ? Rational(0) : inner.back() + 1);
  return out;
}

std::optional<Rational> dp_entry(const Game& game, const OptimalityCriterion& criterion, int prefix,
                                 const std::vector<int>& budgets, const std::vector<int>& upper,
                                 const std::vector<int>& lower) {
  ConfigurationDp dp(game, criterion, Deadline::never());
  const Entry& e = dp.solve(dp.make_key(prefix, budgets, upper, lower));
  if (!e.feasible) return std::nullopt;
  return e.value;
}

DpResult optimal_ne_dp(const Game& game, const OptimalityCriterion& criterion, const DpOptions& options) {
  ConfigurationDp dp(game, criterion, options.deadline);
  const int T = game.class_count();
  // The loosest bounds dominate every other choice of (M, V).
  const Key root = dp.make_key(game.resources, class_sizes(game), std::vector<int>(T, dp.top()),
                               std::vector<int>(T, 0));
  const Entry& e = dp.solve(root);
  if (!e.feasible) throw Error("no pure NE found; the cost table is inconsistent");
  DpResult result;
  result.value = e.value;
  result.outcome = dp.reconstruct(root);
  result.stats.entries = dp.entries();
  result.stats.ladder_size = dp.full_ladder().size() + 2;
  return result;
}

PureLeaderOse ose_pure_leader_tclass(const Game& game, const DpOptions& options) {
  if (game.kind != GameKind::tclass_sscg || !all_actions_singleton(game)) {
    throw InapplicableSolver("dp requires a T-class singleton game");
  }
  return best_pure_commitment(game, game.leader_actions, game.leader_costs, options);
}

PureLeaderOse ose_pure_leader_symmetric_scg(const Game& game, const DpOptions& options) {
  if (!has_symmetric_singleton_followers(game)) {
    throw InapplicableSolver("dp requires followers sharing one list of singleton actions");
  }
  Game view = game;
  view.kind = GameKind::tclass_sscg;
  view.followers.clear();
  view.classes = {FollowerClass{game.follower_count(), game.followers.front().actions}};
  PureLeaderOse r = best_pure_commitment(view, game.leader_actions, game.leader_costs, options);
  r.outcome = profile_from_configurations(view, std::get<Configurations>(r.outcome));
  return r;
}

}  // namespace scg
