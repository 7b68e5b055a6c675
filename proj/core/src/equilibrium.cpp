#include "scg/equilibrium.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "scg/errors.hpp"

namespace scg {
namespace {

template <class S>
S cost_at(const CostTable& t, int i, int x);

template <>
Rational cost_at<Rational>(const CostTable& t, int i, int x) {
  return t.at(i, x);
}

template <>
double cost_at<double>(const CostTable& t, int i, int x) {
  return t.value(i, x);
}

bool contains(const ResourceSet& a, int i) { return std::binary_search(a.begin(), a.end(), i); }

template <class S>
bool improves(const S& candidate, const S& current, double tolerance) {
  if constexpr (std::is_same_v<S, double>) {
    return candidate < current - tolerance;
  } else {
    return tolerance == 0.0 ? candidate < current : to_double(candidate) < to_double(current) - tolerance;
  }
}

template <class S>
ExpectedCostView<S> view_for(const Game& g, const BasicLeaderStrategy<S>& s) {
  return ExpectedCostView<S>(g.follower_costs, resource_marginals(g, s));
}

}  // namespace

template <class S>
ExpectedCostView<S>::ExpectedCostView(const CostTable& costs, std::vector<S> marginals)
    : costs_(&costs), marginals_(std::move(marginals)) {
  if (static_cast<int>(marginals_.size()) != costs.resource_count()) {
    throw std::invalid_argument("marginal vector does not match the cost table");
  }
}

template <class S>
S ExpectedCostView<S>::operator()(int i, int x) const {
  if (x + 1 > costs_->length(i)) {
    throw std::out_of_range("expected cost lookup at congestion " + std::to_string(x) +
                            " needs c(" + std::to_string(x + 1) + ") on resource " + std::to_string(i));
  }
  const S& p = marginals_[static_cast<std::size_t>(i)];
  if (p == S(0)) return cost_at<S>(*costs_, i, x);
  if (p == S(1)) return cost_at<S>(*costs_, i, x + 1);
  return p * cost_at<S>(*costs_, i, x + 1) + (S(1) - p) * cost_at<S>(*costs_, i, x);
}

template <class S>
S leader_cost(const Game& g, const BasicLeaderStrategy<S>& s, const FollowersOutcome& outcome) {
  const auto nu = congestion(g, outcome);
  S total = 0;
  for (std::size_t k = 0; k < g.leader_actions.size(); ++k) {
    if (s.probabilities.at(k) == S(0)) continue;
    S action_cost = 0;
    for (int i : g.leader_actions[k]) action_cost += cost_at<S>(g.leader_costs, i, nu[static_cast<std::size_t>(i)] + 1);
    total += s.probabilities[k] * action_cost;
  }
  return total;
}

template <class S>
S follower_cost(const Game& g, const BasicLeaderStrategy<S>& s, const FollowersOutcome& outcome, int who,
                int action) {
  const auto nu = congestion(g, outcome);
  const auto view = view_for(g, s);
  const auto& a = g.actions_of(who).at(static_cast<std::size_t>(action));
  S total = 0;
  for (int i : a) total += view(i, nu[static_cast<std::size_t>(i)]);
  return total;
}

template <class S>
NashCheck<S> is_nash(const Game& g, const BasicLeaderStrategy<S>& s, const FollowersOutcome& outcome,
                     double tolerance) {
  const auto nu = congestion(g, outcome);
  const auto view = view_for(g, s);
  NashCheck<S> result;

  if (const auto* prof = std::get_if<Profile>(&outcome)) {
    for (std::size_t p = 0; p < prof->actions.size(); ++p) {
      const auto& actions = g.followers.at(p).actions;
      const int cur = prof->actions[p];
      const auto& a = actions.at(static_cast<std::size_t>(cur));
      for (std::size_t k = 0; k < actions.size(); ++k) {
        if (static_cast<int>(k) == cur) continue;
        const auto& b = actions[k];
        // Shared resources cost the same before and after the move.
        S leaving = 0, joining = 0;
        for (int i : a) {
          if (!contains(b, i)) leaving += view(i, nu[static_cast<std::size_t>(i)]);
        }
        for (int i : b) {
          if (!contains(a, i)) joining += view(i, nu[static_cast<std::size_t>(i)] + 1);
        }
        if (improves(joining, leaving, tolerance)) {
          S current = 0;
          for (int i : a) current += view(i, nu[static_cast<std::size_t>(i)]);
          result.is_nash = false;
          result.witness = DeviationWitness<S>{static_cast<int>(p), cur, static_cast<int>(k), current,
                                               current - leaving + joining};
          return result;
        }
      }
    }
    return result;
  }

  const auto& cfg = std::get<Configurations>(outcome);
  for (std::size_t t = 0; t < g.classes.size(); ++t) {
    const auto& actions = g.classes[t].actions;
    for (std::size_t ka = 0; ka < actions.size(); ++ka) {
      const int i = actions[ka].front();
      if (cfg.counts.at(t).at(static_cast<std::size_t>(i)) <= 0) continue;
      const S here = view(i, nu[static_cast<std::size_t>(i)]);
      for (std::size_t kb = 0; kb < actions.size(); ++kb) {
        const int j = actions[kb].front();
        if (j == i) continue;
        const S there = view(j, nu[static_cast<std::size_t>(j)] + 1);
        if (improves(there, here, tolerance)) {
          result.is_nash = false;
          result.witness = DeviationWitness<S>{static_cast<int>(t), static_cast<int>(ka), static_cast<int>(kb),
                                               here, there};
          return result;
        }
      }
    }
  }
  return result;
}

template <class S>
S rosenthal_potential(const Game& g, const BasicLeaderStrategy<S>& s, const FollowersOutcome& outcome) {
  const auto nu = congestion(g, outcome);
  const auto view = view_for(g, s);
  S phi = 0;
  for (int i = 0; i < g.resources; ++i) {
    for (int x = 1; x <= nu[static_cast<std::size_t>(i)]; ++x) phi += view(i, x);
  }
  return phi;
}

std::uint64_t default_brd_budget(const Game& g) {
  const auto nr = static_cast<std::uint64_t>(g.player_count()) * static_cast<std::uint64_t>(g.resources);
  return nr * (nr + 1);
}

template <class S>
FollowersOutcome best_response_dynamics(const Game& g, const BasicLeaderStrategy<S>& s, FollowersOutcome start,
                                        BrdOptions options,
                                        const std::function<void(const FollowersOutcome&)>& on_step) {
  if (auto v = outcome_violations(g, start); !v.empty()) throw Error("invalid BRD start: " + v.front());
  const std::uint64_t budget = options.max_steps ? options.max_steps : default_brd_budget(g);
  const auto view = view_for(g, s);
  auto nu = congestion(g, start);
  std::uint64_t steps = 0;

  auto count_step = [&] {
    if (++steps > budget) {
      throw StepBudgetExhausted("best-response dynamics exceeded " + std::to_string(budget) + " steps");
    }
  };

  if (auto* prof = std::get_if<Profile>(&start)) {
    const std::size_t followers = prof->actions.size();
    if (followers == 0) return start;
    std::size_t p = 0, quiet = 0;
    while (quiet < followers) {
      const auto& actions = g.followers[p].actions;
      const auto& a = actions[static_cast<std::size_t>(prof->actions[p])];
      auto cost_of = [&](const ResourceSet& b) {
        S c = 0;
        for (int i : b) c += view(i, nu[static_cast<std::size_t>(i)] + (contains(a, i) ? 0 : 1));
        return c;
      };
      const S current = cost_of(a);
      std::size_t best = 0;
      S best_cost = cost_of(actions[0]);
      for (std::size_t k = 1; k < actions.size(); ++k) {
        S c = cost_of(actions[k]);
        if (c < best_cost) {
          best_cost = c;
          best = k;
        }
      }
      if (best_cost < current) {
        count_step();
        for (int i : a) --nu[static_cast<std::size_t>(i)];
        for (int i : actions[best]) ++nu[static_cast<std::size_t>(i)];
        prof->actions[p] = static_cast<int>(best);
        quiet = 0;
        if (on_step) on_step(start);
      } else {
        ++quiet;
      }
      p = (p + 1) % followers;
    }
    return start;
  }

  auto& cfg = std::get<Configurations>(start);
  // Round-robin over (class, action) slots; a slot is skipped while empty.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t t = 0; t < g.classes.size(); ++t) {
    for (std::size_t k = 0; k < g.classes[t].actions.size(); ++k) slots.emplace_back(t, k);
  }
  if (slots.empty()) return start;
  std::size_t pos = 0, quiet = 0;
  while (quiet < slots.size()) {
    const auto [t, k] = slots[pos];
    const auto& actions = g.classes[t].actions;
    const int i = actions[k].front();
    bool moved = false;
    if (cfg.counts[t][static_cast<std::size_t>(i)] > 0) {
      const S current = view(i, nu[static_cast<std::size_t>(i)]);
      int best = -1;
      S best_cost = current;
      for (std::size_t kb = 0; kb < actions.size(); ++kb) {
        const int j = actions[kb].front();
        const S c = j == i ? current : view(j, nu[static_cast<std::size_t>(j)] + 1);
        if (best < 0 || c < best_cost) {
          best = static_cast<int>(kb);
          best_cost = c;
        }
      }
      const int j = actions[static_cast<std::size_t>(best)].front();
      if (j != i && best_cost < current) {
        count_step();
        --cfg.counts[t][static_cast<std::size_t>(i)];
        ++cfg.counts[t][static_cast<std::size_t>(j)];
        --nu[static_cast<std::size_t>(i)];
        ++nu[static_cast<std::size_t>(j)];
        moved = true;
        if (on_step) on_step(start);
      }
    }
    quiet = moved ? 0 : quiet + 1;
    pos = (pos + 1) % slots.size();
  }
  return start;
}

#define SCG_INSTANTIATE(S)                                                                                    \
  template class ExpectedCostView<S>;                                                                        \
  template S leader_cost(const Game&, const BasicLeaderStrategy<S>&, const FollowersOutcome&);               \
  template S follower_cost(const Game&, const BasicLeaderStrategy<S>&, const FollowersOutcome&, int, int);   \
  template NashCheck<S> is_nash(const Game&, const BasicLeaderStrategy<S>&, const FollowersOutcome&, double); \
  template S rosenthal_potential(const Game&, const BasicLeaderStrategy<S>&, const FollowersOutcome&);       \
  template FollowersOutcome best_response_dynamics(const Game&, const BasicLeaderStrategy<S>&,              \
                                                   FollowersOutcome, BrdOptions,                            \
                                                   const std::function<void(const FollowersOutcome&)>&);

SCG_INSTANTIATE(Rational)
SCG_INSTANTIATE(double)

#undef SCG_INSTANTIATE

}  // namespace scg
