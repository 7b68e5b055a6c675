#include "scg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/lp.hpp"

namespace scg {
namespace {

void check_deadline(const Deadline& d, std::uint64_t counter) {
  if ((counter & 1023) == 0 && d.expired()) throw TimeLimitReached("oracle time limit reached");
}

bool contains(const ResourceSet& a, int i) { return std::binary_search(a.begin(), a.end(), i); }

// NE rows of one outcome as affine functions of the leader distribution:
// row r holds its value at each pure commitment, feasible iff Σ_k α_k row[k] ≤ 0.
class NeRows {
 public:
  explicit NeRows(const Game& g) : g_(g), k_(g.leader_actions.size()) {
    marg_.assign(k_, std::vector<double>(static_cast<std::size_t>(g.resources), 0.0));
    for (std::size_t k = 0; k < k_; ++k) {
      for (int i : g.leader_actions[k]) marg_[k][static_cast<std::size_t>(i)] = 1.0;
    }
  }

  // Coefficient rows Σ_{i∈plus} c^σ_i(x_i) − Σ_{i∈minus} c^σ_i(y_i).
  void add(const std::vector<std::pair<int, int>>& plus, const std::vector<std::pair<int, int>>& minus) {
    std::vector<double> row(k_, 0.0);
    auto term = [&](int i, int x, double sign) {
      const double lo = x > 0 ? g_.follower_costs.value(i, x) : 0.0;
      const double hi = g_.follower_costs.value(i, x + 1);
      for (std::size_t k = 0; k < k_; ++k) row[k] += sign * (marg_[k][static_cast<std::size_t>(i)] > 0 ? hi : lo);
    };
    for (auto [i, x] : plus) term(i, x, 1.0);
    for (auto [i, x] : minus) term(i, x, -1.0);
    if (*std::max_element(row.begin(), row.end()) <= 1e-12) return;
    rows_.insert(std::move(row));
  }

  void build(const FollowersOutcome& outcome, const std::vector<int>& nu) {
    rows_.clear();
    if (const auto* prof = std::get_if<Profile>(&outcome)) {
      for (std::size_t p = 0; p < prof->actions.size(); ++p) {
        const auto& actions = g_.followers[p].actions;
        const auto& a = actions[static_cast<std::size_t>(prof->actions[p])];
        for (std::size_t d = 0; d < actions.size(); ++d) {
          if (static_cast<int>(d) == prof->actions[p]) continue;
          const auto& b = actions[d];
          std::vector<std::pair<int, int>> plus, minus;
          for (int i : a) {
            if (!contains(b, i)) plus.emplace_back(i, nu[static_cast<std::size_t>(i)]);
          }
          for (int i : b) {
            if (!contains(a, i)) minus.emplace_back(i, nu[static_cast<std::size_t>(i)] + 1);
          }
          add(plus, minus);
        }
      }
      return;
    }
    const auto& cfg = std::get<Configurations>(outcome);
    for (std::size_t t = 0; t < g_.classes.size(); ++t) {
      for (const auto& ai : g_.classes[t].actions) {
        const int i = ai.front();
        if (cfg.counts[t][static_cast<std::size_t>(i)] == 0) continue;
        for (const auto& aj : g_.classes[t].actions) {
          const int j = aj.front();
          if (j == i) continue;
          add({{i, nu[static_cast<std::size_t>(i)]}}, {{j, nu[static_cast<std::size_t>(j)] + 1}});
        }
      }
    }
  }

  const std::set<std::vector<double>>& rows() const { return rows_; }

 private:
  const Game& g_;
  std::size_t k_;
  std::vector<std::vector<double>> marg_;
  std::set<std::vector<double>> rows_;
};

std::vector<double> leader_vertex_costs(const Game& g, const std::vector<int>& nu) {
  std::vector<double> L;
  for (const auto& a : g.leader_actions) {
    double c = 0;
    for (int i : a) c += g.leader_costs.value(i, nu[static_cast<std::size_t>(i)] + 1);
    L.push_back(c);
  }
  return L;
}

double margin(double best) { return 1e-9 * std::max(1.0, std::abs(best)); }

void finalize_mixed(const Game& g, OseResult& r) {
  // Round to small denominators and retry the NE test exactly.
  LeaderStrategy rounded;
  Rational total = 0;
  for (double p : r.strategy_float.probabilities) {
    Rational q = approximate_rational(std::max(0.0, p), 1'000'000);
    total += q;
    rounded.probabilities.push_back(q);
  }
  if (total > 0) {
    for (auto& q : rounded.probabilities) q /= total;
    if (is_nash(g, rounded, r.outcome).is_nash) {
      const Rational cost = leader_cost(g, rounded, r.outcome);
      if (std::abs(to_double(cost) - r.value) <= 1e-6 * std::max(1.0, std::abs(r.value))) {
        r.strategy = std::move(rounded);
        r.strategy_float = to_float(r.strategy);
        r.leader_cost = cost;
        r.exact = true;
        return;
      }
    }
  }
  if (!is_nash(g, r.strategy_float, r.outcome, 1e-9).is_nash) {
    throw Error("mixed oracle: winning LP solution fails the NE re-check");
  }
  r.exact = false;
  r.strategy = LeaderStrategy{};
  for (double p : r.strategy_float.probabilities) r.strategy.probabilities.push_back(exact_rational(p));
  r.leader_cost = exact_rational(leader_cost(g, r.strategy_float, r.outcome));
}

}  // namespace

OseResult ose_oracle_pure_leader(const Game& game, const OracleOptions& options) {
  if (game.leader_actions.empty()) throw Error("the leader has no actions");
  OseResult best;
  bool found = false;
  for (std::size_t k = 0; k < game.leader_actions.size(); ++k) {
    const auto sigma = LeaderStrategy::pure(game.leader_actions.size(), k);
    OutcomeEnumerator it(game, options.enumeration);
    FollowersOutcome o;
    while (it.next(o)) {
      check_deadline(options.deadline, ++best.outcomes_examined);
      Rational cost = leader_cost(game, sigma, o);
      if (found && cost >= best.leader_cost) continue;
      if (!is_nash(game, sigma, o).is_nash) continue;
      ++best.equilibria_found;
      found = true;
      best.leader_cost = std::move(cost);
      best.leader_action = static_cast<int>(k);
      best.outcome = o;
      best.strategy = sigma;
    }
  }
  if (!found) throw Error("no pure NE found for any leader action");
  best.strategy_float = to_float(best.strategy);
  best.value = to_double(best.leader_cost);
  return best;
}

OseResult ose_oracle_mixed_leader(const Game& game, const OracleOptions& options) {
  const std::size_t K = game.leader_actions.size();
  if (K == 0) throw Error("the leader has no actions");
  OseResult best;
  bool found = false;
  double best_value = 0;
  NeRows ne(game);
  OutcomeEnumerator it(game, options.enumeration);
  FollowersOutcome o;
  while (it.next(o)) {
    check_deadline(options.deadline, ++best.outcomes_examined);
    const auto nu = congestion(game, o);
    const auto L = leader_vertex_costs(game, nu);
    const std::size_t kmin = static_cast<std::size_t>(std::min_element(L.begin(), L.end()) - L.begin());
    if (found && L[kmin] >= best_value - margin(best_value)) continue;

    ne.build(o, nu);
    bool hopeless = false, pure_ok = true;
    for (const auto& row : ne.rows()) {
      if (*std::min_element(row.begin(), row.end()) > 1e-9) {
        hopeless = true;
        break;
      }
      if (row[kmin] > 1e-9) pure_ok = false;
    }
    if (hopeless) continue;

    std::vector<double> alpha(K, 0.0);
    double value;
    if (pure_ok) {
      alpha[kmin] = 1.0;
      value = L[kmin];
    } else {
      LpProblem lp;
      for (std::size_t k = 0; k < K; ++k) lp.add_variable(L[k], 0.0, 1.0);
      lp.add_row(std::vector<double>(K, 1.0), Relation::equal, 1.0);
      for (const auto& row : ne.rows()) lp.add_row(row, Relation::less_equal, 0.0);
      const LpSolution sol = solve_lp(lp);
      ++best.lps_solved;
      if (sol.status != LpStatus::optimal) continue;
      alpha = sol.x;
      value = sol.objective;
    }
    ++best.equilibria_found;
    if (found && value >= best_value - margin(best_value)) continue;
    found = true;
    best_value = value;
    best.outcome = o;
    best.strategy_float.probabilities = alpha;
  }
  if (!found) throw Error("no followers' outcome admits an NE");
  best.value = best_value;
  finalize_mixed(game, best);
  return best;
}

}  // namespace scg
