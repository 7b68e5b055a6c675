#include <algorithm>
#include <cmath>
#include <map>

#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/milp.hpp"

namespace scg {
namespace {

std::string idx(const char* prefix, int a) { return prefix + std::to_string(a); }

class Builder {
 public:
  explicit Builder(const Game& g) : g_(g), vmax_(g.max_follower_congestion()) {
    if (auto report = validate(g); !report.ok()) throw Error("invalid game: " + report.summary());
  }

  double cf(int i, int x) const { return x == 0 ? 0.0 : g_.follower_costs.value(i, x); }
  double cl(int i, int x) const { return x == 0 ? 0.0 : g_.leader_costs.value(i, x); }

  void congestion_variables() {
    auto& d = m_.decode;
    d.y.assign(static_cast<std::size_t>(g_.resources), {});
    d.z.assign(static_cast<std::size_t>(g_.resources), {});
    for (int i = 0; i < g_.resources; ++i) {
      for (int v = 1; v <= vmax_[i]; ++v) {
        d.y[i].push_back(m_.add_variable("y_i" + std::to_string(i) + "_v" + std::to_string(v), VarKind::binary, 0, 1));
      }
    }
    for (int i = 0; i < g_.resources; ++i) {
      for (int v = 1; v <= vmax_[i]; ++v) {
        d.z[i].push_back(m_.add_variable("z_i" + std::to_string(i) + "_v" + std::to_string(v), VarKind::continuous, 0, 1));
      }
    }
  }

  // σ_ℓ(i) as a sum of α variables.
  LinearTerms sigma(int i) const {
    LinearTerms t;
    if (g_.kind == GameKind::tclass_sscg) {
      t.emplace_back(m_.decode.alpha[i], 1.0);
    } else {
      for (std::size_t k = 0; k < g_.leader_actions.size(); ++k) {
        const auto& a = g_.leader_actions[k];
        if (std::binary_search(a.begin(), a.end(), i)) t.emplace_back(m_.decode.alpha[k], 1.0);
      }
    }
    return t;
  }

  // Expected cost of joining resource j: c^σ_j(ν_j+1), including ν_j = 0.
  // Returns the constant part; the variable part goes into `terms`.
  double add_deviation(int j, double sign, LinearTerms& terms) const {
    const double c1 = cf(j, 1), d1 = cf(j, 2) - cf(j, 1);
    const auto& d = m_.decode;
    for (int v = 1; v <= vmax_[j]; ++v) {
      terms.emplace_back(d.y[j][v - 1], sign * (cf(j, v + 1) - c1));
      terms.emplace_back(d.z[j][v - 1], sign * ((cf(j, v + 2) - cf(j, v + 1)) - d1));
    }
    for (auto [a, c] : sigma(j)) terms.emplace_back(a, sign * c * d1);
    return sign * c1;
  }

  // Expected cost of staying on resource i: c^σ_i(ν_i) with ν_i ≥ 1.
  void add_current(int i, double sign, LinearTerms& terms) const {
    const auto& d = m_.decode;
    for (int v = 1; v <= vmax_[i]; ++v) {
      terms.emplace_back(d.y[i][v - 1], sign * cf(i, v));
      terms.emplace_back(d.z[i][v - 1], sign * (cf(i, v + 1) - cf(i, v)));
    }
  }

  void common_rows() {
    const auto& d = m_.decode;
    for (int i = 0; i < g_.resources; ++i) {
      if (vmax_[i] == 0) continue;
      LinearTerms t;
      for (int y : d.y[i]) t.emplace_back(y, 1.0);
      m_.add_constraint(idx("y_sum_i", i), std::move(t), Relation::less_equal, 1.0);
    }
  }

  void mccormick_rows() {
    const auto& d = m_.decode;
    for (int i = 0; i < g_.resources; ++i) {
      const auto s = sigma(i);
      for (int v = 1; v <= vmax_[i]; ++v) {
        const std::string tag = "_i" + std::to_string(i) + "_v" + std::to_string(v);
        const int z = d.z[i][v - 1], y = d.y[i][v - 1];
        LinearTerms upper_alpha{{z, 1.0}};
        for (auto [a, c] : s) upper_alpha.emplace_back(a, -c);
        m_.add_constraint("mc_alpha" + tag, std::move(upper_alpha), Relation::less_equal, 0.0);
        m_.add_constraint("mc_y" + tag, {{z, 1.0}, {y, -1.0}}, Relation::less_equal, 0.0);
        LinearTerms lower{{z, 1.0}, {y, -1.0}};
        for (auto [a, c] : s) lower.emplace_back(a, -c);
        m_.add_constraint("mc_low" + tag, std::move(lower), Relation::greater_equal, -1.0);
      }
    }
    LinearTerms simplex;
    for (int a : d.alpha) simplex.emplace_back(a, 1.0);
    m_.add_constraint("simplex", std::move(simplex), Relation::equal, 1.0);
  }

  // Σ_i σ(i)·c_{i,ℓ}(ν_i+1), with the empty-resource term c_{i,ℓ}(1)·(σ(i) − Σ_v z_iv).
  void objective() {
    std::map<int, double> coef;
    const auto& d = m_.decode;
    for (int i = 0; i < g_.resources; ++i) {
      const double c1 = cl(i, 1);
      for (int v = 1; v <= vmax_[i]; ++v) coef[d.z[i][v - 1]] += cl(i, v + 1) - c1;
      for (auto [a, c] : sigma(i)) coef[a] += c * c1;
    }
    for (auto [v, c] : coef) {
      if (c != 0.0) m_.objective.emplace_back(v, c);
    }
  }

  double max_cost(int i) const {
    double best = 0;
    for (int v = 1; v <= vmax_[i] + 2; ++v) best = std::max(best, cf(i, v));
    return best;
  }
  double min_cost(int i) const {
    double best = 0;
    for (int v = 1; v <= vmax_[i] + 2; ++v) best = std::min(best, cf(i, v));
    return best;
  }

  const Game& g_;
  std::vector<int> vmax_;
  MilpModel m_;
};

}  // namespace

MilpModel build_milp_tclass(const Game& g) {
  if (g.kind != GameKind::tclass_sscg) throw InapplicableSolver("tclass formulation needs a tclass_sscg game");
  Builder b(g);
  auto& m = b.m_;
  auto& d = m.decode;
  d.kind = GameKind::tclass_sscg;
  const int T = g.class_count(), r = g.resources;

  d.q.assign(T, std::vector<std::vector<int>>(r));
  for (int t = 0; t < T; ++t) {
    for (int i : g.class_resources(t)) {
      for (int v = 1; v <= g.classes[t].count; ++v) {
        d.q[t][i].push_back(m.add_variable("q_t" + std::to_string(t) + "_i" + std::to_string(i) + "_v" + std::to_string(v),
                                           VarKind::binary, 0, 1));
      }
    }
  }
  b.congestion_variables();
  std::vector<bool> leader_may(r, false);
  for (const auto& a : g.leader_actions) leader_may[a.front()] = true;
  for (int i = 0; i < r; ++i) d.alpha.push_back(m.add_variable(idx("a", i), VarKind::continuous, 0, leader_may[i] ? 1 : 0));

  double hi = 0, lo = 0;
  for (int i = 0; i < r; ++i) {
    hi = std::max(hi, b.max_cost(i));
    lo = std::min(lo, b.min_cost(i));
  }
  m.big_m = 1 + hi - lo;

  b.objective();
  for (int t = 0; t < T; ++t) {
    for (int i : g.class_resources(t)) {
      LinearTerms s;
      for (int q : d.q[t][i]) s.emplace_back(q, 1.0);
      m.add_constraint("q_sum_t" + std::to_string(t) + "_i" + std::to_string(i), std::move(s), Relation::less_equal, 1.0);
    }
  }
  b.common_rows();
  for (int t = 0; t < T; ++t) {
    LinearTerms s;
    for (int i : g.class_resources(t)) {
      for (std::size_t v = 0; v < d.q[t][i].size(); ++v) s.emplace_back(d.q[t][i][v], static_cast<double>(v + 1));
    }
    m.add_constraint(idx("class_t", t), std::move(s), Relation::equal, g.classes[t].count);
  }
  for (int i = 0; i < r; ++i) {
    if (b.vmax_[i] == 0) continue;
    LinearTerms s;
    for (int t = 0; t < T; ++t) {
      for (std::size_t v = 0; v < d.q[t][i].size(); ++v) s.emplace_back(d.q[t][i][v], static_cast<double>(v + 1));
    }
    for (std::size_t v = 0; v < d.y[i].size(); ++v) s.emplace_back(d.y[i][v], -static_cast<double>(v + 1));
    m.add_constraint(idx("cong_i", i), std::move(s), Relation::equal, 0.0);
  }
  for (int t = 0; t < T; ++t) {
    const auto res = g.class_resources(t);
    for (int i : res) {
      for (int j : res) {
        if (i == j) continue;
        LinearTerms s;
        const double constant = b.add_deviation(j, 1.0, s);
        b.add_current(i, -1.0, s);
        for (int q : d.q[t][i]) s.emplace_back(q, -m.big_m);
        m.add_constraint("ne_t" + std::to_string(t) + "_i" + std::to_string(i) + "_j" + std::to_string(j), std::move(s),
                         Relation::greater_equal, -m.big_m - constant);
      }
    }
  }
  b.mccormick_rows();
  return std::move(b.m_);
}

MilpModel build_milp_general(const Game& g) {
  if (g.kind != GameKind::general_scg) throw InapplicableSolver("general formulation needs a general_scg game");
  Builder b(g);
  auto& m = b.m_;
  auto& d = m.decode;
  d.kind = GameKind::general_scg;
  const int F = g.follower_count(), r = g.resources;

  d.x.resize(F);
  for (int p = 0; p < F; ++p) {
    for (std::size_t a = 0; a < g.followers[p].actions.size(); ++a) {
      d.x[p].push_back(m.add_variable("x_p" + std::to_string(p) + "_a" + std::to_string(a), VarKind::binary, 0, 1));
    }
  }
  b.congestion_variables();
  for (std::size_t k = 0; k < g.leader_actions.size(); ++k) {
    d.alpha.push_back(m.add_variable(idx("a", static_cast<int>(k)), VarKind::continuous, 0, 1));
  }

  double sum_max = 0, sum_min = 0;
  for (int i = 0; i < r; ++i) {
    sum_max += b.max_cost(i);
    sum_min += b.min_cost(i);
  }
  m.big_m = 1 + sum_max - sum_min;

  b.objective();
  for (int p = 0; p < F; ++p) {
    LinearTerms s;
    for (int x : d.x[p]) s.emplace_back(x, 1.0);
    m.add_constraint(idx("pick_p", p), std::move(s), Relation::equal, 1.0);
  }
  b.common_rows();
  for (int i = 0; i < r; ++i) {
    if (b.vmax_[i] == 0) continue;
    LinearTerms s;
    for (std::size_t v = 0; v < d.y[i].size(); ++v) s.emplace_back(d.y[i][v], static_cast<double>(v + 1));
    for (int p = 0; p < F; ++p) {
      const auto& actions = g.followers[p].actions;
      for (std::size_t a = 0; a < actions.size(); ++a) {
        if (std::binary_search(actions[a].begin(), actions[a].end(), i)) s.emplace_back(d.x[p][a], -1.0);
      }
    }
    m.add_constraint(idx("cong_i", i), std::move(s), Relation::equal, 0.0);
  }
  for (int p = 0; p < F; ++p) {
    const auto& actions = g.followers[p].actions;
    for (std::size_t a = 0; a < actions.size(); ++a) {
      for (std::size_t a2 = 0; a2 < actions.size(); ++a2) {
        if (a == a2) continue;
        LinearTerms s;
        double constant = 0;
        // Shared resources cancel; only the symmetric difference matters.
        for (int j : actions[a2]) {
          if (!std::binary_search(actions[a].begin(), actions[a].end(), j)) constant += b.add_deviation(j, 1.0, s);
        }
        for (int i : actions[a]) {
          if (!std::binary_search(actions[a2].begin(), actions[a2].end(), i)) b.add_current(i, -1.0, s);
        }
        s.emplace_back(d.x[p][a], -m.big_m);
        m.add_constraint("ne_p" + std::to_string(p) + "_a" + std::to_string(a) + "_b" + std::to_string(a2),
                         std::move(s), Relation::greater_equal, -m.big_m - constant);
      }
    }
  }
  b.mccormick_rows();
  return std::move(b.m_);
}

MilpModel build_milp(const Game& g) {
  return g.kind == GameKind::tclass_sscg ? build_milp_tclass(g) : build_milp_general(g);
}

DecodedOse extract_ose(const MilpModel& model, const MilpSolution& sol, const Game& g) {
  if (!sol.has_incumbent) throw Error("the MILP solution has no incumbent");
  const auto& x = sol.values;
  const auto& d = model.decode;
  DecodedOse out;
  auto val = [&](int v) { return x.at(static_cast<std::size_t>(v)); };

  if (d.kind == GameKind::tclass_sscg) {
    for (const auto& a : g.leader_actions) out.strategy.probabilities.push_back(std::clamp(val(d.alpha[a.front()]), 0.0, 1.0));
    Configurations cfg;
    cfg.counts.assign(g.classes.size(), std::vector<int>(static_cast<std::size_t>(g.resources), 0));
    for (std::size_t t = 0; t < d.q.size(); ++t) {
      for (std::size_t i = 0; i < d.q[t].size(); ++i) {
        for (std::size_t v = 0; v < d.q[t][i].size(); ++v) {
          if (val(d.q[t][i][v]) > 0.5) cfg.counts[t][i] += static_cast<int>(v + 1);
        }
      }
    }
    out.outcome = std::move(cfg);
  } else {
    for (int a : d.alpha) out.strategy.probabilities.push_back(std::clamp(val(a), 0.0, 1.0));
    Profile prof;
    for (const auto& xs : d.x) {
      std::size_t best = 0;
      for (std::size_t a = 1; a < xs.size(); ++a) {
        if (val(xs[a]) > val(xs[best])) best = a;
      }
      prof.actions.push_back(static_cast<int>(best));
    }
    out.outcome = std::move(prof);
  }

  const auto sigma = resource_marginals(g, out.strategy);
  for (std::size_t i = 0; i < d.y.size(); ++i) {
    for (std::size_t v = 0; v < d.y[i].size(); ++v) {
      out.mccormick_residual = std::max(out.mccormick_residual, std::abs(val(d.z[i][v]) - val(d.y[i][v]) * sigma[i]));
    }
  }
  if (outcome_violations(g, out.outcome).empty()) {
    out.leader_cost = leader_cost(g, out.strategy, out.outcome);
    out.is_nash = is_nash(g, out.strategy, out.outcome, 1e-6).is_nash;
  }
  return out;
}

std::vector<double> encode_solution(const MilpModel& model, const Game& g, const LeaderStrategyF& strategy,
                                    const FollowersOutcome& outcome) {
  const auto& d = model.decode;
  std::vector<double> x(model.variables.size(), 0.0);
  const auto nu = congestion(g, outcome);
  const auto sigma = resource_marginals(g, strategy);
  if (d.kind == GameKind::tclass_sscg) {
    for (std::size_t k = 0; k < g.leader_actions.size(); ++k) x[d.alpha[g.leader_actions[k].front()]] += strategy.probabilities[k];
    const auto& cfg = std::get<Configurations>(outcome);
    for (std::size_t t = 0; t < d.q.size(); ++t) {
      for (std::size_t i = 0; i < d.q[t].size(); ++i) {
        const int c = cfg.counts[t][i];
        if (c > 0) x[d.q[t][i][c - 1]] = 1;
      }
    }
  } else {
    for (std::size_t k = 0; k < d.alpha.size(); ++k) x[d.alpha[k]] = strategy.probabilities[k];
    const auto& prof = std::get<Profile>(outcome);
    for (std::size_t p = 0; p < d.x.size(); ++p) x[d.x[p][prof.actions[p]]] = 1;
  }
  for (std::size_t i = 0; i < d.y.size(); ++i) {
    if (nu[i] > 0) {
      x[d.y[i][nu[i] - 1]] = 1;
      x[d.z[i][nu[i] - 1]] = sigma[i];
    }
  }
  return x;
}

}  // namespace scg
