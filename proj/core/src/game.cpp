#include "scg/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "scg/errors.hpp"

namespace scg {

const char* to_string(GameKind kind) {
  switch (kind) {
    case GameKind::general_scg:
      return "general_scg";
    case GameKind::tclass_sscg:
      return "tclass_sscg";
  }
  return "unknown";
}

GameKind parse_game_kind(const std::string& text) {
  if (text == "general_scg") return GameKind::general_scg;
  if (text == "tclass_sscg") return GameKind::tclass_sscg;
  throw ParseError("unknown game kind \"" + text + "\"", "kind");
}

// ---------------------------------------------------------------------------
// CostTable

CostTable::CostTable(std::vector<std::vector<Rational>> rows, bool monotone)
    : rows_(std::move(rows)), monotone_(monotone) {
  float_rows_.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<double> f(row.size());
    std::transform(row.begin(), row.end(), f.begin(), [](const Rational& r) { return to_double(r); });
    float_rows_.push_back(std::move(f));
  }
}

const Rational& CostTable::at(int i, int x) const {
  static const Rational kZero = 0;
  const auto& row = rows_.at(static_cast<std::size_t>(i));
  if (x == 0) return kZero;
  if (x < 0 || x > static_cast<int>(row.size())) {
    throw std::out_of_range("cost lookup c_" + std::to_string(i) + "(" + std::to_string(x) +
                            ") beyond stored length " + std::to_string(row.size()));
  }
  return row[static_cast<std::size_t>(x - 1)];
}

double CostTable::value(int i, int x) const {
  const auto& row = float_rows_.at(static_cast<std::size_t>(i));
  if (x == 0) return 0.0;
  if (x < 0 || x > static_cast<int>(row.size())) {
    throw std::out_of_range("cost lookup c_" + std::to_string(i) + "(" + std::to_string(x) +
                            ") beyond stored length " + std::to_string(row.size()));
  }
  return row[static_cast<std::size_t>(x - 1)];
}

// ---------------------------------------------------------------------------
// Game

int Game::follower_count() const {
  if (kind == GameKind::general_scg) return static_cast<int>(followers.size());
  int n = 0;
  for (const auto& c : classes) n += c.count;
  return n;
}

const std::vector<ResourceSet>& Game::actions_of(int who) const {
  if (kind == GameKind::general_scg) return followers.at(static_cast<std::size_t>(who)).actions;
  return classes.at(static_cast<std::size_t>(who)).actions;
}

std::vector<int> Game::class_resources(int t) const {
  std::vector<int> out;
  for (const auto& a : classes.at(static_cast<std::size_t>(t)).actions) {
    if (!a.empty()) out.push_back(a.front());
  }
  return out;
}

std::vector<int> Game::max_follower_congestion() const {
  std::vector<int> vmax(static_cast<std::size_t>(std::max(resources, 0)), 0);
  auto usable = [&](const std::vector<ResourceSet>& actions) {
    std::set<int> res;
    for (const auto& a : actions) {
      for (int i : a) {
        if (i >= 0 && i < resources) res.insert(i);
      }
    }
    return res;
  };
  if (kind == GameKind::general_scg) {
    for (const auto& f : followers) {
      for (int i : usable(f.actions)) ++vmax[static_cast<std::size_t>(i)];
    }
  } else {
    for (const auto& c : classes) {
      for (int i : usable(c.actions)) vmax[static_cast<std::size_t>(i)] += c.count;
    }
  }
  return vmax;
}

std::vector<int> Game::required_cost_length() const {
  auto len = max_follower_congestion();
  for (auto& v : len) v += 3;
  return len;
}

bool Game::operator==(const Game& other) const {
  return kind == other.kind && resources == other.resources &&
         leader_actions == other.leader_actions && followers == other.followers &&
         classes == other.classes && follower_costs == other.follower_costs &&
         leader_costs == other.leader_costs && metadata == other.metadata;
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.location << ": " << v.message << "\n";
  return os.str();
}

namespace {

void check_action(const Game& g, const ResourceSet& a, const std::string& where, bool singleton,
                  std::vector<Violation>& out) {
  if (a.empty()) {
    out.push_back({where, "action must be a non-empty resource set"});
    return;
  }
  if (singleton && a.size() != 1) out.push_back({where, "singleton required"});
  if (!std::is_sorted(a.begin(), a.end()) ||
      std::adjacent_find(a.begin(), a.end()) != a.end()) {
    out.push_back({where, "resources must be sorted and distinct"});
  }
  for (int i : a) {
    if (i < 0 || i >= g.resources) {
      out.push_back({where, "resource " + std::to_string(i) + " out of range"});
    }
  }
}

void check_action_list(const Game& g, const std::vector<ResourceSet>& actions,
                       const std::string& where, bool singleton, std::vector<Violation>& out) {
  if (actions.empty()) out.push_back({where, "action set must be non-empty"});
  std::set<ResourceSet> seen;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const std::string loc = where + "[" + std::to_string(k) + "]";
    check_action(g, actions[k], loc, singleton, out);
    if (!seen.insert(actions[k]).second) out.push_back({loc, "duplicate action"});
  }
}

void check_costs(const Game& g, const CostTable& table, const std::string& name,
                 const std::vector<int>& required, std::vector<Violation>& out) {
  if (table.resource_count() != g.resources) {
    out.push_back({name, "expected " + std::to_string(g.resources) + " rows, got " +
                             std::to_string(table.resource_count())});
    return;
  }
  for (int i = 0; i < g.resources; ++i) {
    const std::string loc = name + "[" + std::to_string(i) + "]";
    if (table.length(i) < required[static_cast<std::size_t>(i)]) {
      out.push_back({loc, "cost table too short: length " + std::to_string(table.length(i)) +
                              " < required " + std::to_string(required[static_cast<std::size_t>(i)])});
    }
    if (table.monotone()) {
      for (int x = 1; x < table.length(i); ++x) {
        if (table.at(i, x) > table.at(i, x + 1)) {
          out.push_back({loc, "monotone flag set but c(" + std::to_string(x) + ") > c(" +
                                  std::to_string(x + 1) + ")"});
          break;
        }
      }
    }
  }
}

}  // namespace

ValidationReport validate(const Game& g) {
  ValidationReport report;
  auto& out = report.violations;
  if (g.resources < 1) {
    out.push_back({"resources", "at least one resource required"});
    return report;
  }
  const bool singleton = g.kind == GameKind::tclass_sscg;
  check_action_list(g, g.leader_actions, "leader_actions", singleton, out);

  if (g.kind == GameKind::general_scg) {
    if (!g.classes.empty()) out.push_back({"classes", "general_scg games use followers, not classes"});
    for (std::size_t p = 0; p < g.followers.size(); ++p) {
      check_action_list(g, g.followers[p].actions, "followers[" + std::to_string(p) + "].actions",
                        false, out);
    }
  } else {
    if (!g.followers.empty()) out.push_back({"followers", "tclass_sscg games use classes, not followers"});
    if (g.classes.empty()) out.push_back({"classes", "at least one class required"});
    for (std::size_t t = 0; t < g.classes.size(); ++t) {
      const std::string loc = "classes[" + std::to_string(t) + "]";
      if (g.classes[t].count < 1) out.push_back({loc + ".n", "class must have at least one follower"});
      check_action_list(g, g.classes[t].actions, loc + ".actions", true, out);
    }
  }

  const auto required = g.required_cost_length();
  check_costs(g, g.follower_costs, "follower_costs", required, out);
  check_costs(g, g.leader_costs, "leader_costs", required, out);
  if (g.follower_costs.monotone() != g.leader_costs.monotone()) {
    out.push_back({"monotone", "follower and leader tables disagree on the monotone flag"});
  }
  return report;
}

bool all_actions_singleton(const Game& g) {
  auto single = [](const std::vector<ResourceSet>& actions) {
    return std::all_of(actions.begin(), actions.end(), [](const ResourceSet& a) { return a.size() == 1; });
  };
  if (!single(g.leader_actions)) return false;
  for (const auto& f : g.followers) {
    if (!single(f.actions)) return false;
  }
  for (const auto& c : g.classes) {
    if (!single(c.actions)) return false;
  }
  return true;
}

bool has_symmetric_singleton_followers(const Game& g) {
  if (g.kind != GameKind::general_scg || g.followers.empty()) return false;
  const auto& first = g.followers.front().actions;
  for (const auto& f : g.followers) {
    if (f.actions != first) return false;
    for (const auto& a : f.actions) {
      if (a.size() != 1) return false;
    }
  }
  return true;
}

Game expand_to_general(const Game& g) {
  if (g.kind != GameKind::tclass_sscg) throw Error("expand_to_general expects a tclass_sscg game");
  Game out = g;
  out.kind = GameKind::general_scg;
  out.classes.clear();
  for (const auto& c : g.classes) {
    for (int k = 0; k < c.count; ++k) out.followers.push_back(FollowerSpec{c.actions});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Outcomes and strategies

LeaderStrategyF to_float(const LeaderStrategy& s) {
  LeaderStrategyF f;
  f.probabilities.reserve(s.probabilities.size());
  for (const auto& p : s.probabilities) f.probabilities.push_back(to_double(p));
  return f;
}

std::vector<int> congestion(const Game& g, const FollowersOutcome& outcome) {
  std::vector<int> nu(static_cast<std::size_t>(g.resources), 0);
  if (const auto* prof = std::get_if<Profile>(&outcome)) {
    for (std::size_t p = 0; p < prof->actions.size(); ++p) {
      const auto& a = g.followers.at(p).actions.at(static_cast<std::size_t>(prof->actions[p]));
      for (int i : a) ++nu[static_cast<std::size_t>(i)];
    }
  } else {
    const auto& cfg = std::get<Configurations>(outcome);
    for (const auto& row : cfg.counts) {
      for (std::size_t i = 0; i < row.size() && i < nu.size(); ++i) nu[i] += row[i];
    }
  }
  return nu;
}

std::vector<std::string> outcome_violations(const Game& g, const FollowersOutcome& outcome) {
  std::vector<std::string> out;
  if (const auto* prof = std::get_if<Profile>(&outcome)) {
    if (g.kind != GameKind::general_scg) {
      out.push_back("profile outcomes require a general_scg game");
      return out;
    }
    if (prof->actions.size() != g.followers.size()) {
      out.push_back("profile has " + std::to_string(prof->actions.size()) + " entries for " +
                    std::to_string(g.followers.size()) + " followers");
      return out;
    }
    for (std::size_t p = 0; p < prof->actions.size(); ++p) {
      const int a = prof->actions[p];
      if (a < 0 || a >= static_cast<int>(g.followers[p].actions.size())) {
        out.push_back("follower " + std::to_string(p) + " plays invalid action " + std::to_string(a));
      }
    }
    return out;
  }
  const auto& cfg = std::get<Configurations>(outcome);
  if (g.kind != GameKind::tclass_sscg) {
    out.push_back("configuration outcomes require a tclass_sscg game");
    return out;
  }
  if (cfg.counts.size() != g.classes.size()) {
    out.push_back("configuration has " + std::to_string(cfg.counts.size()) + " classes, game has " +
                  std::to_string(g.classes.size()));
    return out;
  }
  for (std::size_t t = 0; t < cfg.counts.size(); ++t) {
    const auto& row = cfg.counts[t];
    if (row.size() != static_cast<std::size_t>(g.resources)) {
      out.push_back("class " + std::to_string(t) + " configuration has wrong length");
      continue;
    }
    const auto avail = g.class_resources(static_cast<int>(t));
    int sum = 0;
    for (int i = 0; i < g.resources; ++i) {
      const int c = row[static_cast<std::size_t>(i)];
      if (c < 0) out.push_back("class " + std::to_string(t) + " has a negative count");
      if (c > 0 && std::find(avail.begin(), avail.end(), i) == avail.end()) {
        out.push_back("class " + std::to_string(t) + " uses unavailable resource " + std::to_string(i));
      }
      sum += c;
    }
    if (sum != g.classes[t].count) {
      out.push_back("class " + std::to_string(t) + " places " + std::to_string(sum) + " of " +
                    std::to_string(g.classes[t].count) + " followers");
    }
  }
  return out;
}

template <class S>
std::vector<std::string> strategy_violations(const Game& g, const BasicLeaderStrategy<S>& s,
                                             double tolerance) {
  std::vector<std::string> out;
  if (s.probabilities.size() != g.leader_actions.size()) {
    out.push_back("strategy has " + std::to_string(s.probabilities.size()) + " entries for " +
                  std::to_string(g.leader_actions.size()) + " leader actions");
    return out;
  }
  S sum = 0;
  for (std::size_t k = 0; k < s.probabilities.size(); ++k) {
    if (s.probabilities[k] < S(-tolerance)) {
      out.push_back("negative probability on leader action " + std::to_string(k));
    }
    sum += s.probabilities[k];
  }
  if constexpr (std::is_same_v<S, double>) {
    if (std::fabs(sum - 1.0) > tolerance) out.push_back("probabilities sum to " + std::to_string(sum));
  } else {
    if (sum != 1) out.push_back("probabilities sum to " + to_string(sum));
  }
  return out;
}

template <class S>
std::vector<S> resource_marginals(const Game& g, const BasicLeaderStrategy<S>& s) {
  std::vector<S> m(static_cast<std::size_t>(g.resources), S(0));
  for (std::size_t k = 0; k < g.leader_actions.size() && k < s.probabilities.size(); ++k) {
    if (s.probabilities[k] == S(0)) continue;
    for (int i : g.leader_actions[k]) m[static_cast<std::size_t>(i)] += s.probabilities[k];
  }
  return m;
}

template std::vector<std::string> strategy_violations(const Game&, const BasicLeaderStrategy<Rational>&, double);
template std::vector<std::string> strategy_violations(const Game&, const BasicLeaderStrategy<double>&, double);
template std::vector<Rational> resource_marginals(const Game&, const BasicLeaderStrategy<Rational>&);
template std::vector<double> resource_marginals(const Game&, const BasicLeaderStrategy<double>&);

Profile profile_from_configurations(const Game& g, const Configurations& cfg) {
  Profile prof;
  for (std::size_t t = 0; t < g.classes.size(); ++t) {
    const auto& actions = g.classes[t].actions;
    for (std::size_t k = 0; k < actions.size(); ++k) {
      const int i = actions[k].front();
      for (int c = 0; c < cfg.counts.at(t).at(static_cast<std::size_t>(i)); ++c) {
        prof.actions.push_back(static_cast<int>(k));
      }
    }
  }
  return prof;
}

}  // namespace scg
