#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "scg/rational.hpp"

namespace scg {

/// Sorted, duplicate-free list of 0-based resource indices.
using ResourceSet = std::vector<int>;

enum class GameKind { general_scg, tclass_sscg };

const char* to_string(GameKind kind);
GameKind parse_game_kind(const std::string& text);

/// Per-resource cost rows c_i(1..length). c_i(0) is implicitly zero.
class CostTable {
 public:
  CostTable() = default;
  explicit CostTable(std::vector<std::vector<Rational>> rows, bool monotone = false);

  int resource_count() const { return static_cast<int>(rows_.size()); }
  /// Largest congestion stored for resource i.
  int length(int i) const { return static_cast<int>(rows_.at(i).size()); }

  /// c_i(x); throws std::out_of_range when x exceeds the stored length.
  const Rational& at(int i, int x) const;
  /// Float view of c_i(x).
  double value(int i, int x) const;

  bool monotone() const { return monotone_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  bool operator==(const CostTable& other) const {
    return monotone_ == other.monotone_ && rows_ == other.rows_;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::vector<double>> float_rows_;
  bool monotone_ = false;
};

struct FollowerSpec {
  std::vector<ResourceSet> actions;

  bool operator==(const FollowerSpec&) const = default;
};

/// Followers of one class share the same (singleton) actions.
struct FollowerClass {
  int count = 0;
  std::vector<ResourceSet> actions;

  bool operator==(const FollowerClass&) const = default;
};

/// A Stackelberg congestion game. `followers` is used for general_scg,
/// `classes` for tclass_sscg; the other list stays empty.
struct Game {
  GameKind kind = GameKind::general_scg;
  int resources = 0;
  std::vector<ResourceSet> leader_actions;
  std::vector<FollowerSpec> followers;
  std::vector<FollowerClass> classes;
  CostTable follower_costs;
  CostTable leader_costs;
  nlohmann::json metadata = nlohmann::json::object();

  int follower_count() const;
  /// n: followers plus the leader.
  int player_count() const { return follower_count() + 1; }
  int class_count() const { return static_cast<int>(classes.size()); }

  /// Action list of follower p (general) or of class t (tclass).
  const std::vector<ResourceSet>& actions_of(int who) const;
  /// Resource ids available to class t, in action order.
  std::vector<int> class_resources(int t) const;

  /// v_i^max: number of followers that can select each resource.
  std::vector<int> max_follower_congestion() const;
  /// Cost rows must reach this congestion: v_i^max + 1 (leader) + 2.
  std::vector<int> required_cost_length() const;

  bool operator==(const Game& other) const;
};

struct Violation {
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Game& game);

/// Every action (leader and followers) is a single resource.
bool all_actions_singleton(const Game& game);
/// General SCG whose followers all share one list of singleton actions.
bool has_symmetric_singleton_followers(const Game& game);

/// Recasts a T-class SSCG as a general SCG with one follower per class member.
Game expand_to_general(const Game& tclass_game);

// --------------------------------------------------------------------------
// Strategies and outcomes

/// Probability per leader action (index into Game::leader_actions).
template <class S>
struct BasicLeaderStrategy {
  std::vector<S> probabilities;

  static BasicLeaderStrategy pure(std::size_t action_count, std::size_t action) {
    BasicLeaderStrategy s;
    s.probabilities.assign(action_count, S(0));
    s.probabilities.at(action) = S(1);
    return s;
  }

  bool operator==(const BasicLeaderStrategy&) const = default;
};

using LeaderStrategy = BasicLeaderStrategy<Rational>;
using LeaderStrategyF = BasicLeaderStrategy<double>;

LeaderStrategyF to_float(const LeaderStrategy& strategy);

/// Chosen action index per follower (general SCGs).
struct Profile {
  std::vector<int> actions;

  bool operator==(const Profile&) const = default;
};

/// counts[t][i]: followers of class t on resource i (T-class SSCGs).
struct Configurations {
  std::vector<std::vector<int>> counts;

  bool operator==(const Configurations&) const = default;
};

using FollowersOutcome = std::variant<Profile, Configurations>;

/// ν_i: followers on each resource.
std::vector<int> congestion(const Game& game, const FollowersOutcome& outcome);

/// Empty when the outcome is well-formed for the game.
std::vector<std::string> outcome_violations(const Game& game, const FollowersOutcome& outcome);

/// Empty when probabilities are non-negative, sum to one and match A_ℓ.
/// For double strategies the sum is checked within `tolerance`.
template <class S>
std::vector<std::string> strategy_violations(const Game& game, const BasicLeaderStrategy<S>& s,
                                             double tolerance = 0.0);

/// σ_ℓ(i) = Σ over leader actions containing i.
template <class S>
std::vector<S> resource_marginals(const Game& game, const BasicLeaderStrategy<S>& strategy);

/// A labeled profile realizing per-class configurations: followers are
/// numbered class by class, resources filled in ascending order.
Profile profile_from_configurations(const Game& tclass_game, const Configurations& configs);

}  // namespace scg
