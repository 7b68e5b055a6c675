#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "scg/game.hpp"
#include "scg/lp.hpp"

namespace scg {

enum class VarKind { continuous, binary };

struct MilpVariable {
  std::string name;
  VarKind kind = VarKind::continuous;
  double lower = 0;
  double upper = kInf;
};

using LinearTerms = std::vector<std::pair<int, double>>;

struct MilpConstraint {
  std::string name;
  LinearTerms terms;
  Relation relation = Relation::less_equal;
  double rhs = 0;
};

/// Where the game's entities live among the model variables (-1 = absent).
struct MilpDecode {
  GameKind kind = GameKind::tclass_sscg;
  /// Per leader action (general) or per resource (tclass).
  std::vector<int> alpha;
  std::vector<std::vector<std::vector<int>>> q;  // [t][i][v-1], tclass only
  std::vector<std::vector<int>> y;               // [i][v-1]
  std::vector<std::vector<int>> z;               // [i][v-1]
  std::vector<std::vector<int>> x;               // [p][action], general only
};

/// Solver-independent minimization model.
struct MilpModel {
  std::vector<MilpVariable> variables;
  std::vector<MilpConstraint> constraints;
  LinearTerms objective;
  MilpDecode decode;
  double big_m = 0;

  int add_variable(std::string name, VarKind kind, double lower, double upper);
  void add_constraint(std::string name, LinearTerms terms, Relation rel, double rhs);
  int find(const std::string& name) const;
  std::size_t count_prefix(const std::string& prefix) const;

  /// LP relaxation with the given bounds (defaults to the model's own).
  LpProblem relaxation() const;
};

/// Leader-commitment MILP for T-class SSCGs.
MilpModel build_milp_tclass(const Game& game);
/// Leader-commitment MILP for general SCGs.
MilpModel build_milp_general(const Game& game);
/// Picks the formulation matching game.kind.
MilpModel build_milp(const Game& game);

/// CPLEX LP-file text.
std::string emit_lp_format(const MilpModel& model);

enum class MilpStatus { optimal, infeasible, unbounded, timeout };

const char* to_string(MilpStatus status);

struct MilpNodeEvent {
  double parent_bound;
  double child_bound;
};

struct MilpParams {
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  double gap_tolerance = 1e-9;
  double integrality_tolerance = 1e-6;
  std::uint64_t node_limit = 0;  // 0 = unlimited; hitting it reports timeout
  /// Optional feasible assignment used as the first incumbent.
  std::optional<std::vector<double>> initial_incumbent;
  std::function<void(const MilpNodeEvent&)> on_node;
};

struct MilpSolution {
  MilpStatus status = MilpStatus::infeasible;
  bool has_incumbent = false;
  std::vector<double> values;
  double objective = std::numeric_limits<double>::infinity();
  double lower_bound = -std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  std::uint64_t nodes = 0;
  std::uint64_t lp_iterations = 0;
};

/// (UB − LB)/|UB|; 0 when the bounds meet, +∞ without an incumbent.
double relative_gap(double upper, double lower);

/// Branch-and-bound over simplex relaxations.
MilpSolution solve_milp(const MilpModel& model, const MilpParams& params = {});

/// Largest violation of constraints, bounds and integrality at `values`.
double model_violation(const MilpModel& model, const std::vector<double>& values);

struct DecodedOse {
  LeaderStrategyF strategy;
  FollowersOutcome outcome;
  double leader_cost = 0;
  double mccormick_residual = 0;  // max |z − y·σ(i)|
  bool is_nash = false;            // at tolerance 1e-6
};

/// Reads the leader strategy and followers' outcome back from a solution.
/// Throws scg::Error when the solution carries no incumbent.
DecodedOse extract_ose(const MilpModel& model, const MilpSolution& solution, const Game& game);

/// Model assignment encoding a given (strategy, outcome) pair; used to seed
/// branch-and-bound with a known equilibrium.
std::vector<double> encode_solution(const MilpModel& model, const Game& game, const LeaderStrategyF& strategy,
                                    const FollowersOutcome& outcome);

}  // namespace scg
