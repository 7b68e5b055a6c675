#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace scg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { less_equal, greater_equal, equal };

const char* to_string(Relation rel);

struct LpRow {
  std::vector<double> coeffs;  // dense, one per variable
  Relation relation = Relation::less_equal;
  double rhs = 0;
};

/// min cᵀx  s.t. rows, lower ≤ x ≤ upper.
struct LpProblem {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int add_variable(double cost, double lb = 0.0, double ub = kInf);
  void add_row(std::vector<double> coeffs, Relation rel, double rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;
  double objective = 0;
  std::uint64_t iterations = 0;
};

struct LpOptions {
  double pivot_tolerance = 1e-10;
  double feasibility_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  /// Degenerate pivots in a row before switching to Bland's rule.
  int degenerate_limit = 50;
  /// 0 selects a size-based default. Exceeding it throws scg::Error.
  std::uint64_t max_iterations = 0;
};

/// Dense bounded-variable two-phase primal simplex. Throws std::invalid_argument
/// on inconsistent dimensions or non-finite coefficients.
LpSolution solve_lp(const LpProblem& problem, const LpOptions& options = {});

/// Largest violation of rows and bounds at x (0 when feasible).
double max_violation(const LpProblem& problem, const std::vector<double>& x);

}  // namespace scg
