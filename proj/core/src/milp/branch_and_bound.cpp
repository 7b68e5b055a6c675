#include <algorithm>
#include <cmath>
#include <vector>

#include "scg/deadline.hpp"
#include "scg/milp.hpp"

namespace scg {
namespace {

struct Node {
  std::vector<double> lower, upper;
  double bound;
  std::vector<double> x;
};

class BranchAndBound {
 public:
  BranchAndBound(const MilpModel& model, const MilpParams& params)
      : model_(model), params_(params), base_(model.relaxation()), deadline_(Deadline::after(params.time_limit)) {
    for (std::size_t j = 0; j < model.variables.size(); ++j) {
      if (model.variables[j].kind == VarKind::binary) binaries_.push_back(static_cast<int>(j));
    }
  }

  MilpSolution run() {
    if (params_.initial_incumbent && model_violation(model_, *params_.initial_incumbent) <= 1e-6) {
      offer(*params_.initial_incumbent);
    }
    LpSolution root = solve(base_.lower, base_.upper);
    ++sol_.nodes;
    if (root.status == LpStatus::unbounded) {
      sol_.status = MilpStatus::unbounded;
      return finish(-kInf);
    }
    if (root.status == LpStatus::infeasible) return finish_exhausted();
    consider(base_.lower, base_.upper, std::move(root));

    while (!stack_.empty()) {
      if (deadline_.expired() || (params_.node_limit && sol_.nodes >= params_.node_limit)) {
        sol_.status = MilpStatus::timeout;
        return finish(open_bound());
      }
      if (sol_.has_incumbent && relative_gap(sol_.objective, open_bound()) <= params_.gap_tolerance) {
        sol_.status = MilpStatus::optimal;
        return finish(std::min(open_bound(), sol_.objective));
      }
      Node node = std::move(stack_.back());
      stack_.pop_back();
      if (prunable(node.bound)) continue;

      const int j = most_fractional(node.x);
      Node down{node.lower, node.upper, 0, {}}, up{node.lower, node.upper, 0, {}};
      down.upper[j] = 0;
      up.lower[j] = 1;
      LpSolution sd = solve(down.lower, down.upper);
      LpSolution su = solve(up.lower, up.upper);
      sol_.nodes += 2;
      report(node.bound, sd);
      report(node.bound, su);

      // Push the worse child first so the better one is explored next.
      const double vd = sd.status == LpStatus::optimal ? sd.objective : kInf;
      const double vu = su.status == LpStatus::optimal ? su.objective : kInf;
      if (vd <= vu) {
        consider(std::move(up.lower), std::move(up.upper), std::move(su));
        consider(std::move(down.lower), std::move(down.upper), std::move(sd));
      } else {
        consider(std::move(down.lower), std::move(down.upper), std::move(sd));
        consider(std::move(up.lower), std::move(up.upper), std::move(su));
      }
    }
    return finish_exhausted();
  }

 private:
  LpSolution solve(const std::vector<double>& lower, const std::vector<double>& upper) {
    LpProblem lp = base_;
    lp.lower = lower;
    lp.upper = upper;
    LpSolution s = solve_lp(lp);
    sol_.lp_iterations += s.iterations;
    return s;
  }

  void report(double parent, const LpSolution& child) {
    if (params_.on_node && child.status == LpStatus::optimal) params_.on_node({parent, child.objective});
  }

  bool prunable(double bound) const {
    return sol_.has_incumbent && bound >= sol_.objective - 1e-9 * std::max(1.0, std::abs(sol_.objective));
  }

  bool integral(const std::vector<double>& x) const {
    return std::all_of(binaries_.begin(), binaries_.end(), [&](int j) {
      return std::abs(x[j] - std::round(x[j])) <= params_.integrality_tolerance;
    });
  }

  int most_fractional(const std::vector<double>& x) const {
    int best = -1;
    double score = -1;
    for (int j : binaries_) {
      const double f = x[j] - std::floor(x[j]);
      const double s = std::min(f, 1 - f);
      if (s > score) {
        score = s;
        best = j;
      }
    }
    return best;
  }

  void offer(std::vector<double> x) {
    double obj = 0;
    for (const auto& [v, c] : model_.objective) obj += c * x[static_cast<std::size_t>(v)];
    if (!sol_.has_incumbent || obj < sol_.objective) {
      sol_.has_incumbent = true;
      sol_.objective = obj;
      sol_.values = std::move(x);
    }
  }

  void consider(std::vector<double> lower, std::vector<double> upper, LpSolution lp) {
    if (lp.status != LpStatus::optimal || prunable(lp.objective)) return;
    if (integral(lp.x)) {
      for (int j : binaries_) lp.x[j] = std::round(lp.x[j]);
      offer(std::move(lp.x));
      return;
    }
    stack_.push_back(Node{std::move(lower), std::move(upper), lp.objective, std::move(lp.x)});
  }

  double open_bound() const {
    double lb = sol_.has_incumbent ? sol_.objective : kInf;
    for (const auto& n : stack_) lb = std::min(lb, n.bound);
    return lb;
  }

  MilpSolution finish_exhausted() {
    sol_.status = sol_.has_incumbent ? MilpStatus::optimal : MilpStatus::infeasible;
    return finish(sol_.has_incumbent ? sol_.objective : kInf);
  }

  MilpSolution finish(double lower_bound) {
    sol_.lower_bound = lower_bound;
    sol_.gap = sol_.has_incumbent ? relative_gap(sol_.objective, lower_bound) : kInf;
    return std::move(sol_);
  }

  const MilpModel& model_;
  const MilpParams& params_;
  LpProblem base_;
  Deadline deadline_;
  std::vector<int> binaries_;
  std::vector<Node> stack_;
  MilpSolution sol_;
};

}  // namespace

MilpSolution solve_milp(const MilpModel& model, const MilpParams& params) {
  return BranchAndBound(model, params).run();
}

}  // namespace scg
