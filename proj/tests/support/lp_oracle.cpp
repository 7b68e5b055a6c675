#include "lp_oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <vector>

namespace scg::testing {
namespace {

struct Half {
  Eigen::VectorXd a;
  double b;
  Relation rel;
};

bool satisfied(const Half& h, const Eigen::VectorXd& x) {
  const double v = h.a.dot(x), tol = 1e-7 * (1 + std::abs(h.b));
  switch (h.rel) {
    case Relation::less_equal: return v <= h.b + tol;
    case Relation::greater_equal: return v >= h.b - tol;
    case Relation::equal: return std::abs(v - h.b) <= tol;
  }
  return false;
}

// Minimum of c·x over the polytope, by trying every n-subset of constraints
// as the active set.
std::optional<double> vertex_min(const Eigen::VectorXd& c, const std::vector<Half>& halves) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(halves.size());
  std::optional<double> best;
  std::vector<int> pick(n);
  for (int k = 0; k < n; ++k) pick[k] = k;
  if (m < n) return best;
  for (;;) {
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd b(n);
    for (int k = 0; k < n; ++k) {
      A.row(k) = halves[pick[k]].a.transpose();
      b(k) = halves[pick[k]].b;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rank() == n) {
      const Eigen::VectorXd x = lu.solve(b);
      bool ok = true;
      for (const auto& h : halves) {
        if (!satisfied(h, x)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        const double v = c.dot(x);
        if (!best || v < *best) best = v;
      }
    }
    int k = n - 1;
    while (k >= 0 && pick[k] == m - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

std::vector<Half> halves_of(const LpProblem& lp, bool homogeneous, double box) {
  const int n = static_cast<int>(lp.objective.size());
  std::vector<Half> out;
  for (const auto& row : lp.rows) {
    const Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(row.coeffs.data(), n);
    out.push_back({a, homogeneous ? 0.0 : row.rhs, row.relation});
  }
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Unit(n, j);
    const double lo = lp.lower[j], hi = lp.upper[j];
    if (std::isfinite(lo)) {
      out.push_back({e, homogeneous ? 0.0 : lo, Relation::greater_equal});
    } else {
      out.push_back({e, -box, Relation::greater_equal});
    }
    if (std::isfinite(hi)) {
      out.push_back({e, homogeneous ? 0.0 : hi, Relation::less_equal});
    } else {
      out.push_back({e, box, Relation::less_equal});
    }
  }
  return out;
}

}  // namespace

LpOracleResult lp_vertex_oracle(const LpProblem& lp) {
  const int n = static_cast<int>(lp.objective.size());
  const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(lp.objective.data(), n);
  LpOracleResult res;
  const auto value = vertex_min(c, halves_of(lp, false, 1e4));
  if (!value) return res;
  const auto ray = vertex_min(c, halves_of(lp, true, 1.0));
  if (ray && *ray < -1e-9) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.objective = *value;
  return res;
}

}  // namespace scg::testing
