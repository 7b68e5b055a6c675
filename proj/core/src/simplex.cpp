#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scg/errors.hpp"
#include "scg/lp.hpp"

namespace scg {

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "Optimal";
    case LpStatus::infeasible: return "Infeasible";
    case LpStatus::unbounded: return "Unbounded";
  }
  return "?";
}

int LpProblem::add_variable(double cost, double lb, double ub) {
  objective.push_back(cost);
  lower.push_back(lb);
  upper.push_back(ub);
  for (auto& row : rows) row.coeffs.push_back(0.0);
  return num_vars() - 1;
}

void LpProblem::add_row(std::vector<double> coeffs, Relation rel, double rhs) {
  coeffs.resize(objective.size(), 0.0);
  rows.push_back(LpRow{std::move(coeffs), rel, rhs});
}

double max_violation(const LpProblem& p, const std::vector<double>& x) {
  double worst = 0;
  for (int j = 0; j < p.num_vars(); ++j) {
    worst = std::max(worst, p.lower[j] - x[j]);
    worst = std::max(worst, x[j] - p.upper[j]);
  }
  for (const auto& row : p.rows) {
    double lhs = 0;
    for (int j = 0; j < p.num_vars(); ++j) lhs += row.coeffs[j] * x[j];
    const double diff = lhs - row.rhs;
    switch (row.relation) {
      case Relation::less_equal: worst = std::max(worst, diff); break;
      case Relation::greater_equal: worst = std::max(worst, -diff); break;
      case Relation::equal: worst = std::max(worst, std::abs(diff)); break;
    }
  }
  return worst;
}

namespace {

// Original variable j = offset + Σ sign·x'_col over its columns.
struct VarMap {
  double offset = 0;
  int col = -1;
  double sign = 1;
  int neg_col = -1;  // second column of a split free variable
};

class Tableau {
 public:
  Tableau(int rows, int cols, const LpOptions& opt)
      : m_(rows), n_(cols), w_(cols + 1), opt_(opt), t_(static_cast<std::size_t>(rows) * w_, 0.0),
        ub_(cols, kInf), at_upper_(cols, false), basic_row_(cols, -1), basis_(rows, -1), xb_(rows, 0.0),
        d_(cols, 0.0) {}

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  double& rhs(int i) { return at(i, n_); }

  void set_upper(int j, double u) { ub_[j] = u; }
  void set_basic(int i, int j) {
    basis_[i] = j;
    basic_row_[j] = i;
    xb_[i] = rhs(i);
  }

  double value(int j) const {
    if (basic_row_[j] >= 0) return xb_[basic_row_[j]];
    return at_upper_[j] ? ub_[j] : 0.0;
  }

  enum class Outcome { optimal, unbounded };

  Outcome run(const std::vector<double>& cost, std::uint64_t& iterations, std::uint64_t limit) {
    reprice(cost);
    int degenerate = 0;
    bool bland = false;
    std::uint64_t since_refresh = 0;
    for (;;) {
      if (++since_refresh >= 100) {
        reprice(cost);
        refresh_values();
        since_refresh = 0;
      }
      const int j = choose_entering(bland);
      if (j < 0) return Outcome::optimal;
      if (++iterations > limit) throw Error("simplex iteration limit reached");

      const double dir = at_upper_[j] ? -1.0 : 1.0;
      int r = -1;
      double theta = 0;
      if (!ratio_test(j, dir, bland, r, theta)) return Outcome::unbounded;

      for (int i = 0; i < m_; ++i) {
        const double a = dir * at(i, j);
        if (a != 0.0) xb_[i] -= a * theta;
      }
      if (r < 0) {
        at_upper_[j] = !at_upper_[j];
      } else {
        const int leaving = basis_[r];
        const double a = dir * at(r, j);
        const double entering_value = (at_upper_[j] ? ub_[j] : 0.0) + dir * theta;
        basic_row_[leaving] = -1;
        at_upper_[leaving] = a < 0;
        pivot(r, j);
        xb_[r] = entering_value;
      }
      if (theta <= 1e-12) {
        if (++degenerate >= opt_.degenerate_limit) bland = true;
      } else {
        degenerate = 0;
        bland = false;
      }
    }
  }

  void clamp_values() {
    for (int i = 0; i < m_; ++i) {
      const int j = basis_[i];
      if (xb_[i] < 0 && xb_[i] > -opt_.feasibility_tolerance * 10) xb_[i] = 0;
      if (ub_[j] < kInf && xb_[i] > ub_[j]) xb_[i] = std::min(xb_[i], ub_[j] + opt_.feasibility_tolerance);
    }
  }

  int rows() const { return m_; }
  int basis(int i) const { return basis_[i]; }

 private:
  void reprice(const std::vector<double>& cost) {
    for (int j = 0; j < n_; ++j) d_[j] = cost[j];
    for (int i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = &t_[static_cast<std::size_t>(i) * w_];
      for (int j = 0; j < n_; ++j) d_[j] -= cb * row[j];
    }
    for (int i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
  }

  // xB = B⁻¹b − Σ_{nonbasic at upper} B⁻¹A_j u_j
  void refresh_values() {
    for (int i = 0; i < m_; ++i) xb_[i] = rhs(i);
    for (int j = 0; j < n_; ++j) {
      if (basic_row_[j] >= 0 || !at_upper_[j]) continue;
      for (int i = 0; i < m_; ++i) xb_[i] -= at(i, j) * ub_[j];
    }
  }

  int choose_entering(bool bland) const {
    int best = -1;
    double best_score = 0;
    for (int j = 0; j < n_; ++j) {
      if (basic_row_[j] >= 0 || ub_[j] <= 0.0) continue;
      const double dj = d_[j];
      const bool eligible = at_upper_[j] ? dj > opt_.optimality_tolerance : dj < -opt_.optimality_tolerance;
      if (!eligible) continue;
      if (bland) return j;
      if (std::abs(dj) > best_score) {
        best_score = std::abs(dj);
        best = j;
      }
    }
    return best;
  }

  // Two-pass Harris ratio test. r = -1 signals a bound flip of the entering column.
  bool ratio_test(int j, double dir, bool bland, int& r, double& theta) const {
    const double tol = opt_.feasibility_tolerance;
    const double ptol = opt_.pivot_tolerance;
    double relaxed = ub_[j];
    for (int i = 0; i < m_; ++i) {
      const double a = dir * at(i, j);
      if (a > ptol) {
        relaxed = std::min(relaxed, (xb_[i] + tol) / a);
      } else if (a < -ptol) {
        const double u = ub_[basis_[i]];
        if (u < kInf) relaxed = std::min(relaxed, (u - xb_[i] + tol) / -a);
      }
    }
    if (relaxed == kInf) return false;

    r = -1;
    double best_pivot = 0;
    double step = ub_[j];
    for (int i = 0; i < m_; ++i) {
      const double a = dir * at(i, j);
      double ratio;
      if (a > ptol) {
        ratio = xb_[i] / a;
      } else if (a < -ptol && ub_[basis_[i]] < kInf) {
        ratio = (ub_[basis_[i]] - xb_[i]) / -a;
      } else {
        continue;
      }
      if (ratio > relaxed) continue;
      const bool better = bland ? (r < 0 || basis_[i] < basis_[r]) : std::abs(a) > best_pivot;
      if (better) {
        r = i;
        best_pivot = std::abs(a);
        step = ratio;
      }
    }
    if (ub_[j] < kInf && ub_[j] <= relaxed && (r < 0 || ub_[j] <= step)) {
      r = -1;
      theta = ub_[j];
      return true;
    }
    theta = std::max(step, 0.0);
    return true;
  }

  void pivot(int r, int j) {
    double* prow = &t_[static_cast<std::size_t>(r) * w_];
    const double inv = 1.0 / prow[j];
    for (int k = 0; k < w_; ++k) prow[k] *= inv;
    prow[j] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &t_[static_cast<std::size_t>(i) * w_];
      const double f = row[j];
      if (f == 0.0) continue;
      for (int k = 0; k < w_; ++k) {
        if (prow[k] != 0.0) row[k] -= f * prow[k];
      }
      row[j] = 0.0;
    }
    const double dj = d_[j];
    if (dj != 0.0) {
      for (int k = 0; k < n_; ++k) d_[k] -= dj * prow[k];
      d_[j] = 0.0;
    }
    basis_[r] = j;
    basic_row_[j] = r;
  }

  int m_, n_, w_;
  LpOptions opt_;
  std::vector<double> t_;
  std::vector<double> ub_;
  std::vector<bool> at_upper_;
  std::vector<int> basic_row_;
  std::vector<int> basis_;
  std::vector<double> xb_;
  std::vector<double> d_;
};

void check_input(const LpProblem& p) {
  const auto n = p.objective.size();
  if (p.lower.size() != n || p.upper.size() != n) throw std::invalid_argument("bound vectors do not match");
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(p.objective[j])) throw std::invalid_argument("non-finite objective coefficient");
    if (std::isnan(p.lower[j]) || std::isnan(p.upper[j]) || p.lower[j] == kInf || p.upper[j] == -kInf) {
      throw std::invalid_argument("invalid variable bound");
    }
  }
  for (const auto& row : p.rows) {
    if (row.coeffs.size() != n) throw std::invalid_argument("constraint row has the wrong length");
    if (!std::isfinite(row.rhs)) throw std::invalid_argument("non-finite right-hand side");
    for (double a : row.coeffs) {
      if (!std::isfinite(a)) throw std::invalid_argument("non-finite constraint coefficient");
    }
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& p, const LpOptions& opt) {
  check_input(p);
  const int n = p.num_vars();
  LpSolution sol;

  std::vector<VarMap> map(n);
  std::vector<double> col_cost, col_ub;
  for (int j = 0; j < n; ++j) {
    const double lb = p.lower[j], ub = p.upper[j];
    if (lb > ub) return sol;
    auto& m = map[j];
    if (lb == ub) {
      m.offset = lb;
    } else if (lb > -kInf) {
      m.offset = lb;
      m.col = static_cast<int>(col_cost.size());
      col_cost.push_back(p.objective[j]);
      col_ub.push_back(ub - lb);
    } else if (ub < kInf) {
      m.offset = ub;
      m.sign = -1;
      m.col = static_cast<int>(col_cost.size());
      col_cost.push_back(-p.objective[j]);
      col_ub.push_back(kInf);
    } else {
      m.col = static_cast<int>(col_cost.size());
      col_cost.push_back(p.objective[j]);
      col_ub.push_back(kInf);
      m.neg_col = static_cast<int>(col_cost.size());
      col_cost.push_back(-p.objective[j]);
      col_ub.push_back(kInf);
    }
  }
  const int structural = static_cast<int>(col_cost.size());

  // Rows in transformed space, scaled, oriented as ≤ or =.
  struct Row {
    std::vector<double> a;
    bool equality;
    double b;
  };
  std::vector<Row> rows;
  double b_scale = 1;
  for (const auto& row : p.rows) {
    Row r{std::vector<double>(structural, 0.0), row.relation == Relation::equal, row.rhs};
    for (int j = 0; j < n; ++j) {
      const double a = row.coeffs[j];
      if (a == 0.0) continue;
      r.b -= a * map[j].offset;
      if (map[j].col >= 0) r.a[map[j].col] += a * map[j].sign;
      if (map[j].neg_col >= 0) r.a[map[j].neg_col] -= a;
    }
    double big = 0;
    for (double a : r.a) big = std::max(big, std::abs(a));
    if (big == 0.0) {
      const double tol = opt.feasibility_tolerance * std::max(1.0, std::abs(row.rhs));
      const bool ok = row.relation == Relation::less_equal      ? 0.0 <= r.b + tol
                      : row.relation == Relation::greater_equal ? 0.0 >= r.b - tol
                                                                : std::abs(r.b) <= tol;
      if (!ok) return sol;
      continue;
    }
    for (double& a : r.a) a /= big;
    r.b /= big;
    if (row.relation == Relation::greater_equal) {
      for (double& a : r.a) a = -a;
      r.b = -r.b;
    }
    b_scale = std::max(b_scale, std::abs(r.b));
    rows.push_back(std::move(r));
  }

  const int m = static_cast<int>(rows.size());
  int slacks = 0, artificials = 0;
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  std::vector<bool> negate(m, false);
  for (int i = 0; i < m; ++i) {
    if (!rows[i].equality) slack_col[i] = structural + slacks++;
  }
  for (int i = 0; i < m; ++i) {
    const bool slack_basis = !rows[i].equality && rows[i].b >= 0;
    if (!slack_basis) {
      art_col[i] = structural + slacks + artificials++;
      negate[i] = rows[i].b < 0;
    }
  }
  const int cols = structural + slacks + artificials;

  Tableau tab(m, cols, opt);
  for (int j = 0; j < structural; ++j) tab.set_upper(j, col_ub[j]);
  for (int i = 0; i < m; ++i) {
    const double s = negate[i] ? -1.0 : 1.0;
    for (int j = 0; j < structural; ++j) tab.at(i, j) = s * rows[i].a[j];
    if (slack_col[i] >= 0) tab.at(i, slack_col[i]) = s;
    tab.rhs(i) = s * rows[i].b;
    if (art_col[i] >= 0) {
      tab.at(i, art_col[i]) = 1.0;
      tab.set_basic(i, art_col[i]);
    } else {
      tab.set_basic(i, slack_col[i]);
    }
  }

  const std::uint64_t limit = opt.max_iterations ? opt.max_iterations : 20000 + 50ull * (m + cols);
  if (artificials > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (int i = 0; i < m; ++i) {
      if (art_col[i] >= 0) phase1[art_col[i]] = 1.0;
    }
    tab.run(phase1, sol.iterations, limit);
    double infeasibility = 0;
    for (int i = 0; i < m; ++i) {
      if (art_col[i] >= 0) infeasibility += tab.value(art_col[i]);
    }
    if (infeasibility > 10 * opt.feasibility_tolerance * b_scale) return sol;
    // Artificials are pinned at zero from here on.
    for (int i = 0; i < m; ++i) {
      if (art_col[i] >= 0) tab.set_upper(art_col[i], 0.0);
    }
  }
  tab.clamp_values();

  std::vector<double> phase2(cols, 0.0);
  std::copy(col_cost.begin(), col_cost.end(), phase2.begin());
  if (tab.run(phase2, sol.iterations, limit) == Tableau::Outcome::unbounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  tab.clamp_values();

  sol.status = LpStatus::optimal;
  sol.x.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const auto& mj = map[j];
    double v = mj.offset;
    if (mj.col >= 0) v += mj.sign * tab.value(mj.col);
    if (mj.neg_col >= 0) v -= tab.value(mj.neg_col);
    // Snap tiny bound excursions caused by the tolerant ratio test.
    v = std::clamp(v, p.lower[j], p.upper[j]);
    sol.x[j] = v;
  }
  for (int j = 0; j < n; ++j) sol.objective += p.objective[j] * sol.x[j];
  return sol;
}

}  // namespace scg
