#include <gtest/gtest.h>

#include <cmath>

#include "lp_oracle.hpp"
#include "random_lp.hpp"
#include "scg/lp.hpp"
#include "scg/rng.hpp"

using namespace scg;
using namespace scg::testing;

TEST(SolveLp, BoundActiveOptimum) {
  LpProblem lp;
  lp.add_variable(1.0);
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_NEAR(sol.x[0], 0.0, 1e-12);
  EXPECT_NEAR(sol.objective, 0.0, 1e-12);
}

TEST(SolveLp, FacetOptimum) {
  LpProblem lp;
  lp.add_variable(-1.0, 0, 1);
  lp.add_variable(-1.0, 0, 1);
  lp.add_row({1, 1}, Relation::less_equal, 1);
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_NEAR(sol.objective, -1.0, 1e-12);
  EXPECT_NEAR(sol.x[0] + sol.x[1], 1.0, 1e-12);
}

TEST(SolveLp, ContradictoryBoundsAreInfeasible) {
  LpProblem lp;
  lp.add_variable(0.0, -kInf, kInf);
  lp.add_row({1}, Relation::greater_equal, 2);
  lp.add_row({1}, Relation::less_equal, 1);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::infeasible);
}

TEST(SolveLp, UnboundedRay) {
  LpProblem lp;
  lp.add_variable(-1.0);
  lp.add_variable(0.0);
  lp.add_row({1, -1}, Relation::less_equal, 2);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::unbounded);
}

TEST(SolveLp, FreeAndUpperOnlyVariables) {
  LpProblem lp;
  lp.add_variable(1.0, -kInf, kInf);
  lp.add_variable(-2.0, -kInf, 3);
  lp.add_row({1, 1}, Relation::greater_equal, -4);
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_NEAR(sol.objective, -7 - 6, 1e-9);
}

TEST(SolveLp, FixedVariableAndEquality) {
  LpProblem lp;
  lp.add_variable(3.0, 2, 2);
  lp.add_variable(1.0, 0, kInf);
  lp.add_row({1, 1}, Relation::equal, 5);
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_NEAR(sol.x[1], 3.0, 1e-12);
  EXPECT_NEAR(sol.objective, 9.0, 1e-12);
}

TEST(SolveLp, DegenerateCycleProneProblem) {
  // Beale's example cycles under textbook pricing without an anti-cycling rule.
  LpProblem lp;
  for (double c : {-0.75, 150.0, -0.02, 6.0}) lp.add_variable(c);
  lp.add_row({0.25, -60, -0.04, 9}, Relation::less_equal, 0);
  lp.add_row({0.5, -90, -0.02, 3}, Relation::less_equal, 0);
  lp.add_row({0, 0, 1, 0}, Relation::less_equal, 1);
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_NEAR(sol.objective, -0.05, 1e-9);
}

TEST(SolveLp, MatchesVertexEnumeration) {
  int statuses[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const LpProblem lp = random_lp(seed);
    const auto sol = solve_lp(lp);
    const auto oracle = lp_vertex_oracle(lp);
    ++statuses[static_cast<int>(oracle.status)];
    ASSERT_EQ(sol.status, oracle.status) << "seed " << seed;
    if (oracle.status == LpStatus::optimal) {
      EXPECT_NEAR(sol.objective, oracle.objective, 1e-8) << "seed " << seed;
      EXPECT_LE(max_violation(lp, sol.x), 1e-8) << "seed " << seed;
    }
  }
  // The generator must exercise every outcome.
  for (int s : statuses) EXPECT_GT(s, 10);
}

TEST(SolveLp, WeakDualityOnCertificates) {
  // min cᵀx, Ax ≥ b, x ≥ 0 with c = Aᵀy + s for random y, s ≥ 0: bᵀy is a
  // lower bound on the optimum.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed, 1, 7);
    const int n = static_cast<int>(rng.uniform(1, 6)), m = static_cast<int>(rng.uniform(1, 6));
    std::vector<std::vector<double>> A(m, std::vector<double>(n));
    std::vector<double> b(m), y(m), c(n);
    for (auto& row : A) {
      for (auto& v : row) v = static_cast<double>(rng.uniform(-3, 5));
    }
    for (int k = 0; k < m; ++k) {
      b[k] = static_cast<double>(rng.uniform(-5, 8));
      y[k] = static_cast<double>(rng.uniform(0, 4));
    }
    for (int j = 0; j < n; ++j) {
      c[j] = static_cast<double>(rng.uniform(0, 3));
      for (int k = 0; k < m; ++k) c[j] += A[k][j] * y[k];
    }
    LpProblem lp;
    for (int j = 0; j < n; ++j) lp.add_variable(c[j]);
    for (int k = 0; k < m; ++k) lp.add_row(A[k], Relation::greater_equal, b[k]);
    const auto sol = solve_lp(lp);
    ASSERT_NE(sol.status, LpStatus::unbounded) << "seed " << seed;
    if (sol.status != LpStatus::optimal) continue;
    double dual = 0;
    for (int k = 0; k < m; ++k) dual += b[k] * y[k];
    EXPECT_LE(dual, sol.objective + 1e-9) << "seed " << seed;
  }
}

TEST(SolveLp, ScaledRowsStayAccurate) {
  LpProblem lp;
  lp.add_variable(1.0);
  lp.add_variable(1.0);
  lp.add_row({1e6, 2e6}, Relation::greater_equal, 3e6);
  lp.add_row({1e-4, -1e-4}, Relation::equal, 0);
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_NEAR(sol.objective, 2.0, 1e-9);
}
