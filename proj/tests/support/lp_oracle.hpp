#pragma once

#include <optional>

#include "scg/lp.hpp"

namespace scg::testing {

struct LpOracleResult {
  LpStatus status = LpStatus::infeasible;
  double objective = 0;
};

/// Brute force: enumerates every basic solution with Eigen. Infinite
/// bounds are replaced by a far box so lines and rays still have vertices;
/// unboundedness is read off the recession cone clipped to the unit box.
LpOracleResult lp_vertex_oracle(const LpProblem& lp);

}  // namespace scg::testing
