#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scg/errors.hpp"
#include "scg/game.hpp"

namespace scg {

struct Literal {
  int var = 0;
  bool negated = false;

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

struct CnfInstance {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

/// Satisfying assignment by exhaustive search (num_vars ≤ 24).
std::optional<std::vector<bool>> brute_force_sat(const CnfInstance& cnf);
CnfInstance parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfInstance& cnf);
/// ⌊ratio·num_vars⌋ clauses over three distinct variables with random signs.
CnfInstance gen_random_3sat(int num_vars, double clause_ratio, std::uint64_t seed, std::uint64_t instance = 0);

struct ThreeSatOptions {
  /// Restrict the leader to the singleton action a_w.
  bool leader_only_w = false;
};

/// Symmetric SCG whose optimal commitment costs ε exactly when the formula is
/// satisfiable, and at least 1 otherwise. Requires 0 < ε < 1.
Game reduce_3sat(const CnfInstance& cnf, const Rational& epsilon, const ThreeSatOptions& options = {});

/// Resource and action ids used by reduce_3sat.
struct ThreeSatLayout {
  explicit ThreeSatLayout(const CnfInstance& cnf);

  int r_w() const { return 0; }
  int r_pos(int u) const { return 1 + 3 * u; }
  int r_neg(int u) const { return 2 + 3 * u; }
  int r_t(int u) const { return 3 + 3 * u; }
  int r_clause(int c) const { return 1 + 3 * num_vars + c; }
  int r_literal(Literal l) const { return l.negated ? r_neg(l.var) : r_pos(l.var); }

  int a_w() const { return 0; }
  int a_pos(int u) const { return 1 + 2 * u; }
  int a_neg(int u) const { return 2 + 2 * u; }

  int num_vars;
  /// Per clause, its distinct literals and the matching action ids.
  std::vector<std::vector<std::pair<Literal, int>>> clause_actions;
  int resource_count;
  int action_count;
};

/// Followers' profile built from a satisfying assignment, with the leader on a_w.
Profile three_sat_witness(const CnfInstance& cnf, const std::vector<bool>& assignment, const Game& game);

struct KPartitionInstance {
  std::vector<std::int64_t> items;
  int k = 0;

  std::int64_t total() const;
};

/// An item exceeds half the total, so the instance is trivially "no".
class KPartitionTrivialNo : public Error {
 public:
  using Error::Error;
};

/// Indices of a size-K subset summing to half the total.
std::optional<std::vector<int>> brute_force_kpartition(const KPartitionInstance& inst);
/// size items uniform in [2,100], K = size/2, resampled until valid.
KPartitionInstance gen_random_kpartition(int size, std::uint64_t seed, std::uint64_t instance = 0);

/// Four-class SSCG whose optimal commitment costs at most 2X − X/K when the
/// instance is a yes-instance.
Game reduce_kpartition(const KPartitionInstance& inst);

struct KPartitionWitness {
  LeaderStrategy strategy;
  Configurations outcome;
  Rational leader_cost;  // 2X − X/K
};

/// Commitment and configurations built from a solving subset.
KPartitionWitness kpartition_witness(const KPartitionInstance& inst, const std::vector<int>& subset);

}  // namespace scg
