#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scg/game.hpp"

namespace scg::cli {

namespace fs = std::filesystem;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kError = 2 };

/// SCG_OUTPUT_DIR when set, else the working directory.
fs::path default_output_dir();

struct GenArgs {
  std::string generator;  // tclass, scg, 3sat-hard, kpart-hard
  int r = 10;
  int classes = 1;
  std::vector<int> class_sizes{5};
  int players = 5;
  int action_size = 1;
  std::optional<int> actions;
  bool monotone = false;
  int count = 1;
  std::uint64_t seed = 1;
  int vars = 4;
  double ratio = 4.26;
  std::string epsilon = "1/4";
  std::optional<fs::path> cnf;
  bool leader_only_w = false;
  int size = 20;
  fs::path out_dir = default_output_dir();
};

/// Writes `count` instances; instance k uses seed + k.
std::vector<fs::path> cmd_gen(const GenArgs& args);

struct SolveArgs {
  std::string solver;  // dp, milp, oracle-pure, oracle-mixed, export-lp
  double time_limit = 600;
  /// Seed branch-and-bound with the pure-leader DP equilibrium when applicable.
  bool warm_start = true;
  std::optional<fs::path> lp_out;
  double cap = 1e7;
};

/// Result record: status, objective, lower_bound, gap, strategy, outcome,
/// time_ms and solver details. Solver failures come back as status "Error".
nlohmann::ordered_json solve(const Game& game, const SolveArgs& args, const std::string& instance_name = {});

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Re-checks a result record: outcome shape, strategy, NE and claimed cost.
VerifyReport verify(const Game& game, const nlohmann::json& record);

struct BenchArgs {
  fs::path dir;
  std::vector<std::string> solvers{"dp", "milp"};
  double time_limit = 60;
  bool warm_start = true;
};

struct BenchRow {
  std::string instance, kind;
  int r = 0, n = 0, T = 0;
  std::string solver, status;
  double objective = 0, lower_bound = 0, gap = 0, time_ms = 0;
  std::string seed;
};

extern const char* const kBenchHeader;

std::vector<BenchRow> run_bench(const BenchArgs& args);
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);
/// Per (kind, r, n, T, solver): instances, % solved, mean time, mean gap.
void write_bench_summary(const std::vector<BenchRow>& rows, std::ostream& out);

/// Full command line; returns the process exit code.
int run(int argc, char** argv);

}  // namespace scg::cli
