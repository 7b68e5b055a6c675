#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "scg/cli.hpp"
#include "scg/errors.hpp"
#include "scg/rational.hpp"
#include "scg/game_io.hpp"

namespace scg::cli {

namespace {

void add_common_gen(CLI::App* cmd, GenArgs& a) {
  cmd->add_option("--count", a.count, "Instances to write")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "Seed of the first instance");
  cmd->add_option("--out", a.out_dir, "Output directory (default $SCG_OUTPUT_DIR or .)");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Optimistic Stackelberg equilibria in congestion games"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* g_tc = gen_cmd->add_subcommand("tclass", "Random T-class singleton game");
  g_tc->add_option("--r", gen.r, "Resources")->check(CLI::PositiveNumber);
  g_tc->add_option("--T", gen.classes, "Follower classes")->check(CLI::PositiveNumber);
  g_tc->add_option("--nt", gen.class_sizes, "Followers per class (one value or one per class)");
  g_tc->add_option("--actions", gen.actions, "Actions per class (default r/2)");
  g_tc->add_flag("--monotone", gen.monotone, "Sort cost rows");
  add_common_gen(g_tc, gen);
  auto* g_scg = gen_cmd->add_subcommand("scg", "Random general congestion game");
  g_scg->add_option("--r", gen.r, "Resources")->check(CLI::PositiveNumber);
  g_scg->add_option("--n", gen.players, "Players including the leader")->check(CLI::Range(2, 1 << 20));
  g_scg->add_option("--action-size", gen.action_size, "Resources per action")->check(CLI::PositiveNumber);
  g_scg->add_option("--actions", gen.actions, "Actions per player (default r/2)");
  g_scg->add_flag("--monotone", gen.monotone, "Sort cost rows");
  add_common_gen(g_scg, gen);
  auto* g_sat = gen_cmd->add_subcommand("3sat-hard", "Game built from a 3SAT formula");
  g_sat->add_option("--vars", gen.vars, "Variables of the random formula");
  g_sat->add_option("--ratio", gen.ratio, "Clauses per variable");
  g_sat->add_option("--cnf", gen.cnf, "DIMACS formula instead of a random one")->check(CLI::ExistingFile);
  auto* eps_opt = g_sat->add_option("--epsilon", gen.epsilon, "Leader cost of a satisfiable formula");
  int eps_exp = 0;
  g_sat->add_option("--epsilon-exp", eps_exp, "Use epsilon = 2^-I")->excludes(eps_opt)->check(CLI::PositiveNumber);
  g_sat->add_flag("--leader-only-w", gen.leader_only_w, "Leader restricted to a_w");
  add_common_gen(g_sat, gen);
  auto* g_kp = gen_cmd->add_subcommand("kpart-hard", "Game built from a random K-PARTITION instance");
  g_kp->add_option("--size", gen.size, "Items |S| (even)");
  add_common_gen(g_kp, gen);

  std::string instance_path, output_path;
  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--solver", solve_args.solver, "Solver")
      ->required()
      ->check(CLI::IsMember({"dp", "milp", "oracle-pure", "oracle-mixed", "export-lp"}));
  solve_cmd->add_option("--time-limit", solve_args.time_limit, "Seconds");
  solve_cmd->add_option("--cap", solve_args.cap, "Oracle enumeration cap");
  solve_cmd->add_option("--lp", solve_args.lp_out, "LP file written by export-lp");
  bool no_warm = false;
  solve_cmd->add_flag("--no-warm-start", no_warm, "Do not seed branch-and-bound with the DP equilibrium");
  solve_cmd->add_option("-o,--output", output_path, "Write the result record here instead of stdout");

  std::string solution_path;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a result record");
  verify_cmd->add_option("instance", instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("solution", solution_path, "Result record")->required()->check(CLI::ExistingFile);

  BenchArgs bench;
  std::string csv_path, summary_path;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every instance in a directory");
  bench_cmd->add_option("dir", bench.dir, "Instance directory")->required()->check(CLI::ExistingDirectory);
  bench_cmd->add_option("--solvers", bench.solvers, "Solvers to run")->delimiter(',');
  bench_cmd->add_option("--time-limit", bench.time_limit, "Seconds per run");
  bench_cmd->add_option("--csv", csv_path, "Results CSV (default stdout)");
  bench_cmd->add_option("--summary", summary_path, "Aggregate CSV");
  bool bench_no_warm = false;
  bench_cmd->add_flag("--no-warm-start", bench_no_warm, "Do not seed branch-and-bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (gen_cmd->parsed()) {
      for (auto* sub : gen_cmd->get_subcommands()) gen.generator = sub->get_name();
      if (eps_exp > 0) gen.epsilon = "1/" + boost::multiprecision::mpz_int(boost::multiprecision::mpz_int(1) << eps_exp).str();
      for (const auto& p : cmd_gen(gen)) std::cout << p.string() << "\n";
      return kOk;
    }
    if (solve_cmd->parsed()) {
      solve_args.warm_start = !no_warm;
      const Game game = load_game_file(instance_path);
      const auto rec = solve(game, solve_args, fs::path(instance_path).filename().string());
      const std::string text = rec.dump(2) + "\n";
      if (output_path.empty()) {
        std::cout << text;
      } else {
        write_text_file(output_path, text);
      }
      const std::string status = rec["status"];
      if (status == "Error" || status == "Inapplicable" || status == "CapExceeded") {
        std::cerr << "error: " << rec.value("error", status) << "\n";
        return kError;
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const Game game = load_game_file(instance_path);
      const auto rec = nlohmann::json::parse(read_text_file(solution_path));
      const auto report = verify(game, rec);
      for (const auto& line : report.lines) std::cout << line << "\n";
      return report.ok ? kOk : kVerifyFailed;
    }
    if (bench_cmd->parsed()) {
      bench.warm_start = !bench_no_warm;
      const auto rows = run_bench(bench);
      if (csv_path.empty()) {
        write_bench_csv(rows, std::cout);
      } else {
        std::ofstream out(csv_path);
        write_bench_csv(rows, out);
      }
      if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        write_bench_summary(rows, out);
      }
      return kOk;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace scg::cli
