#include "scg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "scg/deadline.hpp"
#include "scg/dp_solver.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/game_io.hpp"
#include "scg/generators.hpp"
#include "scg/milp.hpp"
#include "scg/oracle.hpp"
#include "scg/reductions.hpp"

namespace scg::cli {

using nlohmann::ordered_json;

fs::path default_output_dir() {
  if (const char* env = std::getenv("SCG_OUTPUT_DIR"); env && *env) return env;
  return ".";
}

namespace {

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
  return s;
}

fs::path write_instance(Game game, const fs::path& dir, const std::string& stem, std::uint64_t seed) {
  fs::create_directories(dir);
  game.metadata["seed"] = seed;
  const auto path = dir / (stem + "-" + std::to_string(seed) + ".json");
  save_game_file(game, path);
  return path;
}

}  // namespace

std::vector<fs::path> cmd_gen(const GenArgs& a) {
  if (a.count < 1) throw Error("--count must be positive");
  std::vector<fs::path> written;
  for (int k = 0; k < a.count; ++k) {
    const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(k);
    if (a.generator == "tclass") {
      TclassParams p;
      p.resources = a.r;
      p.class_sizes = a.class_sizes;
      if (p.class_sizes.size() == 1 && a.classes > 1) p.class_sizes.assign(a.classes, a.class_sizes[0]);
      if (static_cast<int>(p.class_sizes.size()) != a.classes) throw Error("--nt needs one value or one per class");
      p.monotone = a.monotone;
      p.actions_per_class = a.actions;
      const std::string stem = "tclass-r" + std::to_string(a.r) + "-T" + std::to_string(a.classes) + "-nt" +
                               join(p.class_sizes, '_') + (a.monotone ? "-mono" : "");
      written.push_back(write_instance(gen_random_tclass(p, seed), a.out_dir, stem, seed));
    } else if (a.generator == "scg") {
      ScgParams p;
      p.resources = a.r;
      p.players = a.players;
      p.action_size = a.action_size;
      p.actions_per_player = a.actions;
      p.monotone = a.monotone;
      const std::string stem = "scg-r" + std::to_string(a.r) + "-n" + std::to_string(a.players) + "-a" +
                               std::to_string(a.action_size) + (a.monotone ? "-mono" : "");
      written.push_back(write_instance(gen_random_scg(p, seed), a.out_dir, stem, seed));
    } else if (a.generator == "3sat-hard") {
      const CnfInstance cnf = a.cnf ? parse_dimacs(read_text_file(*a.cnf)) : gen_random_3sat(a.vars, a.ratio, seed);
      Game g = reduce_3sat(cnf, parse_rational(a.epsilon), ThreeSatOptions{a.leader_only_w});
      const std::string stem = "3sat-v" + std::to_string(cnf.num_vars) + "-c" + std::to_string(cnf.clauses.size());
      written.push_back(write_instance(std::move(g), a.out_dir, stem, seed));
      if (a.cnf) break;  // a fixed formula yields one instance
    } else if (a.generator == "kpart-hard") {
      const auto inst = gen_random_kpartition(a.size, seed);
      written.push_back(write_instance(reduce_kpartition(inst), a.out_dir, "kpart-s" + std::to_string(a.size), seed));
    } else {
      throw Error("unknown generator '" + a.generator + "'");
    }
  }
  return written;
}

// ---------------------------------------------------------------------------
// solve

namespace {

template <class S>
ordered_json strategy_json(const BasicLeaderStrategy<S>& s) {
  ordered_json out = ordered_json::array();
  for (const auto& p : s.probabilities) {
    if constexpr (std::is_same_v<S, double>) {
      out.push_back(p);
    } else {
      out.push_back(rational_to_json(p));
    }
  }
  return out;
}

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

std::optional<PureLeaderOse> pure_dp(const Game& g, const DpOptions& opts) {
  if (g.kind == GameKind::tclass_sscg) return ose_pure_leader_tclass(g, opts);
  if (has_symmetric_singleton_followers(g)) return ose_pure_leader_symmetric_scg(g, opts);
  return std::nullopt;
}

void fill_exact(ordered_json& rec, const LeaderStrategy& s, const FollowersOutcome& outcome, const Rational& cost,
                bool exact) {
  rec["status"] = "Optimal";
  rec["objective"] = rational_to_json(cost);
  rec["objective_float"] = to_double(cost);
  rec["lower_bound"] = to_double(cost);
  rec["gap"] = 0.0;
  rec["exact"] = exact;
  rec["strategy"] = exact ? strategy_json(s) : strategy_json(to_float(s));
  rec["outcome"] = outcome_to_json(outcome);
}

}  // namespace

ordered_json solve(const Game& game, const SolveArgs& args, const std::string& instance_name) {
  ordered_json rec;
  rec["instance"] = instance_name;
  rec["solver"] = args.solver;
  rec["kind"] = to_string(game.kind);
  Stopwatch sw;
  const Deadline deadline = Deadline::after(args.time_limit);
  try {
    if (auto report = validate(game); !report.ok()) throw Error("invalid instance: " + report.summary());
    if (args.solver == "dp") {
      auto res = pure_dp(game, DpOptions{deadline});
      if (!res) throw InapplicableSolver("dp needs a T-class SSCG or symmetric singleton followers");
      fill_exact(rec, LeaderStrategy::pure(game.leader_actions.size(), res->leader_action), res->outcome,
                 res->leader_cost, true);
      rec["leader_action"] = res->leader_action;
      rec["dp_entries"] = res->stats.entries;
    } else if (args.solver == "oracle-pure" || args.solver == "oracle-mixed") {
      OracleOptions opts;
      opts.enumeration.cap = static_cast<std::uint64_t>(args.cap);
      opts.deadline = deadline;
      const auto res =
          args.solver == "oracle-pure" ? ose_oracle_pure_leader(game, opts) : ose_oracle_mixed_leader(game, opts);
      fill_exact(rec, res.strategy, res.outcome, res.leader_cost, res.exact);
      if (!res.exact) {
        rec["strategy"] = strategy_json(res.strategy_float);
        rec["objective"] = res.value;
        rec["objective_float"] = res.value;
        rec["lower_bound"] = res.value;
      }
      rec["outcomes_examined"] = res.outcomes_examined;
      rec["equilibria_found"] = res.equilibria_found;
    } else if (args.solver == "milp") {
      const MilpModel model = build_milp(game);
      MilpParams params;
      params.time_limit = args.time_limit;
      if (args.warm_start) {
        try {
          if (auto res = pure_dp(game, DpOptions{deadline})) {
            const auto s = LeaderStrategyF::pure(game.leader_actions.size(), res->leader_action);
            params.initial_incumbent = encode_solution(model, game, s, res->outcome);
          }
        } catch (const TimeLimitReached&) {
        }
      }
      const auto sol = solve_milp(model, params);
      rec["status"] = to_string(sol.status);
      rec["objective"] = number_or_null(sol.objective);
      rec["objective_float"] = number_or_null(sol.objective);
      rec["lower_bound"] = number_or_null(sol.lower_bound);
      rec["gap"] = number_or_null(sol.gap);
      rec["exact"] = false;
      rec["nodes"] = sol.nodes;
      rec["lp_iterations"] = sol.lp_iterations;
      if (sol.has_incumbent) {
        const auto dec = extract_ose(model, sol, game);
        rec["strategy"] = strategy_json(dec.strategy);
        rec["outcome"] = outcome_to_json(dec.outcome);
        rec["mccormick_residual"] = dec.mccormick_residual;
      }
    } else if (args.solver == "export-lp") {
      const MilpModel model = build_milp(game);
      const fs::path out = args.lp_out ? *args.lp_out : default_output_dir() / "model.lp";
      write_text_file(out, emit_lp_format(model));
      rec["status"] = "Exported";
      rec["lp_file"] = out.string();
      rec["variables"] = model.variables.size();
      rec["constraints"] = model.constraints.size();
    } else {
      throw Error("unknown solver '" + args.solver + "'");
    }
  } catch (const TimeLimitReached& e) {
    rec["status"] = "Timeout";
    rec["error"] = e.what();
  } catch (const CapExceeded& e) {
    rec["status"] = "CapExceeded";
    rec["error"] = e.what();
  } catch (const InapplicableSolver& e) {
    rec["status"] = "Inapplicable";
    rec["error"] = e.what();
  } catch (const std::exception& e) {
    rec["status"] = "Error";
    rec["error"] = e.what();
  }
  rec["time_ms"] = sw.elapsed_ms();
  return rec;
}

// ---------------------------------------------------------------------------
// verify

namespace {

template <class S>
void check_solution(const Game& game, const BasicLeaderStrategy<S>& s, const FollowersOutcome& outcome,
                    const nlohmann::json& claimed, double tol, VerifyReport& rep) {
  auto say = [&](bool ok, const std::string& line) {
    rep.ok = rep.ok && ok;
    rep.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + line);
  };
  if (auto v = strategy_violations(game, s, tol); !v.empty()) {
    say(false, "strategy: " + v.front());
    return;
  }
  say(true, "strategy");
  const auto nash = is_nash(game, s, outcome, tol);
  if (nash) {
    say(true, "nash");
  } else {
    const auto& w = *nash.witness;
    std::ostringstream msg;
    msg << "nash: " << (game.kind == GameKind::tclass_sscg ? "class " : "follower ") << w.who << " moves from action "
        << w.current_action << " to " << w.improving_action;
    say(false, msg.str());
  }
  const S cost = leader_cost(game, s, outcome);
  if (claimed.is_null()) {
    say(false, "objective: missing");
    return;
  }
  if constexpr (std::is_same_v<S, double>) {
    const double c = claimed.is_string() ? to_double(parse_rational(claimed.get<std::string>())) : claimed.get<double>();
    const bool ok = std::abs(c - cost) <= tol * std::max(1.0, std::abs(cost));
    say(ok, "objective: claimed " + std::to_string(c) + ", recomputed " + std::to_string(cost));
  } else {
    const Rational c = rational_from_json(claimed, "objective");
    say(c == cost, "objective: claimed " + to_string(c) + ", recomputed " + to_string(cost));
  }
}

}  // namespace

VerifyReport verify(const Game& game, const nlohmann::json& rec) {
  VerifyReport rep;
  if (!rec.contains("outcome") || !rec.contains("strategy")) {
    rep.ok = false;
    rep.lines.push_back("FAIL record carries no strategy/outcome");
    return rep;
  }
  const FollowersOutcome outcome = outcome_from_json(rec["outcome"], "outcome");
  if (auto v = outcome_violations(game, outcome); !v.empty()) {
    rep.ok = false;
    rep.lines.push_back("FAIL outcome: " + v.front());
    return rep;
  }
  rep.lines.push_back("PASS outcome");
  const auto claimed = rec.value("objective", nlohmann::json());
  if (rec.value("exact", false)) {
    LeaderStrategy s;
    for (std::size_t k = 0; k < rec["strategy"].size(); ++k) {
      s.probabilities.push_back(rational_from_json(rec["strategy"][k], "strategy[" + std::to_string(k) + "]"));
    }
    check_solution(game, s, outcome, claimed, 0.0, rep);
  } else {
    LeaderStrategyF s;
    for (const auto& p : rec["strategy"]) {
      s.probabilities.push_back(p.is_string() ? to_double(parse_rational(p.get<std::string>())) : p.get<double>());
    }
    check_solution(game, s, outcome, claimed, 1e-6, rep);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// bench

const char* const kBenchHeader = "instance,kind,r,n,T,solver,status,objective,lower_bound,gap,time_ms,seed";

std::vector<BenchRow> run_bench(const BenchArgs& args) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(args.dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchRow> rows;
  const double nan = std::nan("");
  for (const auto& f : files) {
    Game g;
    try {
      g = load_game_file(f);
    } catch (const std::exception& e) {
      BenchRow row{f.filename().string(), "", 0, 0, 0, "", "Unreadable", nan, nan, nan, 0, ""};
      rows.push_back(row);
      continue;
    }
    for (const auto& solver : args.solvers) {
      SolveArgs sa;
      sa.solver = solver;
      sa.time_limit = args.time_limit;
      sa.warm_start = args.warm_start;
      const auto rec = solve(g, sa, f.filename().string());
      BenchRow row;
      row.instance = f.filename().string();
      row.kind = to_string(g.kind);
      row.r = g.resources;
      row.n = g.player_count();
      row.T = g.class_count();
      row.solver = solver;
      row.status = rec["status"].get<std::string>();
      auto num = [&](const char* key) {
        return rec.contains(key) && rec[key].is_number() ? rec[key].get<double>() : nan;
      };
      row.objective = num("objective_float");
      row.lower_bound = num("lower_bound");
      row.gap = num("gap");
      if (row.status == "Timeout" && std::isnan(row.gap)) row.gap = std::numeric_limits<double>::infinity();
      row.time_ms = rec["time_ms"].get<double>();
      if (g.metadata.contains("seed")) row.seed = g.metadata["seed"].dump();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchHeader << "\n";
  for (const auto& r : rows) {
    out << csv_field(r.instance) << "," << r.kind << "," << r.r << "," << r.n << "," << r.T << "," << r.solver << ","
        << r.status << "," << fmt(r.objective) << "," << fmt(r.lower_bound) << "," << fmt(r.gap) << ","
        << fmt(r.time_ms) << "," << r.seed << "\n";
  }
}

void write_bench_summary(const std::vector<BenchRow>& rows, std::ostream& out) {
  struct Acc {
    int runs = 0, solved = 0, gaps = 0;
    double time = 0, gap = 0;
  };
  std::map<std::tuple<std::string, int, int, int, std::string>, Acc> groups;
  for (const auto& r : rows) {
    if (r.solver.empty()) continue;
    auto& a = groups[{r.kind, r.r, r.n, r.T, r.solver}];
    ++a.runs;
    a.time += r.time_ms;
    if (r.status == "Optimal") ++a.solved;
    if (std::isfinite(r.gap)) {
      ++a.gaps;
      a.gap += r.gap;
    }
  }
  out << "kind,r,n,T,solver,instances,solved_pct,mean_time_ms,mean_gap\n";
  for (const auto& [key, a] : groups) {
    const auto& [kind, r, n, T, solver] = key;
    out << kind << "," << r << "," << n << "," << T << "," << solver << "," << a.runs << ","
        << fmt(100.0 * a.solved / a.runs) << "," << fmt(a.time / a.runs) << ","
        << fmt(a.gaps ? a.gap / a.gaps : std::nan("")) << "\n";
  }
}

}  // namespace scg::cli
