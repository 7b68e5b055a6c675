#include "scg/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "scg/rng.hpp"

namespace scg {

// ---------------------------------------------------------------------------
// 3SAT

std::optional<std::vector<bool>> brute_force_sat(const CnfInstance& cnf) {
  if (cnf.num_vars > 24) throw Error("brute-force SAT is limited to 24 variables");
  const std::uint64_t end = 1ULL << cnf.num_vars;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const bool ok = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(),
                         [&](const Literal& l) { return (((mask >> l.var) & 1ULL) != 0) != l.negated; });
    });
    if (ok) {
      std::vector<bool> a(static_cast<std::size_t>(cnf.num_vars));
      for (int u = 0; u < cnf.num_vars; ++u) a[u] = (mask >> u) & 1ULL;
      return a;
    }
  }
  return std::nullopt;
}

CnfInstance parse_dimacs(std::string_view text) {
  CnfInstance cnf;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  std::vector<Literal> pending;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      int clauses = 0;
      if (!(ls >> fmt >> cnf.num_vars >> clauses) || fmt != "cnf") throw ParseError("bad problem line", "p", line_no);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the problem line", {}, line_no);
    ls.clear();
    ls.str(line);
    long long v;
    while (ls >> v) {
      if (v == 0) {
        if (pending.empty() || pending.size() > 3) {
          throw ParseError("clauses must have one to three literals", {}, line_no);
        }
        // Short clauses repeat their last literal; the mapping treats clauses as sets.
        while (pending.size() < 3) pending.push_back(pending.back());
        cnf.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long long var = v < 0 ? -v : v;
      if (var > cnf.num_vars) throw ParseError("literal refers to an undeclared variable", {}, line_no);
      pending.push_back(Literal{static_cast<int>(var - 1), v < 0});
    }
    if (!ls.eof()) throw ParseError("unexpected token", {}, line_no);
  }
  if (!header) throw ParseError("missing problem line");
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0", {}, line_no);
  return cnf;
}

std::string to_dimacs(const CnfInstance& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (const auto& l : clause) out << (l.negated ? -(l.var + 1) : l.var + 1) << " ";
    out << "0\n";
  }
  return out.str();
}

CnfInstance gen_random_3sat(int num_vars, double ratio, std::uint64_t seed, std::uint64_t instance) {
  if (num_vars < 3) throw Error("random 3SAT needs at least three variables");
  if (ratio <= 0) throw Error("clause ratio must be positive");
  CnfInstance cnf;
  cnf.num_vars = num_vars;
  // The small nudge keeps e.g. 4.26·50 from rounding down to 212.
  const auto m = static_cast<std::size_t>(ratio * num_vars + 1e-9);
  Rng rng(seed, instance, kFieldFormula);
  for (std::size_t c = 0; c < m; ++c) {
    const auto vars = rng.subset(num_vars, 3);
    std::array<Literal, 3> clause;
    for (int k = 0; k < 3; ++k) clause[k] = Literal{vars[k], rng.uniform(0, 1) == 1};
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

ThreeSatLayout::ThreeSatLayout(const CnfInstance& cnf) : num_vars(cnf.num_vars) {
  resource_count = 1 + 3 * cnf.num_vars + static_cast<int>(cnf.clauses.size());
  int next = 1 + 2 * cnf.num_vars;
  for (const auto& clause : cnf.clauses) {
    std::vector<std::pair<Literal, int>> acts;
    for (const auto& l : clause) {
      if (l.var < 0 || l.var >= cnf.num_vars) throw Error("literal refers to an unknown variable");
      const bool dup = std::any_of(acts.begin(), acts.end(), [&](const auto& p) { return p.first == l; });
      if (!dup) acts.emplace_back(l, next++);
    }
    clause_actions.push_back(std::move(acts));
  }
  action_count = next;
}

Game reduce_3sat(const CnfInstance& cnf, const Rational& eps, const ThreeSatOptions& options) {
  if (!(eps > 0 && eps < 1)) throw Error("epsilon must lie strictly between 0 and 1");
  const ThreeSatLayout lay(cnf);
  const int U = cnf.num_vars, C = static_cast<int>(cnf.clauses.size());

  std::vector<ResourceSet> actions(static_cast<std::size_t>(lay.action_count));
  actions[lay.a_w()] = {lay.r_w()};
  for (int u = 0; u < U; ++u) {
    actions[lay.a_pos(u)] = {lay.r_pos(u), lay.r_t(u)};
    actions[lay.a_neg(u)] = {lay.r_neg(u), lay.r_t(u)};
  }
  for (int c = 0; c < C; ++c) {
    for (const auto& [lit, a] : lay.clause_actions[c]) {
      ResourceSet s{lay.r_clause(c), lay.r_literal(lit)};
      std::sort(s.begin(), s.end());
      actions[a] = s;
    }
  }

  Game g;
  g.kind = GameKind::general_scg;
  g.resources = lay.resource_count;
  g.leader_actions = options.leader_only_w ? std::vector<ResourceSet>{actions[lay.a_w()]} : actions;
  g.followers.assign(static_cast<std::size_t>(U + C), FollowerSpec{actions});

  const int len = U + C + 3;
  auto row = [&](const Rational& first, const Rational& rest) {
    std::vector<Rational> r(static_cast<std::size_t>(len), rest);
    r[0] = first;
    return r;
  };
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(g.resources));
  rows[lay.r_w()] = row(eps, 4);
  for (int u = 0; u < U; ++u) {
    rows[lay.r_pos(u)] = row(0, 2);
    rows[lay.r_neg(u)] = row(0, 2);
    rows[lay.r_t(u)] = row(3, 5);
  }
  for (int c = 0; c < C; ++c) rows[lay.r_clause(c)] = row(1, 5);
  g.follower_costs = CostTable(rows, true);
  g.leader_costs = CostTable(rows, true);
  g.metadata = {{"generator", "3sat"},
                {"parameters", {{"vars", U}, {"clauses", C}, {"epsilon", to_string(eps)},
                                {"leader_only_w", options.leader_only_w}}},
                {"source", to_dimacs(cnf)}};
  return g;
}

Profile three_sat_witness(const CnfInstance& cnf, const std::vector<bool>& tau, const Game& game) {
  const ThreeSatLayout lay(cnf);
  const int U = cnf.num_vars, C = static_cast<int>(cnf.clauses.size());
  Profile prof;
  std::vector<int> load(static_cast<std::size_t>(game.resources), 0);
  for (int u = 0; u < U; ++u) {
    // A true variable leaves r_u free for clause followers, and vice versa.
    const int a = tau[u] ? lay.a_neg(u) : lay.a_pos(u);
    prof.actions.push_back(a);
    ++load[tau[u] ? lay.r_neg(u) : lay.r_pos(u)];
  }
  auto is_true = [&](Literal l) { return tau[l.var] != l.negated; };
  std::vector<std::vector<std::pair<Literal, int>>> options(C);
  for (int c = 0; c < C; ++c) {
    for (const auto& la : lay.clause_actions[c]) {
      if (is_true(la.first)) options[c].push_back(la);
    }
    if (options[c].empty()) throw Error("assignment does not satisfy every clause");
  }
  std::vector<Literal> pick(C);
  for (int c = 0; c < C; ++c) {
    auto best = std::min_element(options[c].begin(), options[c].end(), [&](const auto& a, const auto& b) {
      return load[lay.r_literal(a.first)] < load[lay.r_literal(b.first)];
    });
    pick[c] = best->first;
    ++load[lay.r_literal(pick[c])];
  }
  // Move clause followers off crowded literals while an emptier true one exists.
  for (bool moved = true; moved;) {
    moved = false;
    for (int c = 0; c < C; ++c) {
      for (const auto& la : options[c]) {
        if (load[lay.r_literal(la.first)] + 1 < load[lay.r_literal(pick[c])]) {
          --load[lay.r_literal(pick[c])];
          pick[c] = la.first;
          ++load[lay.r_literal(pick[c])];
          moved = true;
        }
      }
    }
  }
  for (int c = 0; c < C; ++c) {
    for (const auto& [lit, a] : lay.clause_actions[c]) {
      if (lit == pick[c]) prof.actions.push_back(a);
    }
  }
  return prof;
}

// ---------------------------------------------------------------------------
// K-PARTITION

std::int64_t KPartitionInstance::total() const { return std::accumulate(items.begin(), items.end(), std::int64_t{0}); }

std::optional<std::vector<int>> brute_force_kpartition(const KPartitionInstance& inst) {
  const int n = static_cast<int>(inst.items.size());
  if (n > 24) throw Error("brute-force K-PARTITION is limited to 24 items");
  const std::int64_t sum = inst.total();
  if (sum % 2 != 0) return std::nullopt;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != inst.k) continue;
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s += inst.items[i];
    }
    if (2 * s == sum) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) idx.push_back(i);
      }
      return idx;
    }
  }
  return std::nullopt;
}

KPartitionInstance gen_random_kpartition(int size, std::uint64_t seed, std::uint64_t instance) {
  if (size < 2 || size % 2 != 0) throw Error("K-PARTITION size must be even and positive");
  Rng rng(seed, instance, kFieldItems);
  KPartitionInstance inst;
  inst.k = size / 2;
  for (;;) {
    inst.items.clear();
    for (int i = 0; i < size; ++i) inst.items.push_back(rng.uniform(2, 100));
    const std::int64_t sum = inst.total();
    const std::int64_t biggest = *std::max_element(inst.items.begin(), inst.items.end());
    if (sum % 2 == 0 && 2 * biggest <= sum) return inst;
  }
}

Game reduce_kpartition(const KPartitionInstance& inst) {
  const int S = static_cast<int>(inst.items.size());
  const int K = inst.k;
  if (S == 0 || K < 1) throw Error("K-PARTITION needs items and K ≥ 1");
  if (2 * K > S) throw Error("K must not exceed |S|/2");
  const std::int64_t sum = inst.total();
  if (sum % 2 != 0) throw Error("the item total must be even");
  const Rational X(sum / 2);
  for (auto s : inst.items) {
    if (s <= 0) throw Error("items must be positive");
    if (Rational(s) > X) throw KPartitionTrivialNo("item " + std::to_string(s) + " exceeds X");
  }

  const int rw = S, rx = S + 1, ry = S + 2, rz = S + 3;
  Game g;
  g.kind = GameKind::tclass_sscg;
  g.resources = S + 4;
  auto singletons = [](std::vector<int> ids) {
    std::vector<ResourceSet> a;
    for (int i : ids) a.push_back({i});
    return a;
  };
  std::vector<int> rs(S);
  std::iota(rs.begin(), rs.end(), 0);
  auto with = [&](int extra) {
    auto v = rs;
    v.push_back(extra);
    return v;
  };
  g.classes = {FollowerClass{K, singletons(with(rw))}, FollowerClass{2 * S, singletons(with(rz))},
               FollowerClass{1, singletons({rw, ry})}, FollowerClass{1, singletons({rx, ry})}};
  g.leader_actions = singletons(with(ry));

  const Rational Kr(K);
  const Rational XK2 = 2 * X * Kr;
  const Rational X4 = X * X * X * X;
  const Rational Cy = Rational(6 * K - 2) / Rational(2 * K * K - K);
  const auto lengths = g.required_cost_length();
  auto fill = [&](int i, Rational x1, Rational x2, Rational rest) {
    std::vector<Rational> row(static_cast<std::size_t>(lengths[i]), rest);
    row[0] = std::move(x1);
    if (row.size() > 1) row[1] = std::move(x2);
    return row;
  };
  std::vector<std::vector<Rational>> f(g.resources), l(g.resources);
  for (int i = 0; i < S; ++i) {
    const Rational s(inst.items[i]);
    const Rational ratio = XK2 / s;
    const Rational Cf = (1 - ratio + XK2) * ratio;
    const Rational Cl = 2 * X * (2 * X - s) / s;
    f[i] = fill(i, 0, ratio, Cf);
    l[i] = fill(i, Cl, Cl, X4);
  }
  f[rw] = fill(rw, 1 / Kr, 1, 1);
  f[rx] = fill(rx, 3 / Kr, 3 / Kr, 3 / Kr);
  f[ry] = fill(ry, 2 / Kr, Cy, Cy);
  f[rz] = fill(rz, XK2, XK2, XK2);
  l[rw] = fill(rw, 0, 0, 0);
  l[rx] = fill(rx, 0, 0, 0);
  l[ry] = fill(ry, 0, X4, X4);
  l[rz] = fill(rz, 0, 0, 0);
  g.follower_costs = CostTable(std::move(f), true);
  g.leader_costs = CostTable(std::move(l), true);
  g.metadata = {{"generator", "kpart"},
                {"parameters", {{"size", S}, {"K", K}}},
                {"source", {{"S", inst.items}, {"K", K}}}};
  return g;
}

KPartitionWitness kpartition_witness(const KPartitionInstance& inst, const std::vector<int>& subset) {
  const int S = static_cast<int>(inst.items.size());
  const int K = inst.k;
  const Rational X(inst.total() / 2);
  const int rw = S, rx = S + 1, ry = S + 2, rz = S + 3;
  std::set<int> chosen(subset.begin(), subset.end());

  KPartitionWitness w;
  w.strategy.probabilities.assign(static_cast<std::size_t>(S + 1), Rational(0));
  w.outcome.counts.assign(4, std::vector<int>(static_cast<std::size_t>(S + 4), 0));
  for (int i = 0; i < S; ++i) {
    if (chosen.count(i)) {
      w.outcome.counts[0][i] = 1;
      w.strategy.probabilities[i] = Rational(inst.items[i]) / (2 * X * K);
    } else {
      w.outcome.counts[1][i] = 2;
    }
  }
  w.outcome.counts[1][rz] = 2 * K;
  w.outcome.counts[2][rw] = 1;
  w.outcome.counts[3][rx] = 1;
  w.strategy.probabilities[S] = Rational(2 * K - 1, 2 * K);
  (void)ry;
  w.leader_cost = 2 * X - X / K;
  return w;
}

}  // namespace scg
