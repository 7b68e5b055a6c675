#include <benchmark/benchmark.h>

#include <random>

#include "scg/dp_solver.hpp"
#include "scg/generators.hpp"
#include "scg/lp.hpp"
#include "scg/milp.hpp"

namespace {

scg::Game tclass(int r, std::vector<int> sizes, std::uint64_t seed) {
  scg::TclassParams p;
  p.resources = r;
  p.class_sizes = std::move(sizes);
  return scg::gen_random_tclass(p, seed);
}

void BM_PureLeaderDp(benchmark::State& state) {
  const auto g = tclass(static_cast<int>(state.range(0)), {static_cast<int>(state.range(1))}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(scg::ose_pure_leader_tclass(g));
}
BENCHMARK(BM_PureLeaderDp)->Args({6, 4})->Args({10, 6})->Args({20, 10})->Unit(benchmark::kMillisecond);

void BM_PureLeaderDpTwoClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = tclass(8, {n, n}, 11);
  for (auto _ : state) benchmark::DoNotOptimize(scg::ose_pure_leader_tclass(g));
}
BENCHMARK(BM_PureLeaderDpTwoClasses)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

// Dense random LP, feasible by construction: x = 1 satisfies every row.
scg::LpProblem random_lp(int n, int m) {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  scg::LpProblem lp;
  for (int j = 0; j < n; ++j) lp.add_variable(coef(gen), 0.0, 10.0);
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(n);
    double at_one = 0;
    for (auto& a : row) at_one += a = coef(gen);
    lp.add_row(std::move(row), scg::Relation::less_equal, at_one + 1.0);
  }
  return lp;
}

void BM_Simplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lp = random_lp(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(scg::solve_lp(lp));
}
BENCHMARK(BM_Simplex)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_MilpSmall(benchmark::State& state) {
  const auto g = tclass(static_cast<int>(state.range(0)), {static_cast<int>(state.range(1))}, 3);
  const auto model = scg::build_milp(g);
  scg::MilpParams params;
  params.time_limit = 60;
  for (auto _ : state) benchmark::DoNotOptimize(scg::solve_milp(model, params));
}
BENCHMARK(BM_MilpSmall)->Args({4, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
