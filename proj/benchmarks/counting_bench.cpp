#include <benchmark/benchmark.h>

#include "lopoly/catalog.hpp"
#include "lopoly/counting.hpp"
#include "lopoly/polytope.hpp"
#include "lopoly/quasi_polynomial.hpp"

using namespace lopoly;

static void BM_TreeDp(benchmark::State& state) {
  Graph g = caterpillar_tree(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_tree_dp(g, state.range(0)).count);
}
BENCHMARK(BM_TreeDp)->Arg(8)->Arg(16)->Arg(32);

static void BM_Backtracking(benchmark::State& state) {
  InequalitySystem s = inequality_system(caterpillar_tree(3));
  for (auto _ : state) benchmark::DoNotOptimize(count_backtracking(s, Rational(state.range(0))).count);
}
BENCHMARK(BM_Backtracking)->Arg(8)->Arg(16)->Arg(32);

static void BM_BacktrackingK4(benchmark::State& state) {
  InequalitySystem s = deduplicated(inequality_system(k4()));
  CountOptions opts{static_cast<unsigned>(state.range(1)), false};
  for (auto _ : state) benchmark::DoNotOptimize(count_backtracking(s, Rational(state.range(0)), opts).count);
}
BENCHMARK(BM_BacktrackingK4)->Args({20, 1})->Args({20, 2})->Args({40, 1});

static void BM_QuasiPolynomial(benchmark::State& state) {
  Graph g = state.range(0) == 0 ? caterpillar_tree(4) : k4();
  for (auto _ : state) benchmark::DoNotOptimize(quasi_polynomial(g).period);
}
BENCHMARK(BM_QuasiPolynomial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
