#include <benchmark/benchmark.h>

#include "cgroupoid/games.hpp"
#include "cgroupoid/hom_complex.hpp"
#include "cgroupoid/perm_group.hpp"

using namespace cgroupoid;

static void BM_SchreierSimsSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Point> long_cycle(n);
  for (Point i = 0; i < n; ++i) long_cycle[i] = i;
  const std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {long_cycle})};
  for (auto _ : state) benchmark::DoNotOptimize(schreier_sims(n, gens).order());
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(8)->Arg(15)->Arg(32);

static void BM_PuzzleHolonomy(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto p = grid_puzzle(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(puzzle_holonomy(p, 0).group.order());
}
BENCHMARK(BM_PuzzleHolonomy)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_HomK2Km(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_complex(complete_graph(2), complete_graph(m)).size());
}
BENCHMARK(BM_HomK2Km)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
