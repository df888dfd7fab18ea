#include "dunkl/corpus.hpp"
#include "dunkl/czd.hpp"

#include <benchmark/benchmark.h>

using namespace dunkl;

namespace {

void BM_BallMass2D(benchmark::State& state) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const Point x{0.3, -0.2};
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball_mass(s, x, 0.9, points));
}
BENCHMARK(BM_BallMass2D)->Arg(16)->Arg(32);

// Stopping-time decomposition; argument: dyadic levels per axis.
void BM_Decompose1D(benchmark::State& state) {
  const auto s = ReflectionSetup::product({0.5});
  const auto cells = make_cell_grid(s, 12.0, static_cast<int>(state.range(0)));
  const auto f = sample_cells(cells, random_corpus(1, 1, 1).front().fn);
  const double lambda = 0.5 * f.sup_norm();
  for (auto _ : state) benchmark::DoNotOptimize(cz_decompose(f, lambda));
}
BENCHMARK(BM_Decompose1D)->Arg(8)->Arg(10)->Arg(12);

void BM_Decompose2D(benchmark::State& state) {
  const auto s = ReflectionSetup::product({0.5, 1.0});
  const auto cells = make_cell_grid(s, 12.0, static_cast<int>(state.range(0)));
  const auto f = sample_cells(cells, random_corpus(2, 1, 1).front().fn);
  const double lambda = 0.5 * f.sup_norm();
  for (auto _ : state) benchmark::DoNotOptimize(cz_decompose(f, lambda));
}
BENCHMARK(BM_Decompose2D)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
