#include "dunkl/harness.hpp"
#include "dunkl/riesz.hpp"

#include <benchmark/benchmark.h>

using namespace dunkl;

namespace {

ReflectionSetup setup_for(int n) {
  return n == 1 ? ReflectionSetup::product({0.5}) : ReflectionSetup::product({0.5, 1.0});
}

void BM_KernelFull(benchmark::State& state) {
  const auto s = setup_for(static_cast<int>(state.range(0)));
  const KernelField field(s);
  const Point x(s.dimension(), 1.3), y(s.dimension(), -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(field.full(0, x, y));
}
BENCHMARK(BM_KernelFull)->Arg(1)->Arg(2);

void BM_MultiplierRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = make_grid(setup_for(n), GridSpec::defaults(n));
  const auto f = GridFunction::sample(g, deterministic_corpus(n)[0].fn);
  for (auto _ : state) benchmark::DoNotOptimize(riesz_multiplier(f, 0));
}
BENCHMARK(BM_MultiplierRoute)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

// All three routes for one separated configuration.
void BM_ThreeRoutes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = make_grid(setup_for(n), GridSpec::defaults(n));
  const KernelField field(g->setup());
  const auto cfg = separated_route_configs(g, 1, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(riesz_routes(g, field, cfg));
}
BENCHMARK(BM_ThreeRoutes)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HormanderEstimate(benchmark::State& state) {
  const auto s = setup_for(static_cast<int>(state.range(0)));
  const KernelField field(s, KernelOptions{12, 4});
  const auto pair = hormander_pairs(s, 1, 3).front();
  for (auto _ : state) benchmark::DoNotOptimize(hormander_estimate(field, 0, pair.first, pair.second));
}
BENCHMARK(BM_HormanderEstimate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
