#include "dunkl/corpus.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translate.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace dunkl;

namespace {

ReflectionSetup setup_for(int n) {
  return n == 1 ? ReflectionSetup::product({0.5}) : ReflectionSetup::product({0.5, 1.0});
}

void BM_Rank1Kernel(benchmark::State& state) {
  double z = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank1_kernel(2.5, cplx(0.0, z)));
    z = z < 30.0 ? z + 0.37 : 0.1;
  }
}
BENCHMARK(BM_Rank1Kernel);

// Forward transform; argument: half points per axis.
void BM_Transform1D(benchmark::State& state) {
  const auto s = setup_for(1);
  const auto g = make_grid(s, GridSpec{12.0, static_cast<int>(state.range(0))});
  const auto f = GridFunction::sample(g, deterministic_corpus(1)[0].fn);
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_transform(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Transform1D)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_Transform2D(benchmark::State& state) {
  const auto s = setup_for(2);
  const auto g = make_grid(s, GridSpec{12.0, static_cast<int>(state.range(0))});
  const auto f = GridFunction::sample(g, deterministic_corpus(2)[0].fn);
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_transform(f));
}
BENCHMARK(BM_Transform2D)->Arg(24)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_SpectralTranslation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = make_grid(setup_for(n), GridSpec::defaults(n));
  const auto f = GridFunction::sample(g, deterministic_corpus(n)[0].fn);
  const Point x(n, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(translate_spectral(f, x));
}
BENCHMARK(BM_SpectralTranslation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RadialTranslationPoint(benchmark::State& state) {
  const auto s = setup_for(static_cast<int>(state.range(0)));
  const Point x(s.dimension(), 0.7), y(s.dimension(), -0.4);
  const auto prof = gaussian_profile();
  for (auto _ : state) benchmark::DoNotOptimize(translate_radial(s, x, prof, y));
}
BENCHMARK(BM_RadialTranslationPoint)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
