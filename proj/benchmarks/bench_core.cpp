#include <benchmark/benchmark.h>

#include "geofreq/classify.hpp"
#include "geofreq/geomfreq.hpp"
#include "geofreq/lagrange.hpp"

using namespace geofreq;

namespace {

SampleGrid grid(std::int64_t count) { return {0.0, 1e-5, static_cast<std::size_t>(count)}; }

void BM_GeometricFrequencyAnalytic(benchmark::State& state) {
  const auto b = synthesize(fixtures::harmonic(), grid(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_frequency_series(b, DerivativeSource::analytic));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeometricFrequencyAnalytic)->Arg(2000)->Arg(20000);

void BM_GeometricFrequencyNumeric(benchmark::State& state) {
  const auto g = grid(state.range(0));
  const auto v = synthesize(fixtures::unbalanced(), g).v;
  for (auto _ : state) benchmark::DoNotOptimize(geometric_frequency_series(v, g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeometricFrequencyNumeric)->Arg(2000)->Arg(20000);

void BM_ComponentSeries(benchmark::State& state) {
  const auto g = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(component_series(fixtures::harmonic(), g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComponentSeries)->Arg(2000);

void BM_Streamline(benchmark::State& state) {
  const auto spec = fixtures::harmonic();
  const auto field = make_field(spec);
  const auto g = grid(state.range(0));
  const VecN phi0 = evaluate(spec, 0.0).flux;
  for (auto _ : state) benchmark::DoNotOptimize(integrate_streamline(field, phi0, g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Streamline)->Arg(2000);

void BM_ClassifySamples(benchmark::State& state) {
  const SampleGrid g{0.0, 1e-6, 40000};
  const auto s = geometric_frequency_series(synthesize(fixtures::unbalanced(), g).v, g);
  const double w = *fundamental_omega(fixtures::unbalanced());
  for (auto _ : state) benchmark::DoNotOptimize(classify_samples(s, w, default_tolerance(w)));
}
BENCHMARK(BM_ClassifySamples);

}  // namespace
BENCHMARK_MAIN();
