#include <benchmark/benchmark.h>

#include "outagekit/dependence.hpp"
#include "outagekit/events.hpp"
#include "outagekit/synth.hpp"

namespace {

outagekit::SimTrace make_trace(std::size_t n) {
  outagekit::SynthConfig config;
  config.seed = 13;
  config.n_failures = n;
  config.crews = 4;
  return outagekit::generate_event(config);
}

void BM_PendingSeries(benchmark::State& state) {
  const auto trace = make_trace(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(outagekit::pending_series(trace.records));
  }
}
BENCHMARK(BM_PendingSeries)->Arg(1000)->Arg(10000);

void BM_EstimateJoint(benchmark::State& state) {
  const auto trace = make_trace(static_cast<std::size_t>(state.range(0)));
  const auto ranked = outagekit::rank_recovery_speed(trace.records);
  std::int64_t max_size = 1;
  for (const auto& s : ranked) max_size = std::max(max_size, s.size_x);
  const int xb = outagekit::auto_x_bins(max_size);
  for (auto _ : state) {
    benchmark::DoNotOptimize(outagekit::estimate_joint(ranked, xb, 20));
  }
}
BENCHMARK(BM_EstimateJoint)->Arg(1000)->Arg(10000);

void BM_ExtractClusters(benchmark::State& state) {
  const auto trace = make_trace(static_cast<std::size_t>(state.range(0)));
  const auto ranked = outagekit::rank_recovery_speed(trace.records);
  for (auto _ : state) {
    benchmark::DoNotOptimize(outagekit::extract_clusters(ranked));
  }
}
BENCHMARK(BM_ExtractClusters)->Arg(1000)->Arg(5000);

void BM_Simulate(benchmark::State& state) {
  outagekit::SynthConfig config;
  config.seed = 13;
  config.n_failures = static_cast<std::size_t>(state.range(0));
  config.crews = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(outagekit::generate_event(config));
  }
}
BENCHMARK(BM_Simulate)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
