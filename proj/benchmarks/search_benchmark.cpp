#include <benchmark/benchmark.h>

#include "vknot/families.hpp"
#include "vknot/search.hpp"

namespace vknot {
namespace {

void BM_SearchRing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GaussDiagram d = trefoil_ring(n);
  SearchConfig cfg;
  cfg.max_forbidden = n;
  std::size_t states = 0;
  for (auto _ : state) {
    const SearchOutcome out = unknotting_search(d, cfg);
    states = out.states_visited;
    benchmark::DoNotOptimize(out);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_SearchRing)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SearchRingNoDedup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GaussDiagram d = trefoil_ring(n);
  SearchConfig cfg;
  cfg.max_forbidden = n;
  cfg.dedup = false;
  for (auto _ : state) benchmark::DoNotOptimize(unknotting_search(d, cfg));
}
BENCHMARK(BM_SearchRingNoDedup)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SearchBridgeTorus(benchmark::State& state) {
  const GaussDiagram d = torus2_bridge(static_cast<int>(state.range(0)));
  SearchConfig cfg;
  cfg.max_forbidden = torus2_upper_bound(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unknotting_search(d, cfg));
}
BENCHMARK(BM_SearchBridgeTorus)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vknot
