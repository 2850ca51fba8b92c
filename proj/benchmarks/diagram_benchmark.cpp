#include <benchmark/benchmark.h>

#include "vknot/families.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {
namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const GaussDiagram d = torus2_bridge(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(d.chord_count()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 15, 4)->Complexity();

void BM_OddWrithePolynomial(benchmark::State& state) {
  const GaussDiagram d = trefoil_ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(odd_writhe_polynomial(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OddWrithePolynomial)->RangeMultiplier(4)->Range(1, 256)->Complexity();

void BM_ParseSerialize(benchmark::State& state) {
  const std::string code = serialize(torus2_bridge(21));
  for (auto _ : state) benchmark::DoNotOptimize(serialize(parse_gauss_code(code)));
}
BENCHMARK(BM_ParseSerialize);

void BM_EnumerateMoves(benchmark::State& state) {
  const GaussDiagram d = torus2_bridge(9);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_moves(d, MoveKindSet::non_additions()));
}
BENCHMARK(BM_EnumerateMoves);

}  // namespace
}  // namespace vknot
