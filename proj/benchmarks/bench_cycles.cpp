#include <benchmark/benchmark.h>

#include "defcol/corpus.hpp"
#include "defcol/cycles.hpp"

namespace {

using namespace defcol;

void BM_HasC4(benchmark::State& state) {
  corpus::Rng rng(7);
  const PlaneGraph g = corpus::random_plane_c4_free(static_cast<int>(state.range(0)), 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(has_cycle_of_length(g, 4));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HasC4)->RangeMultiplier(2)->Range(25, 400)->Complexity();

void BM_CycleSpectrumDodecahedron(benchmark::State& state) {
  const PlaneGraph g = corpus::dodecahedron();
  for (auto _ : state) benchmark::DoNotOptimize(cycle_spectrum(g));
}
BENCHMARK(BM_CycleSpectrumDodecahedron)->Unit(benchmark::kMillisecond);

void BM_TraceFaces(benchmark::State& state) {
  corpus::Rng rng(8);
  const PlaneGraph g = corpus::random_plane_c4_free(static_cast<int>(state.range(0)), 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(trace_faces(g));
}
BENCHMARK(BM_TraceFaces)->Arg(100)->Arg(400);

}  // namespace
