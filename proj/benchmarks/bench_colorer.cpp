#include <benchmark/benchmark.h>

#include "defcol/colorer.hpp"
#include "defcol/corpus.hpp"

namespace {

using namespace defcol;

void BM_Color55Plane(benchmark::State& state) {
  corpus::Rng rng(10);
  const PlaneGraph g = corpus::random_plane_c4_free(static_cast<int>(state.range(0)), 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(color55(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Color55Plane)->RangeMultiplier(2)->Range(25, 200)->Complexity()->Unit(benchmark::kMillisecond);

// Exercises 3-vertex replacement and terrible 2-vertex removal.
void BM_Color55HubAnnulus(benchmark::State& state) {
  corpus::Rng rng(11);
  const PlaneGraph g = corpus::hub_annulus(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(color55(g));
}
BENCHMARK(BM_Color55HubAnnulus)->Arg(14)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace
