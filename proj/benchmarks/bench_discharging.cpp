#include <benchmark/benchmark.h>

#include "defcol/corpus.hpp"
#include "defcol/discharging.hpp"

namespace {

using namespace defcol;

void BM_ApplyRules(benchmark::State& state) {
  const auto section = static_cast<Section>(state.range(0));
  const PlaneGraph g = corpus::subdivide(corpus::dodecahedron());
  for (auto _ : state) benchmark::DoNotOptimize(apply_rules(g, section));
  state.SetLabel(std::string(to_string(section)));
}
BENCHMARK(BM_ApplyRules)->DenseRange(0, 2);

void BM_AuditBal2(benchmark::State& state) {
  corpus::Rng rng(9);
  const PlaneGraph g = corpus::hub_annulus(20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(audit(g, Section::Bal2));
}
BENCHMARK(BM_AuditBal2)->Unit(benchmark::kMillisecond);

}  // namespace
