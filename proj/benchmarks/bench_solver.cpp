#include <benchmark/benchmark.h>

#include "defcol/cnf.hpp"
#include "defcol/gadgets.hpp"
#include "defcol/solver.hpp"

namespace {

using namespace defcol;

// Infeasible gadget instances: the search has to exhaust the tree.
void BM_SolveInfeasibleGadget(benchmark::State& state) {
  const Gadget g = state.range(0) == 0 ? gen_T(1) : state.range(0) == 1 ? gen_H(1, 2) : gen_X(1);
  const ColorSpec spec = state.range(0) == 0   ? ColorSpec({0, 1})
                         : state.range(0) == 1 ? ColorSpec({1, 1})
                                               : ColorSpec({0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(decide_colorable(g.graph, spec));
}
BENCHMARK(BM_SolveInfeasibleGadget)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveFeasibleF(benchmark::State& state) {
  const Gadget g = gen_F(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_colorable(g.graph, ColorSpec({1, 1})));
}
BENCHMARK(BM_SolveFeasibleF)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_ExportCnf(benchmark::State& state) {
  const Gadget g = gen_X(1);
  for (auto _ : state) benchmark::DoNotOptimize(to_dimacs(export_cnf(g.graph, ColorSpec({0, 0, 1}))));
}
BENCHMARK(BM_ExportCnf)->Unit(benchmark::kMicrosecond);

}  // namespace
