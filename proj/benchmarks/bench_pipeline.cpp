#include <benchmark/benchmark.h>

#include "ribbonlink/bracket.hpp"
#include "ribbonlink/census.hpp"
#include "ribbonlink/graph_analysis.hpp"
#include "ribbonlink/pipeline.hpp"
#include "ribbonlink/ribbon.hpp"
#include "ribbonlink/threepage.hpp"

using namespace ribbonlink;

namespace {

// Connected sum of `count` trefoils, 3*count crossings.
LinkDiagram trefoil_chain(int count) {
  LinkDiagram t = census_diagram("trefoil");
  LinkDiagram d = t;
  for (int i = 1; i < count; ++i) d = connected_sum(d, 1, t, 1).diagram;
  return d;
}

void BM_Bracket(benchmark::State& state) {
  LinkDiagram d = trefoil_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
  state.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_Bracket)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_BuildPresentation(benchmark::State& state) {
  LinkDiagram d = trefoil_chain(static_cast<int>(state.range(0)));
  ShadingSelection s = select_bipartite_shading(d);
  for (auto _ : state) benchmark::DoNotOptimize(build_presentation(d, *s.coloring, *s.partition));
  state.SetComplexityN(d.crossing_count());
}
BENCHMARK(BM_BuildPresentation)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_Reconstruct(benchmark::State& state) {
  LinkDiagram d = trefoil_chain(static_cast<int>(state.range(0)));
  ShadingSelection s = select_bipartite_shading(d);
  ThreePagePresentation p = build_presentation(d, *s.coloring, *s.partition);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_diagram(p));
  state.SetComplexityN(d.crossing_count());
}
BENCHMARK(BM_Reconstruct)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_Realize(benchmark::State& state) {
  LinkDiagram d = trefoil_chain(static_cast<int>(state.range(0)));
  ShadingSelection s = select_bipartite_shading(d);
  ThreePagePresentation p = build_presentation(d, *s.coloring, *s.partition);
  for (auto _ : state) benchmark::DoNotOptimize(realize_ribbon(p));
}
BENCHMARK(BM_Realize)->RangeMultiplier(4)->Range(1, 64);

void BM_Pipeline(benchmark::State& state) {
  LinkDiagram d = census_diagram("pretzel222");
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(d, "census:pretzel222", {}));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
