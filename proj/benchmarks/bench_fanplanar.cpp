#include <benchmark/benchmark.h>

#include "fanplanar/constructions.hpp"
#include "fanplanar/enumerator.hpp"
#include "fanplanar/surgery.hpp"

using namespace fanplanar;

namespace {

Graph complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(std::to_string(i) + "-" + std::to_string(j), i, j);
  }
  return g;
}

const Planarization& witness() {
  static const Planarization p = build_theorem1_witness().drawing;
  return p;
}

void BM_BuildPlanarization(benchmark::State& state) {
  const DrawingSpec spec = witness().spec();
  for (auto _ : state) benchmark::DoNotOptimize(build_planarization(spec));
  state.counters["crossings"] = spec.crossing_count();
}
BENCHMARK(BM_BuildPlanarization)->Unit(benchmark::kMillisecond);

void BM_ValidateWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate_drawing(witness()));
}
BENCHMARK(BM_ValidateWitness)->Unit(benchmark::kMillisecond);

void BM_ScanPatternsK7(benchmark::State& state) {
  const Planarization p = k7_weak_drawing();
  for (auto _ : state) benchmark::DoNotOptimize(scan_patterns(p));
}
BENCHMARK(BM_ScanPatternsK7)->Unit(benchmark::kMicrosecond);

void BM_ScanPatternsWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_patterns(witness()));
}
BENCHMARK(BM_ScanPatternsWitness)->Unit(benchmark::kMillisecond);

void BM_BuildWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_theorem1_witness());
}
BENCHMARK(BM_BuildWitness)->Unit(benchmark::kMillisecond);

void BM_FindHeartAndFlip(benchmark::State& state) {
  const Planarization p = load_fixture_drawing(state.range(0) ? "multi_valve_heart" : "heart");
  for (auto _ : state) {
    const Heart h = *find_heart(p);
    benchmark::DoNotOptimize(flip_valve(p, h, ValveSide::Left));
  }
}
BENCHMARK(BM_FindHeartAndFlip)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_FindRoute(benchmark::State& state) {
  const Planarization p = k7_weak_drawing();
  for (auto _ : state) {
    for (EdgeId e = 0; e < p.graph().edge_count(); ++e) benchmark::DoNotOptimize(find_route(p, e));
  }
}
BENCHMARK(BM_FindRoute)->Unit(benchmark::kMillisecond);

void BM_EnumerateComplete(benchmark::State& state) {
  SearchConfig cfg{complete_graph(static_cast<int>(state.range(0))), static_cast<int>(state.range(1))};
  std::size_t emitted = 0;
  for (auto _ : state) {
    emitted = 0;
    enumerate_drawings(cfg, [&](const Planarization&) {
      ++emitted;
      return true;
    });
  }
  state.counters["drawings"] = static_cast<double>(emitted);
}
BENCHMARK(BM_EnumerateComplete)->Args({4, 1})->Args({4, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
  const Planarization p = k7_weak_drawing();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(p));
}
BENCHMARK(BM_CanonicalCode)->Unit(benchmark::kMicrosecond);

void BM_GraphBattery(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graphs_up_to_edges(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GraphBattery)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
