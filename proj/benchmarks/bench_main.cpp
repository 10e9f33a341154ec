#include <benchmark/benchmark.h>

#include "combgraph/cograph.hpp"
#include "combgraph/comb.hpp"
#include "combgraph/generators.hpp"
#include "combgraph/k2.hpp"
#include "combgraph/lemma.hpp"

namespace {

using namespace combgraph;

Graph random_graph(int n, double p, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = GenKind::Gnp;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return generate(spec).graph;
}

void BM_NeighborhoodSweep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.3, 17);
  Bits all = Bits::full(n);
  for (auto _ : state) {
    int total = 0;
    for (int v = 0; v < n; ++v) total += neighborhood(g, v, all).count();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_NeighborhoodSweep)->Arg(64)->Arg(256)->Arg(1024);

void BM_IsCographRandom(benchmark::State& state) {
  GeneratorSpec spec;
  spec.kind = GenKind::CographRandom;
  spec.leaves = static_cast<int>(state.range(0));
  spec.seed = 23;
  Graph g = generate(spec).graph;
  for (auto _ : state) {
    auto tree = is_cograph(g);
    benchmark::DoNotOptimize(tree);
  }
}
BENCHMARK(BM_IsCographRandom)->Arg(16)->Arg(64)->Arg(256);

void BM_StrongFreenessOracle(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 5);
  for (auto _ : state) {
    auto v = is_strongly_k2_free(g, 3);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_StrongFreenessOracle)->Arg(10)->Arg(13);

void BM_BuildLayers(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.2, 31);
  Bits c(n), d(n);
  for (int v = 0; v < n; ++v) (v % 3 == 0 ? c : d).set(v);
  int delta = 0;
  c.for_each([&](int a) { delta = std::max(delta, (g.neighbors(a) & d).count()); });
  for (auto _ : state) {
    auto layers = build_layers(g, c, d, delta);
    benchmark::DoNotOptimize(layers);
  }
}
BENCHMARK(BM_BuildLayers)->Arg(60)->Arg(180);

void BM_LemmaProcedure(benchmark::State& state) {
  GeneratorSpec spec;
  spec.kind = GenKind::PlantedComb;
  spec.teeth = 8;
  spec.tooth_size = 4;
  spec.seed = 3;
  Generated gen = generate(spec);
  LemmaParams params;
  params.k = 3;
  params.d = 2.0;
  params.tau = 0.01;
  params.constants = compute_constants(3, 2.0);
  RelaxFactors relax;
  relax.relaxed = true;
  for (auto _ : state) {
    auto trace = main_lemma_procedure(gen.graph, *gen.blockade, params, relax);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_LemmaProcedure);

void BM_WgExhaustive(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 11);
  for (auto _ : state) {
    int w = compute_w_g(g);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WgExhaustive)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
