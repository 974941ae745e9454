#include <benchmark/benchmark.h>

#include <cmath>

#include "cliquetop/gnp.hpp"
#include "cliquetop/patterns.hpp"

namespace ct = cliquetop;

static void BM_CountEmbeddings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ct::Graph g = ct::sample_gnp(n, std::pow(n, -0.45), 19);
  const ct::Pattern& p2 = ct::pattern_by_name("p2");
  for (auto _ : state) {
    ct::EmbeddingCount ec = ct::count_embeddings(g, p2, 1);
    benchmark::DoNotOptimize(ec.count);
  }
}
BENCHMARK(BM_CountEmbeddings)->Arg(60)->Arg(120)->Arg(240);

BENCHMARK_MAIN();
