#include <benchmark/benchmark.h>

#include <cmath>

#include "cliquetop/density.hpp"
#include "cliquetop/gnp.hpp"

namespace ct = cliquetop;

static void BM_MaxDensity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ct::Graph g = ct::sample_gnp(n, std::pow(n, -0.5), 11);
  for (auto _ : state) {
    ct::DensitySolverResult r = ct::max_density_subgraph(g);
    benchmark::DoNotOptimize(r.max_density);
  }
}
BENCHMARK(BM_MaxDensity)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
