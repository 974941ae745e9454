#include <benchmark/benchmark.h>

#include <cmath>

#include "cliquetop/complex.hpp"
#include "cliquetop/gnp.hpp"

namespace ct = cliquetop;

static void BM_SampleGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double p = std::pow(n, -0.5);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    ct::Graph g = ct::sample_gnp(n, p, seed++);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_SampleGnp)->Arg(100)->Arg(400)->Arg(1600);

static void BM_CliqueComplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ct::Graph g = ct::sample_gnp(n, std::pow(n, -0.5), 7);
  for (auto _ : state) {
    ct::Complex x = ct::clique_complex(g, 3);
    benchmark::DoNotOptimize(x.count(2));
  }
}
BENCHMARK(BM_CliqueComplex)->Arg(100)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
