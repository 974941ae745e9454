#include <benchmark/benchmark.h>

#include <cmath>

#include "cliquetop/complex.hpp"
#include "cliquetop/gnp.hpp"
#include "cliquetop/homology.hpp"

namespace ct = cliquetop;

static void BM_BoundaryRankGf2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ct::Graph g = ct::sample_gnp(n, std::pow(n, -0.45), 13);
  ct::Complex x = ct::clique_complex(g, 3);
  for (auto _ : state) {
    long long r = ct::boundary_rank_gf2(x, 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BoundaryRankGf2)->Arg(60)->Arg(120)->Arg(240);

static void BM_BettiQFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ct::Graph g = ct::sample_gnp(n, std::pow(n, -0.45), 13);
  ct::Complex x = ct::clique_complex(g, 3);
  for (auto _ : state) {
    auto b = ct::betti_q_fast(x);
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_BettiQFast)->Arg(60)->Arg(120)->Arg(240);

BENCHMARK_MAIN();
