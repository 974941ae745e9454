#include <benchmark/benchmark.h>

#include <cmath>

#include "cliquetop/collapse.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/gnp.hpp"

namespace ct = cliquetop;

static void BM_FreenessCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ct::Graph g = ct::sample_gnp(n, std::pow(n, -0.6), 17);
  ct::Complex x = ct::clique_complex(g, 3);
  for (auto _ : state) {
    ct::FreenessCertificate cert = ct::freeness_certificate(x);
    benchmark::DoNotOptimize(cert.steps.size());
  }
}
BENCHMARK(BM_FreenessCertificate)->Arg(100)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
