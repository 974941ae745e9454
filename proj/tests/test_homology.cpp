#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>

#include "cliquetop/complex.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/gnp.hpp"
#include "cliquetop/homology.hpp"
#include "doctest.h"

namespace ct = cliquetop;

namespace {

std::vector<long long> bq(const ct::Complex& x) { return ct::betti(x, ct::Field::Q); }
std::vector<long long> b2(const ct::Complex& x) { return ct::betti(x, ct::Field::GF2); }

ct::Complex sample(int n, double alpha, std::uint64_t seed, int cap = 5) {
  return ct::clique_complex(ct::sample_gnp(n, std::pow(n, alpha), seed), cap);
}

}  // namespace

TEST_CASE("betti numbers of the reference surfaces") {
  CHECK(bq(ct::sphere_tetra()) == std::vector<long long>{1, 0, 1});
  CHECK(b2(ct::sphere_tetra()) == std::vector<long long>{1, 0, 1});
  CHECK(bq(ct::sphere_octahedron()) == std::vector<long long>{1, 0, 1});
  CHECK(bq(ct::torus_grid_clean()) == std::vector<long long>{1, 2, 1});
  CHECK(b2(ct::torus_grid_clean()) == std::vector<long long>{1, 2, 1});
  CHECK(bq(ct::genus2_clean()) == std::vector<long long>{1, 4, 1});
  CHECK(b2(ct::genus2_clean()) == std::vector<long long>{1, 4, 1});
  CHECK(bq(ct::annulus_band()) == std::vector<long long>{1, 1, 0});
}

TEST_CASE("2-torsion separates the fields") {
  // Projective plane: rational homology trivial, GF2 homology is not.
  CHECK(bq(ct::p2_six()) == std::vector<long long>{1, 0, 0});
  CHECK(b2(ct::p2_six()) == std::vector<long long>{1, 1, 1});
  CHECK(bq(ct::p2_clean_11()) == std::vector<long long>{1, 0, 0});
  CHECK(b2(ct::p2_clean_11()) == std::vector<long long>{1, 1, 1});
  // Klein bottle: b1 gains one over GF2, b2 appears.
  CHECK(bq(ct::klein_grid()) == std::vector<long long>{1, 1, 0});
  CHECK(b2(ct::klein_grid()) == std::vector<long long>{1, 2, 1});
  // Quotients built from the projective plane.
  CHECK(bq(ct::p2_pinched()) == std::vector<long long>{1, 1, 0});
  CHECK(b2(ct::p2_pinched()) == std::vector<long long>{1, 2, 1});
  CHECK(bq(ct::p_prime()) == std::vector<long long>{1, 0, 0});
  CHECK(b2(ct::p_prime()) == std::vector<long long>{1, 1, 1});
}

TEST_CASE("betti of a disconnected complex counts components") {
  ct::Complex x = ct::Complex::from_cells({{0, 1, 2}, {5, 6}, {9}});
  CHECK(bq(x) == std::vector<long long>{3, 0, 0});
  CHECK(b2(x) == std::vector<long long>{3, 0, 0});
}

TEST_CASE("boundary squared is zero") {
  CHECK(ct::boundary_squared_is_zero(ct::p2_clean_11()));
  CHECK(ct::boundary_squared_is_zero(ct::genus2_clean()));
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    CHECK(ct::boundary_squared_is_zero(sample(20, -0.45, seed)));
}

TEST_CASE("euler-poincare identity on random clique complexes") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 8 + static_cast<int>(seed % 18);
    ct::Complex x = sample(n, -0.35 - 0.02 * static_cast<double>(seed % 10), seed);
    long long chi_cells = 0;
    for (int k = 0; k <= x.dimension(); ++k)
      chi_cells += (k % 2 ? -1 : 1) * x.count(k);
    for (ct::Field f : {ct::Field::GF2, ct::Field::Q}) {
      auto b = ct::betti(x, f);
      long long chi_b = 0;
      for (size_t k = 0; k < b.size(); ++k)
        chi_b += (k % 2 ? -1 : 1) * b[k];
      CHECK(chi_b == chi_cells);
    }
  }
}

TEST_CASE("gf2 rank plus kernel dimension equals column count") {
  for (const ct::Complex& x : {ct::p2_six(), ct::klein_grid(), sample(16, -0.4, 3)}) {
    for (int k = 1; k <= x.dimension(); ++k) {
      ct::Gf2Matrix m = ct::boundary_matrix_gf2(x, k);
      long long rank = ct::gf2_rank(m);
      auto kernel = ct::gf2_kernel_basis(m);
      CHECK(rank + static_cast<long long>(kernel.size()) == x.count(k));
    }
  }
}

TEST_CASE("rational rank paths agree") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    ct::Complex x = sample(14 + static_cast<int>(seed), -0.4, seed ^ 0xabcd);
    for (int k = 1; k <= x.dimension(); ++k) {
      ct::SparseIntMatrix m = ct::boundary_matrix(x, k);
      long long exact = ct::bareiss_rank(m);
      CHECK(ct::modular_rank(m, ct::kRankPrimeA) == exact);
      CHECK(ct::modular_rank(m, ct::kRankPrimeB) == exact);
      CHECK(ct::boundary_rank_q(x, k) == exact);
      CHECK(ct::boundary_rank_q_fast(x, k) == exact);
    }
    CHECK(ct::betti_q_fast(x) == bq(x));
  }
}

TEST_CASE("gf2 betti dominates rational betti") {
  // Universal coefficients: over GF2 every b_k can only grow.
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    ct::Complex x = sample(18, -0.42, seed * 3 + 1);
    auto q = bq(x);
    auto g = b2(x);
    REQUIRE(q.size() == g.size());
    for (size_t k = 0; k < q.size(); ++k) CHECK(g[k] >= q[k]);
  }
}

TEST_CASE("two cycle space dimension equals gf2 b2 of closed complexes") {
  CHECK(ct::two_cycle_space(ct::sphere_octahedron()).size() == 1);
  CHECK(ct::two_cycle_space(ct::p2_six()).size() == 1);
  CHECK(ct::two_cycle_space(ct::torus_grid_clean()).size() == 1);
  CHECK(ct::two_cycle_space(ct::annulus_band()).empty());
  // Each basis vector is a genuine GF2 cycle: every edge is covered evenly.
  ct::Complex x = ct::sphere_bipyramid();
  auto basis = ct::two_cycle_space(x);
  REQUIRE(basis.size() == 1);
  std::vector<int> toggles(x.count(1), 0);
  for (long long t : basis[0]) {
    auto f = x.cell(2, t);
    const int pairs[3][2] = {{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}};
    for (auto& pr : pairs) {
      std::array<int, 2> e{pr[0], pr[1]};
      ++toggles[x.index_of(1, e)];
    }
  }
  for (int c : toggles) CHECK(c % 2 == 0);
}

TEST_CASE("betti of graphs reduces to cycle rank") {
  ct::Graph g = ct::sample_gnp(30, 0.08, 17);
  ct::Complex x = ct::clique_complex(g, 1);
  auto b = bq(x);
  long long comps = static_cast<long long>(g.components().size());
  // Isolated vertices are absent from the complex, which stores cells only.
  long long present = x.count(0);
  long long isolated = 30 - present;
  CHECK(b[0] == comps - isolated);
  if (b.size() > 1) CHECK(b[1] == g.edge_count() - present + (comps - isolated));
}
