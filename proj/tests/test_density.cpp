#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cliquetop/complex.hpp"
#include "cliquetop/density.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/gnp.hpp"
#include "doctest.h"

namespace ct = cliquetop;

namespace {

ct::Graph complete(int n) {
  ct::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("two triangles sharing a vertex have density 6/5") {
  ct::Complex tt = ct::Complex::from_cells({{0, 1, 2}, {0, 3, 4}});
  ct::DensitySolverResult r = ct::max_density_subgraph(tt.one_skeleton());
  CHECK(r.max_density == ct::rat(6, 5));
  CHECK(r.attained_by_whole);
}

TEST_CASE("complete graph density") {
  auto r = ct::max_density_subgraph(complete(6));
  CHECK(r.max_density == ct::rat(15, 6));
  CHECK(r.attained_by_whole);
  auto b = ct::is_balanced(complete(6));
  CHECK(b.balanced);
  CHECK(b.strictly_balanced);
}

TEST_CASE("cycle density is 1 and cycles are balanced, not strictly") {
  ct::Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  auto r = ct::max_density_subgraph(c5);
  CHECK(r.max_density == ct::rat(1, 1));
  CHECK(r.attained_by_whole);
  auto b = ct::is_balanced(c5);
  CHECK(b.balanced);
  // Deleting a vertex leaves a path of density 3/4 < 1, so the cycle is in
  // fact strictly balanced.
  CHECK(b.strictly_balanced);
}

TEST_CASE("pendant vertex breaks strictness but not balance") {
  // Triangle with a pendant edge: whole density 4/4 equals the triangle's
  // 3/3, so the maximum is attained by the whole graph but not uniquely.
  ct::Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  auto r = ct::max_density_subgraph(g);
  CHECK(r.max_density == ct::rat(1, 1));
  CHECK(r.attained_by_whole);
  auto b = ct::is_balanced(g);
  CHECK(b.balanced);
  CHECK_FALSE(b.strictly_balanced);
}

TEST_CASE("pendant vertex on a clique breaks balance") {
  // K4 plus a pendant vertex: whole density 7/5 < 6/4 of the clique.
  ct::Graph g(5);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
  g.add_edge(3, 4);
  auto r = ct::max_density_subgraph(g);
  CHECK(r.max_density == ct::rat(3, 2));
  CHECK_FALSE(r.attained_by_whole);
  CHECK(r.witness == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(ct::is_balanced(g).balanced);
}

TEST_CASE("edgeless graph throws") {
  ct::Graph g(4);
  CHECK_THROWS_AS(ct::max_density_subgraph(g), ct::EdgelessGraphError);
}

TEST_CASE("solver matches brute force on random graphs") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);  // 4..10
    double p = 0.15 + 0.1 * static_cast<double>(seed % 8);
    ct::Graph g = ct::sample_gnp(n, p, seed * 77);
    if (g.edge_count() == 0) continue;
    ++checked;
    auto fast = ct::max_density_subgraph(g);
    auto slow = ct::brute_force_max_density(g);
    CHECK(fast.max_density == slow.max_density);
    CHECK(fast.attained_by_whole == slow.attained_by_whole);
    // The witness really attains the reported density.
    ct::Graph w = g.induced(fast.witness);
    CHECK(ct::rat(w.edge_count(), w.vertex_count()) == fast.max_density);
  }
  CHECK(checked >= 100);
}

TEST_CASE("balance matches brute force on random graphs") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    int n = 4 + static_cast<int>(seed % 6);
    ct::Graph g = ct::sample_gnp(n, 0.45, seed * 131 + 7);
    if (g.edge_count() == 0) continue;
    ++checked;
    bool strict = false;
    bool bal = ct::brute_force_balanced(g, &strict);
    auto rep = ct::is_balanced(g);
    CHECK(rep.balanced == bal);
    CHECK(rep.strictly_balanced == strict);
  }
  CHECK(checked >= 70);
}

TEST_CASE("per component balance report") {
  // A triangle next to a disjoint pendant-path component.
  ct::Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  auto rep = ct::is_balanced(g);
  REQUIRE(rep.components.size() == 2);
  CHECK_FALSE(rep.balanced);  // whole density 5/6 < 1 of the triangle
  int balanced_components = 0;
  for (const auto& c : rep.components) balanced_components += c.balanced;
  CHECK(balanced_components == 2);  // each component alone is balanced
}

TEST_CASE("clean surface fixtures are balanced") {
  for (const ct::Complex& x : {ct::sphere_tetra(), ct::sphere_octahedron(),
                               ct::torus_grid_clean(), ct::klein_grid(),
                               ct::genus2_clean()}) {
    auto rep = ct::is_balanced(x.one_skeleton());
    CHECK(rep.balanced);
    CHECK(rep.strictly_balanced);
  }
  auto p2 = ct::is_balanced(ct::p2_clean_11().one_skeleton());
  CHECK(p2.balanced);
  CHECK(p2.strictly_balanced);
}

TEST_CASE("cut and glue family crosses balance exactly at r = 16") {
  CHECK(ct::unbalanced_crossover_r() == 16);
  auto r15 = ct::is_balanced(ct::generate_unbalanced_clean_surface(15).one_skeleton());
  CHECK(r15.balanced);
  auto r16 = ct::is_balanced(ct::generate_unbalanced_clean_surface(16).one_skeleton());
  CHECK_FALSE(r16.balanced);
  // The dense part the whole loses to is the original surface graph: the
  // whole has density (234+48)/(76+16) while the undamaged 76-vertex part
  // keeps 233/76 > 282/92.
  CHECK(ct::rat(233, 76) > ct::rat(282, 92));
}

TEST_CASE("densest subgraph of a sampled graph dominates every vertex set") {
  ct::Graph g = ct::sample_gnp(40, 0.2, 2024);
  auto r = ct::max_density_subgraph(g);
  for (std::uint64_t s = 0; s < 200; ++s) {
    // Random subsets never beat the reported maximum.
    std::vector<int> keep;
    for (int v = 0; v < 40; ++v)
      if (ct::mix64(s * 64 + v) & 1) keep.push_back(v);
    if (keep.size() < 2) continue;
    ct::Graph h = g.induced(keep);
    if (h.edge_count() == 0) continue;
    CHECK(ct::rat(h.edge_count(), h.vertex_count()) <= r.max_density);
  }
}
