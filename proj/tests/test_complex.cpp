#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <sstream>

#include "cliquetop/complex.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/gnp.hpp"
#include "cliquetop/rational.hpp"
#include "doctest.h"

namespace ct = cliquetop;

TEST_CASE("from_cells closes downward and deduplicates") {
  ct::Complex x = ct::Complex::from_cells({{2, 0, 1}, {0, 1, 2}, {3}, {1, 3}});
  CHECK(x.count(0) == 4);
  CHECK(x.count(1) == 4);  // 01 02 12 13
  CHECK(x.count(2) == 1);
  CHECK(x.dimension() == 2);
  CHECK(x.has_cell({0, 1}));
  CHECK(x.has_cell({1, 3}));
  CHECK_FALSE(x.has_cell({0, 3}));
  std::array<int, 3> t{0, 1, 2};
  CHECK(x.index_of(2, t) == 0);
}

TEST_CASE("skeleton and pure part") {
  ct::Complex x = ct::Complex::from_cells({{0, 1, 2}, {2, 3}, {4}});
  ct::Complex sk = x.skeleton(1);
  CHECK(sk.dimension() == 1);
  CHECK(sk.count(1) == 4);
  ct::Complex pure = x.pure_part(2);
  CHECK(pure.count(0) == 3);
  CHECK(pure.count(1) == 3);
  CHECK(pure.count(2) == 1);
}

TEST_CASE("strongly connected components split along shared faces") {
  // Two triangles sharing only a vertex are edge-disconnected in dim 2.
  ct::Complex x = ct::Complex::from_cells({{0, 1, 2}, {0, 3, 4}});
  auto comps = x.strongly_connected_components(2);
  CHECK(comps.size() == 2);
  // Two triangles sharing an edge are one strong component.
  ct::Complex y = ct::Complex::from_cells({{0, 1, 2}, {1, 2, 3}});
  CHECK(y.strongly_connected_components(2).size() == 1);
}

TEST_CASE("vertex link of an octahedron vertex is a 4-cycle") {
  ct::VertexLink link = ct::vertex_link(ct::sphere_octahedron(), 0);
  CHECK(link.labels.size() == 4);
  CHECK(link.graph.edge_count() == 4);
  for (int i = 0; i < 4; ++i) CHECK(link.graph.degree(i) == 2);
}

TEST_CASE("clique complex of a complete graph hits the cap") {
  ct::Graph k7(7);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) k7.add_edge(i, j);
  bool above = false;
  ct::Complex x = ct::clique_complex(k7, 3, &above);
  CHECK(x.dimension() == 3);
  CHECK(above);
  CHECK(x.count(2) == 35);
  CHECK(x.count(3) == 35);
  bool above5 = true;
  ct::Complex full = ct::clique_complex(k7, 5, &above5);
  CHECK(full.dimension() == 5);
  CHECK(above5);  // the 7-clique itself exceeds dimension 5
}

TEST_CASE("clique complex matches triangles of the graph") {
  ct::Graph g = ct::sample_gnp(25, 0.3, 42);
  ct::Complex x = ct::clique_complex(g, 2);
  long long tri = 0;
  for (int a = 0; a < 25; ++a)
    for (int b = a + 1; b < 25; ++b)
      for (int c = b + 1; c < 25; ++c)
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ++tri;
  CHECK(x.count(2) == tri);
  CHECK(x.count(1) == g.edge_count());
  CHECK(x.one_skeleton().hash() == g.hash());
}

TEST_CASE("cleanliness distinguishes flag from non-flag complexes") {
  CHECK(ct::is_clean(ct::sphere_tetra()));
  CHECK(ct::is_clean(ct::p2_clean_11()));
  CHECK_FALSE(ct::is_clean(ct::p2_six()));         // skeleton K6, empty triangles
  CHECK_FALSE(ct::is_clean(ct::sphere_bipyramid()));
  CHECK_FALSE(ct::is_clean(ct::torus_csaszar()));  // skeleton K7
}

TEST_CASE("density report on the six vertex projective plane") {
  ct::DensityReport r = ct::density_report(ct::p2_six());
  CHECK(r.v == 6);
  CHECK(r.e == 15);
  CHECK(r.f == 10);
  CHECK(r.euler2 == 1);
  CHECK(r.L == 0);
  CHECK(r.closed);
  CHECK(r.boundary_edge_count == 0);
  REQUIRE(r.nu.has_value());
  CHECK(*r.nu == ct::rat(2, 5));
  REQUIRE(r.nu_tilde.has_value());
  CHECK(*r.nu_tilde == ct::rat(2, 5));
}

TEST_CASE("density report flags boundary edges") {
  ct::DensityReport r = ct::density_report(ct::generate_disc(3), false);
  CHECK(r.boundary_edge_count == 4);
  CHECK_FALSE(r.closed);
  CHECK_FALSE(r.nu_tilde.has_value());  // solver skipped on request
}

TEST_CASE("complex text round trip") {
  for (const ct::Complex& x :
       {ct::p2_clean_11(), ct::torus_csaszar(), ct::generate_disc(4),
        ct::clique_complex(ct::sample_gnp(18, 0.35, 5), 4)}) {
    std::ostringstream os;
    ct::write_complex(os, x);
    std::istringstream is(os.str());
    ct::Complex y = ct::read_complex(is);
    REQUIRE(y.dimension() == x.dimension());
    for (int k = 0; k <= x.dimension(); ++k) {
      CHECK(y.count(k) == x.count(k));
      CHECK(y.flat(k) == x.flat(k));
    }
  }
}

TEST_CASE("closure_of_cells keeps the chosen faces only") {
  ct::Complex x = ct::p2_six();
  ct::Complex y = x.closure_of_cells(2, {0, 1});
  CHECK(y.count(2) == 2);
  // Two triangles share at most one edge.
  CHECK(y.count(1) >= 5);
  CHECK(y.count(1) <= 6);
  CHECK(y.count(0) >= 4);
}

TEST_CASE("euler characteristics agree on 2-dimensional complexes") {
  ct::DensityReport r = ct::density_report(ct::klein_grid(), false);
  CHECK(r.euler == r.euler2);
  CHECK(r.euler == 0);
}
