#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "cliquetop/complex.hpp"
#include "cliquetop/filling.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/gnp.hpp"
#include "doctest.h"

namespace ct = cliquetop;

TEST_CASE("loop validation") {
  ct::Complex oct = ct::sphere_octahedron();
  CHECK_THROWS_AS(ct::validate_loop(oct, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ct::validate_loop(oct, {1, 1, 2}), std::invalid_argument);
  // Octahedron: 0 and its antipode are the only non-adjacent pairs.
  ct::VertexLink link = ct::vertex_link(oct, 0);
  int antipode = -1;
  for (int v = 1; v < 6; ++v)
    if (std::find(link.labels.begin(), link.labels.end(), v) == link.labels.end())
      antipode = v;
  REQUIRE(antipode != -1);
  CHECK_THROWS_AS(ct::validate_loop(oct, {0, antipode, 1}), std::invalid_argument);
  CHECK_NOTHROW(ct::validate_loop(oct, {0, 1, 2}));
  // Non-simple loops are allowed when consecutive entries stay distinct.
  CHECK_NOTHROW(ct::validate_loop(oct, {0, 1, 2, 0, 2, 1}));
}

TEST_CASE("a face boundary fills with one triangle") {
  ct::Complex tetra = ct::sphere_tetra();
  ct::FillingResult r = ct::filling_area(tetra, {0, 1, 2});
  CHECK(r.filled);
  CHECK(r.area == 1);
  REQUIRE(r.disc.size() == 1);
  CHECK(r.disc[0] == std::vector<int>{0, 1, 2});
  CHECK(ct::filling_boundary_matches(tetra, {0, 1, 2}, r.disc));
  auto oracle = ct::filling_area_oracle(tetra, {0, 1, 2});
  REQUIRE(oracle.has_value());
  CHECK(*oracle == 1);
}

TEST_CASE("the octahedron equator costs four faces") {
  ct::Complex oct = ct::sphere_octahedron();
  ct::VertexLink link = ct::vertex_link(oct, 0);
  // The link graph is the equator 4-cycle; walk it.
  std::vector<int> walk{0};
  std::vector<char> used(4, 0);
  used[0] = 1;
  while (walk.size() < 4)
    for (int u = 0; u < 4; ++u)
      if (!used[u] && link.graph.has_edge(walk.back(), u)) {
        walk.push_back(u);
        used[u] = 1;
        break;
      }
  std::vector<int> equator;
  for (int i : walk) equator.push_back(link.labels[i]);
  ct::FillingResult r = ct::filling_area(oct, equator);
  CHECK(r.filled);
  CHECK(r.area == 4);
  CHECK(ct::filling_boundary_matches(oct, equator, r.disc));
  auto oracle = ct::filling_area_oracle(oct, equator);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == 4);
}

TEST_CASE("essential loops of the projective plane do not fill") {
  ct::Complex p6 = ct::p2_six();
  ct::FillingResult r = ct::filling_area(p6, {0, 1, 4});
  CHECK_FALSE(r.filled);
  CHECK_FALSE(r.null_homologous);  // GF2 obstruction is definitive
}

TEST_CASE("the doubled essential loop fills by covering the whole plane") {
  ct::Complex p6 = ct::p2_six();
  std::vector<int> doubled{0, 1, 4, 0, 1, 4};
  ct::FillingLimits lim;
  lim.extra_length = 4;
  lim.max_area = 32;
  ct::FillingResult r = ct::filling_area(p6, doubled, lim);
  CHECK(r.null_homologous);
  CHECK(r.filled);
  CHECK(r.area == 10);
  CHECK(ct::filling_boundary_matches(p6, doubled, r.disc));
  auto oracle = ct::filling_area_oracle(p6, doubled, 12);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == 10);
}

TEST_CASE("search never undercuts the exhaustive oracle") {
  // On fixtures the two agree whenever the oracle finds a disc at all.
  const ct::Complex fixtures[] = {ct::sphere_tetra(), ct::sphere_octahedron(),
                                  ct::annulus_band(), ct::torus_grid_clean()};
  ct::FillingLimits lim;
  lim.extra_length = 4;
  for (const ct::Complex& x : fixtures) {
    // All reduced length-3 loops (triangles of the skeleton, cyclic order).
    ct::Graph sk = x.one_skeleton();
    auto labels = x.flat(0);
    for (size_t a = 0; a < labels.size(); ++a)
      for (size_t b = a + 1; b < labels.size(); ++b)
        for (size_t c = b + 1; c < labels.size(); ++c) {
          if (!sk.has_edge(static_cast<int>(a), static_cast<int>(b)) ||
              !sk.has_edge(static_cast<int>(b), static_cast<int>(c)) ||
              !sk.has_edge(static_cast<int>(a), static_cast<int>(c)))
            continue;
          std::vector<int> loop{labels[a], labels[b], labels[c]};
          auto oracle = ct::filling_area_oracle(x, loop);
          ct::FillingResult r = ct::filling_area(x, loop, lim);
          if (oracle) {
            REQUIRE(r.filled);
            CHECK(r.area == *oracle);
          } else if (r.filled) {
            CHECK(r.area > 8);  // oracle budget was the only obstacle
          }
        }
  }
}

TEST_CASE("restricted isoperimetric scan on the octahedron") {
  ct::IsoperimetricScan s = ct::restricted_isoperimetric_ratio(ct::sphere_octahedron(), 6);
  CHECK(s.loops_scanned == 107);
  CHECK(s.non_null == 0);
  CHECK(s.unfilled_within == 0);
  REQUIRE(s.min_ratio.has_value());
  CHECK(*s.min_ratio == ct::rat(1, 1));
  REQUIRE(s.witness.has_value());
  CHECK(static_cast<long long>(s.witness->loop.size()) == s.witness->area);
}

TEST_CASE("restricted isoperimetric scan sees the annulus hole") {
  ct::IsoperimetricScan s = ct::restricted_isoperimetric_ratio(ct::annulus_band(), 6);
  CHECK(s.loops_scanned == 126);
  CHECK(s.non_null == 62);  // loops around the hole cannot bound
  CHECK(s.unfilled_within == 0);
  REQUIRE(s.min_ratio.has_value());
  CHECK(*s.min_ratio == ct::rat(3, 2));
}

TEST_CASE("filling witnesses from random complexes audit cleanly") {
  int filled = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    ct::Complex x =
        ct::clique_complex(ct::sample_gnp(12, std::pow(12, -0.35), seed * 5 + 2), 2);
    if (x.count(2) == 0) continue;
    auto f0 = x.cell(2, 0);
    std::vector<int> loop(f0.begin(), f0.end());
    ct::FillingResult r = ct::filling_area(x, loop);
    if (!r.filled) continue;
    ++filled;
    CHECK(r.area == 1);
    CHECK(ct::filling_boundary_matches(x, loop, r.disc));
  }
  CHECK(filled >= 8);
}

TEST_CASE("boundary audit rejects a wrong disc") {
  ct::Complex tetra = ct::sphere_tetra();
  CHECK_FALSE(ct::filling_boundary_matches(tetra, {0, 1, 2}, {{0, 1, 3}}));
  CHECK_FALSE(ct::filling_boundary_matches(tetra, {0, 1, 2}, {}));
}
