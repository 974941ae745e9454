#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cliquetop/collapse.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/gnp.hpp"
#include "cliquetop/homology.hpp"
#include "doctest.h"

namespace ct = cliquetop;
using Outcome = ct::FreenessCertificate::Outcome;

TEST_CASE("discs collapse to a spanning tree") {
  for (int r : {0, 1, 5, 9}) {
    ct::FreenessCertificate c = ct::freeness_certificate(ct::generate_disc(r));
    CHECK(c.outcome == Outcome::free_fundamental_group);
    CHECK(c.free_rank == 0);
    CHECK(c.residue.count(2) == 0);
    // A tree remains: e = v - 1.
    CHECK(c.residue.count(1) == c.residue.count(0) - 1);
  }
}

TEST_CASE("solid tetrahedron collapses to a point") {
  ct::Complex solid = ct::Complex::from_cells({{0, 1, 2, 3}});
  ct::FreenessCertificate c = ct::freeness_certificate(solid);
  CHECK(c.outcome == Outcome::free_fundamental_group);
  CHECK(c.steps.size() == 4);
  CHECK(c.free_rank == 0);
}

TEST_CASE("annulus collapses to a circle") {
  ct::FreenessCertificate c = ct::freeness_certificate(ct::annulus_band());
  CHECK(c.outcome == Outcome::free_fundamental_group);
  CHECK(c.free_rank == 1);
  CHECK(c.steps.size() == 8);
  CHECK(c.residue.count(1) == 8);
  CHECK(c.residue.count(2) == 0);
}

TEST_CASE("closed surfaces have no free faces") {
  for (const ct::Complex& x : {ct::sphere_tetra(), ct::torus_grid_clean()}) {
    ct::FreenessCertificate c = ct::freeness_certificate(x);
    CHECK(c.outcome == Outcome::closed_residue);
    CHECK(c.steps.empty());
    CHECK(c.residue.count(2) == x.count(2));
  }
}

TEST_CASE("boundary of the 4-simplex obstructs the 3 collapse") {
  ct::Complex d4 = ct::Complex::from_cells(
      {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
  ct::FreenessCertificate c = ct::freeness_certificate(d4);
  CHECK(c.outcome == Outcome::obstructed_3_collapse);
  CHECK(c.residue.count(3) == 5);
}

TEST_CASE("collapse steps preserve betti numbers one step at a time") {
  ct::Graph g = ct::sample_gnp(40, std::pow(40, -0.6), 12);
  ct::Complex x = ct::clique_complex(g, 3);
  ct::FreenessCertificate c = ct::freeness_certificate(x);
  auto expected_gf2 = ct::betti(x, ct::Field::GF2);
  auto expected_q = ct::betti(x, ct::Field::Q);
  auto pad = [](std::vector<long long> b) {
    b.resize(4, 0);
    return b;
  };
  for (long long k = 0; k <= static_cast<long long>(c.steps.size()); ++k) {
    ct::Complex stage = ct::apply_collapse_steps(x, c.steps, k);
    CHECK(pad(ct::betti(stage, ct::Field::GF2)) == pad(expected_gf2));
  }
  CHECK(pad(ct::betti(c.residue, ct::Field::Q)) == pad(expected_q));
}

TEST_CASE("apply_collapse_steps replays to the residue exactly") {
  ct::Graph g = ct::sample_gnp(35, std::pow(35, -0.55), 4);
  ct::Complex x = ct::clique_complex(g, 3);
  ct::FreenessCertificate c = ct::freeness_certificate(x);
  ct::Complex replay = ct::apply_collapse_steps(x, c.steps);
  REQUIRE(replay.dimension() == c.residue.dimension());
  for (int k = 0; k <= replay.dimension(); ++k)
    CHECK(replay.flat(k) == c.residue.flat(k));
}

TEST_CASE("free faces named by the trace are free when consumed") {
  ct::Complex x = ct::generate_disc(6);
  ct::FreenessCertificate c = ct::freeness_certificate(x);
  std::string trace = ct::collapse_trace(c.steps);
  CHECK(trace.find("COLLAPSE") != std::string::npos);
  // Each step's free face has exactly one coface in the stage it is removed
  // from; apply_collapse_steps would throw otherwise, so replay suffices.
  ct::Complex replay = ct::apply_collapse_steps(x, c.steps);
  CHECK(replay.count(2) == 0);
}

TEST_CASE("phase collapse primitives respect their contracts") {
  ct::Graph g = ct::sample_gnp(30, std::pow(30, -0.5), 77);
  ct::Complex x = ct::clique_complex(g, 3);
  ct::CollapseOutcome p3 = ct::collapse_3_to_2(x);
  ct::FreenessCertificate c = ct::freeness_certificate(x);
  if (!p3.removed_all_top) {
    CHECK(c.outcome == ct::FreenessCertificate::Outcome::obstructed_3_collapse);
    CHECK(c.steps.size() == p3.steps.size());
  } else {
    CHECK(p3.residue.count(3) == 0);
    ct::CollapseOutcome p2 = ct::collapse_2_cascade(p3.residue);
    if (p2.removed_all_top) CHECK(p2.residue.count(2) == 0);
    // The certificate is the composition of the two phases.
    CHECK(c.steps.size() == p3.steps.size() + p2.steps.size());
  }
}

TEST_CASE("residue kind classifier") {
  CHECK(ct::residue_kind(ct::torus_grid_clean()) == ct::ResidueKind::closed_2_complex);
  CHECK(ct::residue_kind(ct::generate_disc(2).skeleton(1)) == ct::ResidueKind::graph);
  CHECK(ct::residue_kind(ct::p2_union_disc_rim3()) == ct::ResidueKind::closed_2_complex);
  CHECK(ct::residue_kind(ct::annulus_band()) == ct::ResidueKind::mixed);
}
