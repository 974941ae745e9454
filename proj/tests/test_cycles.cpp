#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cliquetop/complex.hpp"
#include "cliquetop/cycles.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/gnp.hpp"
#include "cliquetop/homology.hpp"
#include "doctest.h"

namespace ct = cliquetop;

TEST_CASE("closed core peels boundary faces") {
  // Every edge of the cone union has degree >= 2, so nothing peels: the
  // projective-plane core of a type-B cycle is not reachable by peeling.
  ct::Complex core = ct::closed_core(ct::p2_union_disc_rim3());
  CHECK(core.count(2) == 13);
  CHECK(core.count(0) == 7);
  // A dangling face peels away and takes nothing else with it.
  ct::Complex x = ct::Complex::from_cells({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                           {3, 4, 5}});
  CHECK(ct::closed_core(x).count(2) == 4);
  // A closed complex is its own core; an annulus peels to nothing.
  CHECK(ct::closed_core(ct::sphere_tetra()).count(2) == 4);
  CHECK(ct::closed_core(ct::annulus_band()).count(2) == 0);
}

TEST_CASE("minimal cycle extraction on spheres deletes nothing") {
  auto mc = ct::extract_minimal_cycle(ct::sphere_octahedron());
  REQUIRE(mc.has_value());
  CHECK(mc->faces_deleted == 0);
  CHECK(mc->support.count(2) == 8);
  CHECK(ct::is_minimal_cycle(mc->support));
}

TEST_CASE("no 2-cycle, no extraction") {
  CHECK_FALSE(ct::extract_minimal_cycle(ct::annulus_band()).has_value());
  CHECK_FALSE(ct::extract_minimal_cycle(ct::p2_six()).has_value());
  CHECK_FALSE(ct::extract_minimal_cycle(ct::p2_pinched()).has_value());
}

TEST_CASE("extraction prunes down to a minimal support") {
  // A sphere plus a dangling face is not minimal until the face goes.
  ct::Complex x = ct::Complex::from_cells({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                           {3, 4, 5}});
  auto mc = ct::extract_minimal_cycle(x);
  REQUIRE(mc.has_value());
  CHECK(mc->support.count(2) == 4);
  CHECK(ct::is_minimal_cycle(mc->support));
  CHECK_FALSE(ct::is_minimal_cycle(x));
}

TEST_CASE("classification of the frozen menagerie") {
  struct Row {
    const char* name;
    ct::Complex x;
    ct::CycleType type;
    bool type_b;
    long long L;
    long long core_faces;
  };
  const Row rows[] = {
      {"sphere_tetra", ct::sphere_tetra(), ct::CycleType::sphere_like, false, 0, 0},
      {"sphere_octahedron", ct::sphere_octahedron(), ct::CycleType::sphere_like, false, 0, 0},
      {"rim3", ct::p2_union_disc_rim3(), ct::CycleType::p2_union_disc, true, -3, 10},
      {"rim5", ct::p2_union_disc_rim5(), ct::CycleType::p2_union_disc, true, -5, 20},
      {"sphere_pinched", ct::sphere_pinched(), ct::CycleType::sphere_wedge_circle, false, 0,
       0},
      {"quotient_cycle_small", ct::quotient_cycle_small(),
       ct::CycleType::quotient_p2_union_disc, true, -5, 14},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    auto mc = ct::extract_minimal_cycle(r.x);
    REQUIRE(mc.has_value());
    ct::CycleClassification cls = ct::classify_minimal_cycle(mc->support);
    CHECK(cls.type == r.type);
    CHECK(cls.is_type_b == r.type_b);
    CHECK(cls.big_l == r.L);
    CHECK(cls.nu_hypothesis_ok);
    CHECK(cls.core.count(2) == r.core_faces);
    if (r.type_b) CHECK_FALSE(cls.witness_face.empty());
  }
}

TEST_CASE("the torus fails the density hypothesis and stays unrecognized") {
  auto mc = ct::extract_minimal_cycle(ct::torus_csaszar());
  REQUIRE(mc.has_value());
  ct::CycleClassification cls = ct::classify_minimal_cycle(mc->support);
  CHECK_FALSE(cls.nu_hypothesis_ok);
  CHECK(cls.type == ct::CycleType::unrecognized);
  CHECK_FALSE(cls.nu_violation.empty());
  // The grid torus fails the same way: its skeleton density is exactly 3.
  auto mg = ct::extract_minimal_cycle(ct::torus_grid_clean());
  REQUIRE(mg.has_value());
  CHECK_FALSE(ct::classify_minimal_cycle(mg->support).nu_hypothesis_ok);
}

TEST_CASE("small bubbles on the fixtures") {
  auto tetra = ct::find_small_bubble(ct::sphere_tetra(), 12);
  REQUIRE(tetra.has_value());
  CHECK(tetra->reason == ct::BubbleReason::minimal_cycle);
  CHECK(tetra->edges == 6);

  auto p6 = ct::find_small_bubble(ct::p2_six(), 15);
  REQUIRE(p6.has_value());
  CHECK(p6->reason == ct::BubbleReason::projective_plane);
  CHECK(p6->edges == 15);
  CHECK_FALSE(ct::find_small_bubble(ct::p2_six(), 14).has_value());

  auto pinched = ct::find_small_bubble(ct::p2_pinched(), 95);
  REQUIRE(pinched.has_value());
  CHECK(pinched->reason == ct::BubbleReason::p2_quotient);
  CHECK(pinched->edges == 90);

  CHECK_FALSE(ct::find_small_bubble(ct::annulus_band(), 30).has_value());
  CHECK_FALSE(ct::find_small_bubble(ct::sphere_tetra(), 5).has_value());  // cap below 6
}

TEST_CASE("bubble search agrees with the exhaustive oracle on tiny complexes") {
  int with_bubble = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 8 + static_cast<int>(seed % 5);
    ct::Complex x =
        ct::clique_complex(ct::sample_gnp(n, std::pow(n, -0.38), seed * 13 + 5), 3);
    if (x.count(2) > 22) continue;  // oracle face budget
    for (int cap : {8, 12}) {
      auto fast = ct::find_small_bubble(x, cap);
      auto slow = ct::find_small_bubble_oracle(x, cap);
      CAPTURE(seed);
      CAPTURE(cap);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        ++with_bubble;
        CHECK(fast->edges <= cap);
        CHECK(fast->edges == slow->edges);
        CHECK(fast->reason == slow->reason);
      }
    }
  }
  // The sampling regime produces some positives, so the agreement check bites.
  CHECK(with_bubble >= 3);
}

TEST_CASE("odd torsion screen") {
  ct::TorsionScreen yes = ct::odd_torsion_screen(ct::p2_clean_11());
  CHECK(yes.certified);
  CHECK(yes.nu_tilde == ct::rat(11, 30));
  ct::TorsionScreen no = ct::odd_torsion_screen(ct::torus_grid_clean());
  CHECK_FALSE(no.certified);
  CHECK(no.nu_tilde == ct::rat(1, 3));
  CHECK_FALSE(no.dense_witness.empty());
  // Sparse clique complexes are certified.
  ct::Complex x = ct::clique_complex(ct::sample_gnp(40, std::pow(40, -0.7), 8), 2);
  CHECK(ct::odd_torsion_screen(x).certified);
}

TEST_CASE("minimal cycles extracted from random clique complexes verify") {
  int extracted = 0;
  for (std::uint64_t seed = 1; seed <= 40 && extracted < 6; ++seed) {
    ct::Complex x =
        ct::clique_complex(ct::sample_gnp(14, std::pow(14, -0.3), seed * 7 + 3), 3);
    auto mc = ct::extract_minimal_cycle(x);
    if (!mc) continue;
    ++extracted;
    CHECK(ct::is_minimal_cycle(mc->support));
    auto b = ct::betti(mc->support, ct::Field::Q);
    REQUIRE(b.size() >= 3);
    CHECK(b[2] == 1);
  }
  CHECK(extracted >= 3);
}
