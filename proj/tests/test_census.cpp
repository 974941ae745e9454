#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "cliquetop/census.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/cycles.hpp"
#include "cliquetop/density.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/homology.hpp"
#include "doctest.h"

namespace ct = cliquetop;

TEST_CASE("the only small closed complex with b2 = 0 and nu > 1/3 is the "
          "6-vertex projective plane") {
  auto found = ct::census_closed_sc(6);
  REQUIRE(found.size() == 1);
  const ct::Complex& x = found[0];
  CHECK(x.count(0) == 6);
  CHECK(x.count(1) == 15);  // skeleton K6 pins the complex up to isomorphism
  CHECK(x.count(2) == 10);
  CHECK(ct::betti(x, ct::Field::Q) == std::vector<long long>{1, 0, 0});
  CHECK(ct::betti(x, ct::Field::GF2) == std::vector<long long>{1, 1, 1});
}

TEST_CASE("census on 7 vertices") {
  auto found = ct::census_closed_sc(7);
  REQUIRE(found.size() == 5);
  std::map<std::pair<long long, long long>, int> counts;
  for (const ct::Complex& x : found) {
    ++counts[{x.count(0), x.count(2)}];
    // Every member carries the projective plane signature.
    CHECK(ct::betti(x, ct::Field::Q) == std::vector<long long>{1, 0, 0});
    CHECK(ct::betti(x, ct::Field::GF2) == std::vector<long long>{1, 1, 1});
    // And the census predicate really holds: closed, nu > 1/3.
    ct::DensityReport r = ct::density_report(x);
    CHECK(r.closed);
    CHECK(*r.nu_tilde > ct::rat(1, 3));
  }
  CHECK(counts[{6, 10}] == 1);
  CHECK(counts[{7, 12}] == 3);
  CHECK(counts[{7, 14}] == 1);
}

TEST_CASE("census members are pairwise non-isomorphic by invariants") {
  // Cheap separation: (v, e, f, sorted edge degree multiset) distinguishes
  // the five members on <= 7 vertices.
  auto found = ct::census_closed_sc(7);
  std::vector<std::vector<int>> signatures;
  for (const ct::Complex& x : found) {
    std::vector<int> sig{static_cast<int>(x.count(0)), static_cast<int>(x.count(1)),
                         static_cast<int>(x.count(2))};
    std::vector<int> vdeg(x.count(0), 0);
    const auto& es = x.flat(1);
    for (size_t i = 0; i < es.size(); i += 2) {
      ++vdeg[x.vertex_index(es[i])];
      ++vdeg[x.vertex_index(es[i + 1])];
    }
    std::sort(vdeg.begin(), vdeg.end());
    sig.insert(sig.end(), vdeg.begin(), vdeg.end());
    signatures.push_back(sig);
  }
  std::sort(signatures.begin(), signatures.end());
  CHECK(std::adjacent_find(signatures.begin(), signatures.end()) == signatures.end());
}

TEST_CASE("quotient cycle search reproduces the frozen fixture") {
  // Slow (re-runs the 8-vertex census); the frozen fixture is its output.
  auto q = ct::search_quotient_cycle(8);
  REQUIRE(q.has_value());
  ct::Complex frozen = ct::quotient_cycle_small();
  REQUIRE(q->dimension() == 2);
  for (int k = 0; k <= 2; ++k) CHECK(q->flat(k) == frozen.flat(k));
  CHECK(ct::is_minimal_cycle(*q));
  CHECK(ct::classify_minimal_cycle(*q).type == ct::CycleType::quotient_p2_union_disc);
}
