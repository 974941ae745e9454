#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquetop/complex.hpp"
#include "cliquetop/graph.hpp"
#include "cliquetop/rational.hpp"

namespace cliquetop {

// A fixed 2-complex whose 1-skeleton gets counted inside host graphs. For a
// clean pattern, simplicial embeddings into a clique complex correspond
// exactly to injective graph homomorphisms of the 1-skeleton.
struct Pattern {
  std::string name;
  Complex complex;
  Rational nu;                  // v/e
  Rational nu_tilde;            // recomputed and checked at load
  Rational threshold_exponent;  // -nu_tilde
  long long automorphisms = 1;  // of the 1-skeleton
};

struct EmbeddingCount {
  std::string pattern;
  long long count = 0;     // labeled injective homomorphisms found
  bool saturated = false;  // stopped at cap; count == cap
  bool timed_out = false;  // wall budget hit; count is a lower bound
  long long nodes = 0;     // search tree size
  double expected = 0.0;   // C(n,v) * v! * p^e for the sampling parameters
};

// Labeled injective homomorphisms of `pattern` into `host`, backtracking with
// highest-degree-first vertex order and host-bitset candidate intersection.
// Stops at `cap` matches (saturated) or after `budget` if budget > 0.
EmbeddingCount count_embeddings(const Graph& host, const Graph& pattern, long long cap,
                                std::chrono::nanoseconds budget = std::chrono::nanoseconds{0});
EmbeddingCount count_embeddings(const Graph& host, const Pattern& pat, long long cap,
                                std::chrono::nanoseconds budget = std::chrono::nanoseconds{0});

// Brute-force oracle: tries every injective vertex map (host <= ~9 vertices).
long long count_embeddings_oracle(const Graph& host, const Graph& pattern);

// (v1-v2)/(e1-e2) for a nested pair s2 within s1; requires e1 > e2. The
// identity 3(v1-v2) = (e1-e2) + 3(chi2(s1)-chi2(s2)) + L(s1)-L(s2) is
// re-derivable from the counts and asserted by tests.
Rational relative_nu(const Complex& s1, const Complex& s2);

struct PatternPair {
  Pattern outer;                   // s1
  Pattern inner;                   // s2
  std::vector<int> inner_to_outer; // vertex labels of s2 mapped into s1
};

struct CountComparisonSummary {
  long long trials = 0;
  long long outer_fewer = 0;       // trials with T1 < T2
  long long non_extendable = 0;    // trials with an s2-embedding not extending to s1
  long long inner_absent = 0;      // trials with T2 = 0
  bool alpha_in_sandwich = true;   // -nu_tilde(s2) < alpha < -relative_nu
  double expected_ratio = 0.0;     // E(T1)/E(T2) = n^(v1-v2) p^(e1-e2)
};

// Monte Carlo comparison of embedding counts for a nested pattern pair on
// G(n, n^alpha); per-trial seeds derive from base_seed.
CountComparisonSummary count_comparison_experiment(const PatternPair& pair, int n,
                                                   double alpha, int trials,
                                                   uint64_t base_seed,
                                                   long long count_cap = 2'000'000);

// Built-in patterns: k3 (triangle), k4 (tetrahedron boundary), s2 (5-vertex
// sphere), p2 (11-vertex clean projective plane). Each is validated on
// construction; the declared nu_tilde must match the density solver.
const std::vector<Pattern>& builtin_patterns();
const Pattern& pattern_by_name(const std::string& name);

// Registry file: one line per pattern, "name path nu_tilde validator".
// Validators: counts_only, sphere, projective_plane.
void write_pattern_files(const std::string& dir);
std::vector<Pattern> load_pattern_registry(const std::string& registry_path);

}  // namespace cliquetop
