#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquetop/complex.hpp"
#include "cliquetop/rational.hpp"

namespace cliquetop {

// Largest subcomplex of the pure 2-dimensional part in which every edge lies
// in at least two faces (iterated peeling of deficient faces).
Complex closed_core(const Complex& x);

// A minimal 2-cycle: a pure 2-complex with rational b2 = 1 none of whose
// proper pure subcomplexes carries a nonzero rational 2-cycle.
struct MinimalCycle {
  Complex support;
  long long faces_deleted = 0;  // greedy deletions performed
};

// Greedy extraction: seed with the support of a 2-cycle, then repeatedly
// delete the lexicographically first face whose removal keeps b2 >= 1,
// restricting to the pure part after each pass. Returns nothing when the
// complex has no rational 2-cycle. The result is verified exactly.
std::optional<MinimalCycle> extract_minimal_cycle(const Complex& x);

// Definitional check: b2(support) = 1 exactly, and every single-face
// deletion (followed by pure-part restriction) kills all rational 2-cycles.
bool is_minimal_cycle(const Complex& support);

enum class CycleType {
  sphere_like,            // A: chi = 2, GF2 Betti (1,0,1)
  sphere_wedge_circle,    // A: chi = 1, GF2 Betti (1,1,1)
  p2_union_disc,          // B: projective-plane core plus a disc
  quotient_p2_union_disc, // B: core is a projective plane with an edge pair
                          //    identified (some edge degree >= 4)
  unrecognized,
};

struct CycleClassification {
  CycleType type = CycleType::unrecognized;
  bool is_type_b = false;          // has a proper closed 2-subcomplex
  std::vector<int> witness_face;   // first face (A) or first disc face (B)
  Complex core;                    // closed core of the type-B part
  long long big_l = 0;             // 2e - 3f of the support
  bool nu_hypothesis_ok = true;    // nu_tilde(support) > 1/3
  std::string nu_violation;        // set when the hypothesis fails
};

// Classifies a verified minimal cycle. The dichotomy (sphere-like versus
// projective-plane-based) is only guaranteed when nu_tilde(support) > 1/3;
// otherwise the report flags the hypothesis violation and still returns the
// best structural match.
CycleClassification classify_minimal_cycle(const Complex& support);

enum class BubbleReason { minimal_cycle, projective_plane, p2_quotient };

struct Bubble {
  Complex support;
  BubbleReason reason;
  int edges = 0;
};

// Searches for a subcomplex with at most edge_cap edges witnessing a
// non-aspherical feature: a 2-cycle, a projective plane (GF2 Betti (1,1,1),
// chi = 1 closed core), or a quotient projective plane (GF2 (1,2,1),
// chi = 0, rational b2 = 0). Returns nothing when edge_cap < 6 or no witness
// is found; absence of a witness is not a certificate of asphericity.
std::optional<Bubble> find_small_bubble(const Complex& x, int edge_cap);

// Exhaustive oracle over all face subsets whose closure fits in edge_cap
// edges; only usable for tiny complexes.
std::optional<Bubble> find_small_bubble_oracle(const Complex& x, int edge_cap);

struct TorsionScreen {
  bool certified = false;   // nu_tilde > 1/3 certificate holds
  Rational nu_tilde;        // 0/1 stands in when the 1-skeleton is empty
  std::vector<int> dense_witness;  // vertex set attaining max density otherwise
};

// Certificate that every subcomplex has nu > 1/3, which rules out odd
// torsion in first homology of any subcomplex.
TorsionScreen odd_torsion_screen(const Complex& x);

}  // namespace cliquetop
