#pragma once

#include <span>
#include <string>
#include <vector>

#include "cliquetop/complex.hpp"

namespace cliquetop {

struct CollapseStep {
  std::vector<int> free_face;  // face with exactly one coface at removal time
  std::vector<int> coface;
};

struct CollapseOutcome {
  std::vector<CollapseStep> steps;
  Complex residue;
  bool removed_all_top = false;  // residue has no cells of the phase's top dimension
};

// Removes (triangle, tetrahedron) pairs, lexicographically smallest free
// triangle first, until no tetrahedron remains or no triangle is free.
CollapseOutcome collapse_3_to_2(const Complex& x);  // pre: dimension <= 3

// Removes (edge, triangle) pairs the same way until no edge lies in exactly
// one triangle.
CollapseOutcome collapse_2_cascade(const Complex& x);  // pre: dimension <= 2

enum class ResidueKind { graph, closed_2_complex, mixed };
ResidueKind residue_kind(const Complex& residue);

struct FreenessCertificate {
  enum class Outcome {
    free_fundamental_group,  // residue is a graph
    obstructed_3_collapse,   // tetrahedra remain with no free triangle
    closed_residue,
    mixed_residue,
  };
  Outcome outcome;
  std::vector<CollapseStep> steps;  // phase 3 then phase 2
  Complex residue;
  long long free_rank = 0;  // cycle rank e - v + #components of a graph residue
};

// Collapses 3 -> 2 then cascades; certifies a free fundamental group exactly
// when the residue is a graph (collapses preserve homotopy type).
FreenessCertificate freeness_certificate(const Complex& x);  // pre: dimension <= 3

// One "COLLAPSE <free-face> <coface>" line per step.
std::string collapse_trace(std::span<const CollapseStep> steps);

// Complex after applying the first `count` steps (each removes its coface and
// free face); count = -1 applies all. Used to audit invariants step by step.
Complex apply_collapse_steps(const Complex& x, std::span<const CollapseStep> steps,
                             long long count = -1);

}  // namespace cliquetop
