#pragma once

#include <stdexcept>
#include <vector>

#include "cliquetop/graph.hpp"
#include "cliquetop/rational.hpp"

namespace cliquetop {

struct EdgelessGraphError : std::invalid_argument {
  EdgelessGraphError() : std::invalid_argument("density undefined: graph has no edges") {}
};

struct DensitySolverResult {
  Rational max_density;        // max over nonempty subgraphs H of e(H)/v(H)
  std::vector<int> witness;    // ascending vertex set attaining max_density
  bool attained_by_whole = false;
};

// Exact maximum subgraph density via parametric min-cut: a guess a/b is
// feasible iff the cut network (source -> edge node, cap b; edge node ->
// endpoints, cap inf; vertex -> sink, cap a) has max-flow < b*m. Binary
// search over rational guesses narrows the interval below 1/n^2, which
// separates any two candidate densities with denominator <= n.
DensitySolverResult max_density_subgraph(const Graph& g);

// Oracle: enumerate all nonempty vertex subsets. Only for n <= 25.
DensitySolverResult brute_force_max_density(const Graph& g);

struct ComponentBalance {
  std::vector<int> vertices;
  bool has_edges = false;
  bool balanced = false;
  bool strictly_balanced = false;
};

struct BalanceReport {
  bool balanced = false;
  bool strictly_balanced = false;
  std::vector<ComponentBalance> components;  // per connected component
};

// A graph is density-balanced when the whole graph attains the maximum
// subgraph density, strictly so when every single-vertex deletion lowers it.
BalanceReport is_balanced(const Graph& g);

bool brute_force_balanced(const Graph& g, bool* strictly);

}  // namespace cliquetop
