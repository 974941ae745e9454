#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquetop/density.hpp"
#include "cliquetop/graph.hpp"
#include "cliquetop/rational.hpp"

namespace cliquetop {

// Finite simplicial complex, dimension <= 5. Cells are stored per dimension
// as flattened, lexicographically sorted tuples of vertex labels. Labels are
// arbitrary non-negative ints so subcomplexes keep their parent's names.
class Complex {
 public:
  static constexpr int kMaxDim = 5;

  Complex();

  // Builds the downward closure of the given cells.
  static Complex from_cells(const std::vector<std::vector<int>>& cells);

  int dimension() const;  // -1 when empty
  long long count(int k) const;
  const std::vector<int>& flat(int k) const;
  std::span<const int> cell(int k, long long idx) const;
  long long index_of(int k, std::span<const int> verts) const;
  bool has_cell(std::span<const int> verts) const;
  bool has_cell(std::initializer_list<int> verts) const;

  long long vertex_count() const { return count(0); }
  long long edge_count() const { return count(1); }
  long long triangle_count() const { return count(2); }
  const std::vector<int>& vertex_labels() const { return flat(0); }

  // Position of a label in the sorted vertex list; -1 if absent.
  long long vertex_index(int label) const;

  // 1-skeleton on compact indices 0..v-1 (index = position in vertex list).
  Graph one_skeleton() const;

  // Number of triangles containing each edge, parallel to flat(1).
  std::vector<int> edge_triangle_degrees() const;

  Complex skeleton(int k) const;
  Complex pure_part(int k) const;

  // Components of the pure k-part under "share a (k-1)-face" adjacency.
  std::vector<Complex> strongly_connected_components(int k) const;

  // Downward closure of the selected k-cells.
  Complex closure_of_cells(int k, const std::vector<long long>& idxs) const;

  bool operator==(const Complex& o) const { return cells_ == o.cells_; }

 private:
  std::vector<std::vector<int>> cells_;  // cells_[k], stride k+1
  friend Complex clique_complex(const Graph&, int, bool*);
};

struct VertexLink {
  std::vector<int> labels;  // neighbor labels, ascending; graph vertex i = labels[i]
  Graph graph;
};
VertexLink vertex_link(const Complex& x, int label);

// Clique complex of g up to dimension dim_cap (cliques of <= dim_cap+1
// vertices). When clique_above_cap is non-null it is set if some clique of
// dim_cap+2 vertices exists (detected during enumeration, not enumerated).
Complex clique_complex(const Graph& g, int dim_cap, bool* clique_above_cap = nullptr);

// Every 3-clique of the 1-skeleton spans a triangle.
bool is_clean(const Complex& x);

struct DensityReport {
  long long v = 0, e = 0, f = 0;
  int dimension = -1;
  long long euler = 0;   // alternating sum over all stored dimensions
  long long euler2 = 0;  // v - e + f
  long long L = 0;       // 2e - 3f = sum over edges of (2 - triangle degree)
  std::optional<Rational> nu;        // v/e; empty when e = 0
  std::optional<Rational> nu_tilde;  // min over subcomplexes with an edge; empty = +infinity
  long long boundary_edge_count = 0;  // edges of triangle degree exactly 1
  bool closed = false;                // e > 0 and every edge in >= 2 triangles
  std::vector<int> dense_witness;     // labels of the skeleton's densest subgraph
};

// with_nu_tilde=false skips the flow solver (used in bulk identity checks).
DensityReport density_report(const Complex& x, bool with_nu_tilde = true);

// Text format: sections "vertices", "edges", "triangles", "tetrahedra";
// one cell per line, vertices ascending within a line, lines sorted.
void write_complex(std::ostream& os, const Complex& x);
Complex read_complex(std::istream& is);
void save_complex(const std::string& path, const Complex& x);
Complex load_complex(const std::string& path);

}  // namespace cliquetop
