#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cliquetop {

// Undirected simple graph on vertices 0..n-1 with bit-matrix adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    return (row_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  // Neighbors of v with index greater than v, ascending.
  std::vector<int> neighbors_above(int v) const;

  // Edges as (i, j) with i < j, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on `keep` (ascending vertex list); vertices are
  // relabeled 0..keep.size()-1 in list order.
  Graph induced(const std::vector<int>& keep) const;

  std::vector<std::vector<int>> components() const;

  // FNV-1a over n and the adjacency words; stable across platforms.
  std::uint64_t hash() const;

  const std::uint64_t* row_words(int v) const { return row_.data() + static_cast<size_t>(v) * words_; }
  int words_per_row() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> row_;
};

// Text format: first line "n m", then m lines "i j" with i < j,
// lexicographically sorted.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace cliquetop
