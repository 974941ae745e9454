#include "cliquetop/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cliquetop {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  row_.assign(static_cast<size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("Graph: self loop");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  if (has_edge(u, v)) return;
  row_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  row_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  row_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
  row_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
  --m_;
}

int Graph::degree(int v) const {
  const std::uint64_t* w = row_words(v);
  int d = 0;
  for (int k = 0; k < words_; ++k) d += std::popcount(w[k]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const std::uint64_t* w = row_words(v);
  for (int k = 0; k < words_; ++k) {
    std::uint64_t bits = w[k];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(k * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<int> Graph::neighbors_above(int v) const {
  std::vector<int> out;
  const std::uint64_t* w = row_words(v);
  int start_word = v >> 6;
  for (int k = start_word; k < words_; ++k) {
    std::uint64_t bits = w[k];
    if (k == start_word) bits &= ~((2ull << (v & 63)) - 1);  // strictly above v
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(k * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors_above(u)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph g(static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (has_edge(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : neighbors(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (std::uint64_t w : row_) mix(w);
  return h;
}

void write_graph(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
}

Graph read_graph(std::istream& is) {
  int n;
  long long m;
  if (!(is >> n >> m)) throw std::runtime_error("graph parse: missing header");
  Graph g(n);
  for (long long k = 0; k < m; ++k) {
    int u, v;
    if (!(is >> u >> v)) throw std::runtime_error("graph parse: truncated edge list");
    if (u >= v) throw std::runtime_error("graph parse: edge not in i<j form");
    g.add_edge(u, v);
  }
  if (g.edge_count() != m) throw std::runtime_error("graph parse: duplicate edges");
  return g;
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  write_graph(os, g);
}

Graph load_graph(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_graph(is);
}

}  // namespace cliquetop
