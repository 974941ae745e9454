#include "cliquetop/complex.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cliquetop {

namespace {

// Lexicographic order on tuples of equal stride.
bool tuple_less(const int* a, const int* b, int stride) {
  return std::lexicographical_compare(a, a + stride, b, b + stride);
}

void sort_dedup(std::vector<int>& flat, int stride) {
  long long m = static_cast<long long>(flat.size()) / stride;
  std::vector<long long> order(m);
  for (long long i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](long long a, long long b) {
    return tuple_less(&flat[a * stride], &flat[b * stride], stride);
  });
  std::vector<int> out;
  out.reserve(flat.size());
  for (long long i = 0; i < m; ++i) {
    const int* t = &flat[order[i] * stride];
    if (!out.empty() && std::equal(t, t + stride, out.end() - stride)) continue;
    out.insert(out.end(), t, t + stride);
  }
  flat.swap(out);
}

}  // namespace

Complex::Complex() : cells_(kMaxDim + 1) {}

Complex Complex::from_cells(const std::vector<std::vector<int>>& cells) {
  Complex x;
  for (std::vector<int> c : cells) {
    if (c.empty() || static_cast<int>(c.size()) > kMaxDim + 1)
      throw std::invalid_argument("cell size out of range");
    std::sort(c.begin(), c.end());
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0) throw std::invalid_argument("negative vertex label");
      if (i > 0 && c[i] == c[i - 1])
        throw std::invalid_argument("repeated vertex label in a cell");
    }
    int s = static_cast<int>(c.size());
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
      int k = std::popcount(mask) - 1;
      auto& flat = x.cells_[k];
      for (int i = 0; i < s; ++i)
        if (mask & (1u << i)) flat.push_back(c[i]);
    }
  }
  for (int k = 0; k <= kMaxDim; ++k) sort_dedup(x.cells_[k], k + 1);
  return x;
}

int Complex::dimension() const {
  for (int k = kMaxDim; k >= 0; --k)
    if (!cells_[k].empty()) return k;
  return -1;
}

long long Complex::count(int k) const {
  if (k < 0 || k > kMaxDim) return 0;
  return static_cast<long long>(cells_[k].size()) / (k + 1);
}

const std::vector<int>& Complex::flat(int k) const {
  if (k < 0 || k > kMaxDim) throw std::out_of_range("dimension out of range");
  return cells_[k];
}

std::span<const int> Complex::cell(int k, long long idx) const {
  return {&cells_[k][idx * (k + 1)], static_cast<size_t>(k + 1)};
}

long long Complex::index_of(int k, std::span<const int> verts) const {
  if (k < 0 || k > kMaxDim || static_cast<int>(verts.size()) != k + 1) return -1;
  int stride = k + 1;
  long long lo = 0, hi = count(k);
  while (lo < hi) {
    long long mid = (lo + hi) / 2;
    if (tuple_less(&cells_[k][mid * stride], verts.data(), stride))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(k) && std::equal(verts.begin(), verts.end(), &cells_[k][lo * stride]))
    return lo;
  return -1;
}

bool Complex::has_cell(std::span<const int> verts) const {
  return index_of(static_cast<int>(verts.size()) - 1, verts) >= 0;
}

bool Complex::has_cell(std::initializer_list<int> verts) const {
  std::vector<int> v(verts);
  return has_cell(std::span<const int>(v));
}

long long Complex::vertex_index(int label) const {
  const auto& vs = cells_[0];
  auto it = std::lower_bound(vs.begin(), vs.end(), label);
  if (it == vs.end() || *it != label) return -1;
  return it - vs.begin();
}

Graph Complex::one_skeleton() const {
  Graph g(static_cast<int>(vertex_count()));
  const auto& es = cells_[1];
  for (size_t i = 0; i < es.size(); i += 2)
    g.add_edge(static_cast<int>(vertex_index(es[i])),
               static_cast<int>(vertex_index(es[i + 1])));
  return g;
}

std::vector<int> Complex::edge_triangle_degrees() const {
  std::vector<int> deg(count(1), 0);
  const auto& ts = cells_[2];
  for (size_t i = 0; i < ts.size(); i += 3) {
    int a = ts[i], b = ts[i + 1], c = ts[i + 2];
    int pairs[3][2] = {{a, b}, {a, c}, {b, c}};
    for (auto& p : pairs) {
      long long idx = index_of(1, std::span<const int>(p, 2));
      ++deg[idx];
    }
  }
  return deg;
}

Complex Complex::skeleton(int k) const {
  Complex x;
  for (int d = 0; d <= std::min(k, kMaxDim); ++d) x.cells_[d] = cells_[d];
  return x;
}

Complex Complex::pure_part(int k) const {
  std::vector<long long> idxs(count(k));
  for (long long i = 0; i < count(k); ++i) idxs[i] = i;
  return closure_of_cells(k, idxs);
}

Complex Complex::closure_of_cells(int k, const std::vector<long long>& idxs) const {
  std::vector<std::vector<int>> top;
  top.reserve(idxs.size());
  for (long long i : idxs) {
    auto c = cell(k, i);
    top.emplace_back(c.begin(), c.end());
  }
  return from_cells(top);
}

std::vector<Complex> Complex::strongly_connected_components(int k) const {
  long long m = count(k);
  std::vector<long long> parent(m);
  for (long long i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](long long a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // Group k-cells by each of their (k-1)-faces.
  std::map<std::vector<int>, long long> face_owner;
  for (long long i = 0; i < m; ++i) {
    auto c = cell(k, i);
    for (int drop = 0; drop <= k; ++drop) {
      std::vector<int> face;
      for (int j = 0; j <= k; ++j)
        if (j != drop) face.push_back(c[j]);
      auto [it, fresh] = face_owner.try_emplace(face, i);
      if (!fresh) {
        long long ra = find(it->second), rb = find(i);
        if (ra != rb) parent[rb] = ra;
      }
    }
  }
  std::map<long long, std::vector<long long>> groups;
  for (long long i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<Complex> out;
  for (auto& [root, members] : groups) out.push_back(closure_of_cells(k, members));
  return out;
}

VertexLink vertex_link(const Complex& x, int label) {
  VertexLink link;
  const auto& es = x.flat(1);
  for (size_t i = 0; i < es.size(); i += 2) {
    if (es[i] == label) link.labels.push_back(es[i + 1]);
    if (es[i + 1] == label) link.labels.push_back(es[i]);
  }
  std::sort(link.labels.begin(), link.labels.end());
  link.graph = Graph(static_cast<int>(link.labels.size()));
  auto pos = [&](int v) {
    return static_cast<int>(std::lower_bound(link.labels.begin(), link.labels.end(), v) -
                            link.labels.begin());
  };
  const auto& ts = x.flat(2);
  for (size_t i = 0; i < ts.size(); i += 3) {
    int a = ts[i], b = ts[i + 1], c = ts[i + 2];
    if (a == label) link.graph.add_edge(pos(b), pos(c));
    if (b == label) link.graph.add_edge(pos(a), pos(c));
    if (c == label) link.graph.add_edge(pos(a), pos(b));
  }
  return link;
}

Complex clique_complex(const Graph& g, int dim_cap, bool* clique_above_cap) {
  if (dim_cap < 1 || dim_cap > Complex::kMaxDim)
    throw std::invalid_argument("dim_cap must be in [1, 5]");
  Complex x;
  if (clique_above_cap) *clique_above_cap = false;
  int n = g.vertex_count();
  std::vector<int> cur;
  // DFS over cliques in lexicographic order; cands holds common neighbors
  // strictly above the last vertex of cur.
  auto extend = [&](auto&& self, const std::vector<int>& cands) -> void {
    int k = static_cast<int>(cur.size()) - 1;
    x.cells_[k].insert(x.cells_[k].end(), cur.begin(), cur.end());
    if (k == dim_cap) {
      if (clique_above_cap && !cands.empty()) *clique_above_cap = true;
      return;
    }
    for (size_t i = 0; i < cands.size(); ++i) {
      int c = cands[i];
      std::vector<int> next;
      for (size_t j = i + 1; j < cands.size(); ++j)
        if (g.has_edge(c, cands[j])) next.push_back(cands[j]);
      cur.push_back(c);
      self(self, next);
      cur.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    cur.push_back(v);
    extend(extend, g.neighbors_above(v));
    cur.pop_back();
  }
  return x;
}

bool is_clean(const Complex& x) {
  Graph g = x.one_skeleton();
  const auto& labels = x.vertex_labels();
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    auto na = g.neighbors_above(a);
    for (size_t i = 0; i < na.size(); ++i)
      for (size_t j = i + 1; j < na.size(); ++j) {
        int b = na[i], c = na[j];
        if (!g.has_edge(b, c)) continue;
        if (!x.has_cell({labels[a], labels[b], labels[c]})) return false;
      }
  }
  return true;
}

DensityReport density_report(const Complex& x, bool with_nu_tilde) {
  DensityReport r;
  r.v = x.vertex_count();
  r.e = x.edge_count();
  r.f = x.triangle_count();
  r.dimension = x.dimension();
  for (int k = 0; k <= Complex::kMaxDim; ++k)
    r.euler += (k % 2 == 0 ? 1 : -1) * x.count(k);
  r.euler2 = r.v - r.e + r.f;
  r.L = 2 * r.e - 3 * r.f;
  if (r.e > 0) r.nu = Rational(r.v, r.e);
  auto deg = x.edge_triangle_degrees();
  for (int d : deg)
    if (d == 1) ++r.boundary_edge_count;
  r.closed = r.e > 0 && std::all_of(deg.begin(), deg.end(), [](int d) { return d >= 2; });
  if (with_nu_tilde && r.e > 0) {
    auto sol = max_density_subgraph(x.one_skeleton());
    r.nu_tilde = Rational(sol.max_density.denominator(), sol.max_density.numerator());
    const auto& labels = x.vertex_labels();
    for (int w : sol.witness) r.dense_witness.push_back(labels[w]);
  }
  return r;
}

namespace {
const char* kSectionNames[4] = {"vertices", "edges", "triangles", "tetrahedra"};
}

void write_complex(std::ostream& os, const Complex& x) {
  if (x.dimension() > 3)
    throw std::invalid_argument("text format covers dimensions 0..3");
  for (int k = 0; k <= 3; ++k) {
    os << kSectionNames[k] << "\n";
    for (long long i = 0; i < x.count(k); ++i) {
      auto c = x.cell(k, i);
      for (int j = 0; j <= k; ++j) os << (j ? " " : "") << c[j];
      os << "\n";
    }
  }
}

Complex read_complex(std::istream& is) {
  std::vector<std::vector<int>> cells;
  std::string line;
  int section = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    bool header = false;
    for (int k = 0; k <= 3; ++k)
      if (line == kSectionNames[k]) {
        if (k != section + 1) throw std::runtime_error("complex sections out of order");
        section = k;
        header = true;
      }
    if (header) continue;
    if (section < 0) throw std::runtime_error("cell line before any section header");
    std::istringstream ls(line);
    std::vector<int> cell;
    int v;
    while (ls >> v) cell.push_back(v);
    if (!ls.eof()) throw std::runtime_error("malformed cell line: " + line);
    if (static_cast<int>(cell.size()) != section + 1)
      throw std::runtime_error("cell arity does not match section: " + line);
    cells.push_back(std::move(cell));
  }
  if (section < 0) throw std::runtime_error("missing complex sections");
  Complex x = Complex::from_cells(cells);
  // The closure of the listed cells must not introduce anything new.
  for (int k = 0; k <= 3; ++k) {
    long long listed = 0;
    for (const auto& c : cells)
      if (static_cast<int>(c.size()) == k + 1) ++listed;
    if (listed != x.count(k))
      throw std::runtime_error("complex file must list every face exactly once");
  }
  return x;
}

void save_complex(const std::string& path, const Complex& x) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  write_complex(os, x);
}

Complex load_complex(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_complex(is);
}

}  // namespace cliquetop
