#include "cliquetop/census.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cliquetop/cycles.hpp"
#include "cliquetop/homology.hpp"

namespace cliquetop {

namespace {

constexpr int kMaxV = 8;

struct Universe {
  std::vector<std::array<int, 3>> faces;       // all triples over 0..7, lex
  std::vector<std::array<int, 2>> edges;       // all pairs, lex
  int edge_id[kMaxV][kMaxV];
  int face_id[kMaxV][kMaxV][kMaxV];
  std::vector<std::array<int, 3>> face_edges;  // per face: its 3 edge ids
};

const Universe& universe() {
  static const Universe u = [] {
    Universe u;
    for (int a = 0; a < kMaxV; ++a)
      for (int b = a + 1; b < kMaxV; ++b) {
        u.edge_id[a][b] = static_cast<int>(u.edges.size());
        u.edges.push_back({a, b});
      }
    for (int a = 0; a < kMaxV; ++a)
      for (int b = a + 1; b < kMaxV; ++b)
        for (int c = b + 1; c < kMaxV; ++c) {
          u.face_id[a][b][c] = static_cast<int>(u.faces.size());
          u.faces.push_back({a, b, c});
          u.face_edges.push_back({u.edge_id[a][b], u.edge_id[a][c], u.edge_id[b][c]});
        }
    return u;
  }();
  return u;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Incremental column echelon mod a prime over the 28 possible edge rows.
// Columns are stored with pivot value 1. Independence mod p certifies
// rational independence; apparent dependence must be confirmed exactly.
struct Echelon {
  uint64_t prime = kRankPrimeA;
  std::vector<std::array<uint64_t, 28>> cols;
  std::vector<int> pivots;

  // Returns false when the column reduces to zero mod prime.
  bool add(std::array<uint64_t, 28> col) {
    for (size_t i = 0; i < cols.size(); ++i) {
      uint64_t x = col[static_cast<size_t>(pivots[i])];
      if (!x) continue;
      for (int r = 0; r < 28; ++r)
        col[static_cast<size_t>(r)] =
            (col[static_cast<size_t>(r)] + prime - mulmod(x, cols[i][static_cast<size_t>(r)], prime)) % prime;
    }
    int piv = -1;
    for (int r = 0; r < 28; ++r)
      if (col[static_cast<size_t>(r)]) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    uint64_t inv = powmod(col[static_cast<size_t>(piv)], prime - 2, prime);
    for (int r = 0; r < 28; ++r) col[static_cast<size_t>(r)] = mulmod(col[static_cast<size_t>(r)], inv, prime);
    cols.push_back(col);
    pivots.push_back(piv);
    return true;
  }
};

std::array<uint64_t, 28> boundary_column(int face, uint64_t prime) {
  const auto& u = universe();
  std::array<uint64_t, 28> col{};
  // d(a,b,c) = (b,c) - (a,c) + (a,b)
  col[static_cast<size_t>(u.face_edges[static_cast<size_t>(face)][2])] = 1;          // (b,c)... rows keyed by edge id
  col[static_cast<size_t>(u.face_edges[static_cast<size_t>(face)][1])] = prime - 1;  // (a,c)
  col[static_cast<size_t>(u.face_edges[static_cast<size_t>(face)][0])] = 1;          // (a,b)
  return col;
}

SparseIntMatrix face_matrix(const std::vector<int>& face_list) {
  const auto& u = universe();
  SparseIntMatrix m;
  m.rows = 28;
  m.cols = static_cast<long long>(face_list.size());
  for (size_t j = 0; j < face_list.size(); ++j) {
    const auto& fe = u.face_edges[static_cast<size_t>(face_list[j])];
    m.entries.emplace_back(fe[2], static_cast<long long>(j), +1);
    m.entries.emplace_back(fe[1], static_cast<long long>(j), -1);
    m.entries.emplace_back(fe[0], static_cast<long long>(j), +1);
  }
  return m;
}

struct SearchState {
  uint64_t mask = 0;
  uint64_t forbidden = 0;
  int vmax = -1;
  std::array<int8_t, 28> deg{};
  int edge_count = 0;
  Echelon ech;
  std::vector<int> face_list;
};

struct CensusDriver {
  int max_vertices;
  std::set<uint64_t> seen;  // canonical face masks
  std::vector<Complex> out;

  bool vertex_rule_ok(const std::array<int, 3>& f, int vmax) const {
    int over = 0;
    for (int v : f) {
      if (v >= max_vertices) return false;
      if (v > vmax) ++over;
    }
    if (over == 0) return true;
    if (over == 1) return f[2] == vmax + 1;
    if (over == 2) return f[1] == vmax + 1 && f[2] == vmax + 2;
    return vmax == -1;  // root face (0,1,2)
  }

  bool strongly_connected(const std::vector<int>& face_list) const {
    const auto& u = universe();
    std::vector<int> parent(face_list.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      return x;
    };
    std::array<int, 28> owner;
    owner.fill(-1);
    for (size_t i = 0; i < face_list.size(); ++i)
      for (int e : u.face_edges[static_cast<size_t>(face_list[i])]) {
        if (owner[static_cast<size_t>(e)] < 0)
          owner[static_cast<size_t>(e)] = static_cast<int>(i);
        else
          parent[static_cast<size_t>(find(static_cast<int>(i)))] = find(owner[static_cast<size_t>(e)]);
      }
    int root = find(0);
    for (size_t i = 0; i < face_list.size(); ++i)
      if (find(static_cast<int>(i)) != root) return false;
    return true;
  }

  uint64_t canonical_mask(const std::vector<int>& face_list, int v) const {
    const auto& u = universe();
    std::vector<int> perm(static_cast<size_t>(v));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
      uint64_t m = 0;
      for (int f : face_list) {
        std::array<int, 3> t = {perm[static_cast<size_t>(u.faces[static_cast<size_t>(f)][0])],
                                perm[static_cast<size_t>(u.faces[static_cast<size_t>(f)][1])],
                                perm[static_cast<size_t>(u.faces[static_cast<size_t>(f)][2])]};
        std::sort(t.begin(), t.end());
        m |= uint64_t{1} << u.face_id[t[0]][t[1]][t[2]];
      }
      best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  void record(const SearchState& s) {
    int v = s.vmax + 1;
    if (s.edge_count >= 3 * v) return;  // nu <= 1/3
    if (!strongly_connected(s.face_list)) return;
    if (!seen.insert(canonical_mask(s.face_list, v)).second) return;
    const auto& u = universe();
    std::vector<std::vector<int>> cells;
    for (int f : s.face_list)
      cells.push_back({u.faces[static_cast<size_t>(f)][0], u.faces[static_cast<size_t>(f)][1],
                       u.faces[static_cast<size_t>(f)][2]});
    out.push_back(Complex::from_cells(cells));
  }

  void rec(const SearchState& s) {
    const auto& u = universe();
    int deficient = -1;
    for (int e = 0; e < 28; ++e)
      if (s.deg[static_cast<size_t>(e)] == 1) {
        deficient = e;
        break;
      }
    if (deficient < 0 && s.mask) record(s);

    std::vector<int> cands;
    for (int f = 0; f < static_cast<int>(u.faces.size()); ++f) {
      if ((s.mask | s.forbidden) >> f & 1) continue;
      if (s.mask == 0 && f != u.face_id[0][1][2]) continue;
      if (!vertex_rule_ok(u.faces[static_cast<size_t>(f)], s.vmax)) continue;
      if (deficient >= 0) {
        const auto& fe = u.face_edges[static_cast<size_t>(f)];
        if (fe[0] != deficient && fe[1] != deficient && fe[2] != deficient) continue;
      }
      cands.push_back(f);
    }

    uint64_t forbid = 0;
    for (int f : cands) {
      SearchState child = s;
      child.forbidden |= forbid;
      forbid |= uint64_t{1} << f;
      child.mask |= uint64_t{1} << f;
      child.vmax = std::max(child.vmax, u.faces[static_cast<size_t>(f)][2]);
      for (int e : u.face_edges[static_cast<size_t>(f)])
        if (++child.deg[static_cast<size_t>(e)] == 1) ++child.edge_count;
      if (child.edge_count >= 3 * kMaxV) continue;
      child.face_list.push_back(f);
      if (!add_column(child, f)) continue;  // rational 2-cycle: prune
      rec(child);
    }
  }

  // True when the face's boundary column is rationally independent of the
  // state's columns. Dependence mod the prime is confirmed by elimination;
  // a confirmed-independent column restarts the echelon at the other prime.
  bool add_column(SearchState& s, int face) {
    if (s.ech.add(boundary_column(face, s.ech.prime))) return true;
    auto m = face_matrix(s.face_list);
    if (bareiss_rank(m) < m.cols) return false;
    uint64_t next = s.ech.prime == kRankPrimeA ? kRankPrimeB : kRankPrimeA;
    Echelon fresh;
    fresh.prime = next;
    for (int f : s.face_list)
      if (!fresh.add(boundary_column(f, next)))
        throw RankUncertainError("census echelon disagrees with elimination at both primes");
    s.ech = std::move(fresh);
    return true;
  }
};

}  // namespace

std::vector<Complex> census_closed_sc(int max_vertices) {
  if (max_vertices < 3 || max_vertices > kMaxV)
    throw std::invalid_argument("census supports 3..8 vertices");
  CensusDriver d;
  d.max_vertices = max_vertices;
  d.rec(SearchState{});
  return std::move(d.out);
}

namespace {

// Simple cycles of length 3..5: anchored at their smallest vertex, second
// vertex smaller than the last to drop the reflected copy.
std::vector<std::vector<int>> short_cycles(const Graph& g, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  auto dfs = [&](auto&& self, int anchor, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == anchor && static_cast<int>(path.size()) >= 3 && path[1] < path.back()) {
        out.push_back(path);
        continue;
      }
      if (w <= anchor || used[static_cast<size_t>(w)]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      used[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      self(self, anchor, w);
      path.pop_back();
      used[static_cast<size_t>(w)] = 0;
    }
  };
  for (int a = 0; a < g.vertex_count(); ++a) {
    path = {a};
    used.assign(used.size(), 0);
    used[static_cast<size_t>(a)] = 1;
    dfs(dfs, a, a);
  }
  return out;
}

}  // namespace

std::optional<Complex> search_quotient_cycle(int max_vertices) {
  for (const Complex& base : census_closed_sc(max_vertices)) {
    auto degs = base.edge_triangle_degrees();
    bool surface = true;
    for (int d : degs) surface = surface && d == 2;
    if (!surface) continue;
    auto b = betti(base, Field::GF2);
    if (b != std::vector<long long>{1, 1, 1}) continue;

    Graph g = base.one_skeleton();  // census labels are already 0..v-1
    int v = g.vertex_count();
    for (int y1 = 0; y1 < v; ++y1)
      for (int y2 = y1 + 1; y2 < v; ++y2) {
        if (g.has_edge(y1, y2)) continue;
        std::vector<std::vector<int>> cells;
        for (long long i = 0; i < base.count(2); ++i) {
          auto t = base.cell(2, i);
          std::vector<int> f;
          for (int x : t) f.push_back(x == y2 ? y1 : x);
          std::sort(f.begin(), f.end());
          cells.push_back(f);
        }
        Complex q = Complex::from_cells(cells);
        auto qdeg = q.edge_triangle_degrees();
        int maxdeg = 0;
        bool closed = q.count(1) > 0;
        for (int d : qdeg) {
          maxdeg = std::max(maxdeg, d);
          closed = closed && d >= 2;
        }
        if (!closed || maxdeg < 4) continue;
        if (q.strongly_connected_components(2).size() != 1) continue;
        if (betti(q, Field::GF2) != std::vector<long long>{1, 1, 1}) continue;
        if (betti(q, Field::Q) != std::vector<long long>{1, 0, 0}) continue;

        int apex = v;  // y2's label is now unused but a fresh one is simpler
        for (const auto& cyc : short_cycles(q.one_skeleton(), 5)) {
          const auto& labels = q.vertex_labels();
          std::vector<std::vector<int>> cone = cells;
          for (size_t i = 0; i < cyc.size(); ++i) {
            int a = labels[static_cast<size_t>(cyc[i])];
            int b2 = labels[static_cast<size_t>(cyc[(i + 1) % cyc.size()])];
            std::vector<int> f = {a, b2, apex};
            std::sort(f.begin(), f.end());
            cone.push_back(f);
          }
          auto mc = extract_minimal_cycle(Complex::from_cells(cone));
          if (!mc) continue;
          auto cls = classify_minimal_cycle(mc->support);
          if (cls.type == CycleType::quotient_p2_union_disc && cls.nu_hypothesis_ok &&
              cls.big_l >= -5 && cls.big_l <= -3)
            return mc->support;
        }
      }
  }
  return std::nullopt;
}

}  // namespace cliquetop
