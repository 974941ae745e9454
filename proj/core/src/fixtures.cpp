#include "cliquetop/fixtures.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "cliquetop/collapse.hpp"
#include "cliquetop/density.hpp"
#include "cliquetop/homology.hpp"

namespace cliquetop {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("fixture validation failed: " + what);
}

void require_counts(const Complex& x, long long v, long long e, long long f, const char* name) {
  require(x.count(0) == v && x.count(1) == e && x.count(2) == f,
          std::string(name) + ": cell counts");
}

void require_betti(const Complex& x, std::vector<long long> bq, std::vector<long long> b2,
                   const char* name) {
  require(betti(x, Field::Q) == bq, std::string(name) + ": rational betti");
  require(betti(x, Field::GF2) == b2, std::string(name) + ": GF2 betti");
}

bool link_is_single_cycle(const Complex& x, int label) {
  const Graph& g = vertex_link(x, label).graph;
  int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (int i = 0; i < n; ++i)
    if (g.degree(i) != 2) return false;
  return g.components().size() == 1;
}

void require_surface(const Complex& x, long long chi, const char* name) {
  require(x.dimension() == 2 && x.pure_part(2) == x, std::string(name) + ": not pure 2");
  for (int d : x.edge_triangle_degrees())
    require(d == 2, std::string(name) + ": edge degree != 2");
  for (int v : x.vertex_labels())
    require(link_is_single_cycle(x, v), std::string(name) + ": vertex link not a cycle");
  require(x.count(0) - x.count(1) + x.count(2) == chi, std::string(name) + ": euler");
  require(x.strongly_connected_components(2).size() == 1, std::string(name) + ": not connected");
}

void require_closed_pure(const Complex& x, const char* name) {
  require(x.dimension() == 2 && x.pure_part(2) == x, std::string(name) + ": not pure 2");
  for (int d : x.edge_triangle_degrees())
    require(d >= 2, std::string(name) + ": deficient edge");
}

Complex faces(std::vector<std::vector<int>> cells) { return Complex::from_cells(cells); }

}  // namespace

Complex sphere_tetra() {
  static const Complex x = [] {
    Complex c = faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    require_counts(c, 4, 6, 4, "sphere_tetra");
    require_surface(c, 2, "sphere_tetra");
    require_betti(c, {1, 0, 1}, {1, 0, 1}, "sphere_tetra");
    require(is_clean(c), "sphere_tetra: clean");
    return c;
  }();
  return x;
}

Complex sphere_bipyramid() {
  static const Complex x = [] {
    Complex c = faces({{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
    require_counts(c, 5, 9, 6, "sphere_bipyramid");
    require_surface(c, 2, "sphere_bipyramid");
    require_betti(c, {1, 0, 1}, {1, 0, 1}, "sphere_bipyramid");
    require(!is_clean(c), "sphere_bipyramid: equator triangle is an empty clique");
    return c;
  }();
  return x;
}

Complex sphere_octahedron() {
  static const Complex x = [] {
    // Antipodal pairs (0,3), (1,4), (2,5); one vertex from each pair.
    std::vector<std::vector<int>> cells;
    for (int a : {0, 3})
      for (int b : {1, 4})
        for (int c : {2, 5}) {
          std::vector<int> t = {a, b, c};
          std::sort(t.begin(), t.end());
          cells.push_back(t);
        }
    Complex c = faces(cells);
    require_counts(c, 6, 12, 8, "sphere_octahedron");
    require_surface(c, 2, "sphere_octahedron");
    require_betti(c, {1, 0, 1}, {1, 0, 1}, "sphere_octahedron");
    require(is_clean(c), "sphere_octahedron: clean");
    return c;
  }();
  return x;
}

Complex p2_six() {
  static const Complex x = [] {
    Complex c = faces({{0, 1, 3},
                       {0, 1, 5},
                       {0, 2, 3},
                       {0, 2, 4},
                       {0, 4, 5},
                       {1, 2, 4},
                       {1, 2, 5},
                       {1, 3, 4},
                       {2, 3, 5},
                       {3, 4, 5}});
    require_counts(c, 6, 15, 10, "p2_six");  // skeleton K6
    require_surface(c, 1, "p2_six");
    require_betti(c, {1, 0, 0}, {1, 1, 1}, "p2_six");
    require(!is_clean(c), "p2_six: K6 skeleton has empty triangles");
    return c;
  }();
  return x;
}

Complex p2_clean_11() {
  static const Complex x = [] {
    // Disc (apex 0 over pentagon 1..5) plus a Moebius band whose core is the
    // pentagon 6..10; p_j touches exactly c_(2j-1), c_(2j), c_(2j+1).
    auto p = [](int j) { return 1 + (j - 1 + 10) % 5; };
    auto cm = [](int m) { return 6 + (m - 1 + 10) % 5; };
    std::vector<std::vector<int>> cells;
    for (int j = 1; j <= 5; ++j) {
      cells.push_back({0, p(j), p(j + 1)});
      cells.push_back({p(j), p(j + 1), cm(2 * j + 1)});
    }
    for (int m = 1; m <= 5; ++m) {
      cells.push_back({cm(m), cm(m + 1), p(3 * m)});
      cells.push_back({cm(m), cm(m + 1), p(3 * m + 3)});
    }
    for (auto& t : cells) std::sort(t.begin(), t.end());
    Complex c = faces(cells);
    require_counts(c, 11, 30, 20, "p2_clean_11");
    require_surface(c, 1, "p2_clean_11");
    require_betti(c, {1, 0, 0}, {1, 1, 1}, "p2_clean_11");
    require(is_clean(c), "p2_clean_11: clean");
    require(max_density_subgraph(c.one_skeleton()).max_density == Rational(30, 11),
            "p2_clean_11: nu_tilde != 11/30");
    return c;
  }();
  return x;
}

Complex torus_csaszar() {
  static const Complex x = [] {
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < 7; ++i) {
      std::vector<int> a = {i, (i + 1) % 7, (i + 3) % 7};
      std::vector<int> b = {i, (i + 2) % 7, (i + 3) % 7};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      cells.push_back(a);
      cells.push_back(b);
    }
    Complex c = faces(cells);
    require_counts(c, 7, 21, 14, "torus_csaszar");  // skeleton K7
    require_surface(c, 0, "torus_csaszar");
    require_betti(c, {1, 2, 1}, {1, 2, 1}, "torus_csaszar");
    require(!is_clean(c), "torus_csaszar: K7 skeleton has empty triangles");
    return c;
  }();
  return x;
}

Complex torus_grid_clean() {
  static const Complex x = [] {
    auto v = [](int i, int j) { return 4 * ((i + 4) % 4) + (j + 4) % 4; };
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::vector<int> a = {v(i, j), v(i, j + 1), v(i + 1, j + 1)};
        std::vector<int> b = {v(i, j), v(i + 1, j), v(i + 1, j + 1)};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        cells.push_back(a);
        cells.push_back(b);
      }
    Complex c = faces(cells);
    require_counts(c, 16, 48, 32, "torus_grid_clean");
    require_surface(c, 0, "torus_grid_clean");
    require_betti(c, {1, 2, 1}, {1, 2, 1}, "torus_grid_clean");
    require(is_clean(c), "torus_grid_clean: clean");
    return c;
  }();
  return x;
}

Complex klein_grid() {
  static const Complex x = [] {
    // Rows 0..3 on labels 4j + i; row 4 wraps to row 0 with i reversed.
    auto v = [](int i, int j) {
      i = (i + 4) % 4;
      if (j == 4) return (4 - i) % 4;
      return 4 * j + i;
    };
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::vector<int> a = {v(i, j), v(i + 1, j), v(i + 1, j + 1)};
        std::vector<int> b = {v(i, j), v(i, j + 1), v(i + 1, j + 1)};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        cells.push_back(a);
        cells.push_back(b);
      }
    Complex c = faces(cells);
    require_counts(c, 16, 48, 32, "klein_grid");
    require_surface(c, 0, "klein_grid");
    require_betti(c, {1, 1, 0}, {1, 2, 1}, "klein_grid");  // non-orientable
    return c;
  }();
  return x;
}

Complex klein_clean() {
  static const Complex x = [] {
    Complex c = barycentric_subdivision(klein_grid());
    require_counts(c, 96, 288, 192, "klein_clean");
    require_surface(c, 0, "klein_clean");
    require_betti(c, {1, 1, 0}, {1, 2, 1}, "klein_clean");
    require(is_clean(c), "klein_clean: clean");
    return c;
  }();
  return x;
}

namespace {

// Connected sum of two 7-vertex tori: drop one face from each and glue the
// resulting boundary triangles.
Complex genus2_raw() {
  Complex t = torus_csaszar();
  std::vector<std::vector<int>> cells;
  for (long long i = 0; i < t.count(2); ++i) {
    auto f = t.cell(2, i);
    std::vector<int> a(f.begin(), f.end());
    if (a == std::vector<int>{0, 1, 3}) continue;
    cells.push_back(a);
  }
  auto glue = [](int x) {
    if (x == 7) return 0;
    if (x == 8) return 1;
    if (x == 10) return 3;
    return x;
  };
  for (long long i = 0; i < t.count(2); ++i) {
    auto f = t.cell(2, i);
    std::vector<int> a = {f[0] + 7, f[1] + 7, f[2] + 7};
    if (a == std::vector<int>{7, 8, 10}) continue;
    for (int& v : a) v = glue(v);
    std::sort(a.begin(), a.end());
    cells.push_back(a);
  }
  Complex c = Complex::from_cells(cells);
  require_counts(c, 11, 39, 26, "genus2_raw");
  require_surface(c, -2, "genus2_raw");
  require_betti(c, {1, 4, 1}, {1, 4, 1}, "genus2_raw");
  return c;
}

}  // namespace

Complex genus2_clean() {
  static const Complex x = [] {
    Complex c = barycentric_subdivision(genus2_raw());
    require_counts(c, 76, 234, 156, "genus2_clean");
    require_surface(c, -2, "genus2_clean");
    require_betti(c, {1, 4, 1}, {1, 4, 1}, "genus2_clean");
    require(is_clean(c), "genus2_clean: clean");
    return c;
  }();
  return x;
}

Complex annulus_band() {
  static const Complex x = [] {
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < 4; ++i) {
      std::vector<int> a = {i, (i + 1) % 4, 4 + i};
      std::vector<int> b = {(i + 1) % 4, 4 + i, 4 + (i + 1) % 4};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      cells.push_back(a);
      cells.push_back(b);
    }
    Complex c = faces(cells);
    require_counts(c, 8, 16, 8, "annulus_band");
    require_betti(c, {1, 1, 0}, {1, 1, 0}, "annulus_band");
    int deficient = 0;
    for (int d : c.edge_triangle_degrees()) deficient += d == 1;
    require(deficient == 8, "annulus_band: two boundary squares");
    require(is_clean(c), "annulus_band: clean");
    return c;
  }();
  return x;
}

Complex p2_union_disc_rim3() {
  static const Complex x = [] {
    // (0,1,4) is an empty triangle of p2_six and essential in it.
    Complex c = cone_over_cycle(p2_six(), {0, 1, 4}, 6);
    require_counts(c, 7, 18, 13, "p2_union_disc_rim3");
    require_closed_pure(c, "p2_union_disc_rim3");
    require_betti(c, {1, 0, 1}, {1, 0, 1}, "p2_union_disc_rim3");
    require(2 * c.count(1) - 3 * c.count(2) == -3, "p2_union_disc_rim3: L");
    return c;
  }();
  return x;
}

Complex p2_union_disc_rim5() {
  static const Complex x = [] {
    // The outer pentagon is the Moebius core of p2_clean_11, so it is
    // essential; the inner pentagon bounds the apex disc and would not do.
    Complex c = cone_over_cycle(p2_clean_11(), {6, 7, 8, 9, 10}, 11);
    require_counts(c, 12, 35, 25, "p2_union_disc_rim5");
    require_closed_pure(c, "p2_union_disc_rim5");
    require_betti(c, {1, 0, 1}, {1, 0, 1}, "p2_union_disc_rim5");
    require(2 * c.count(1) - 3 * c.count(2) == -5, "p2_union_disc_rim5: L");
    return c;
  }();
  return x;
}

Complex sphere_pinched() {
  static const Complex x = [] {
    // Identify a vertex of the subdivided tetrahedron boundary with the
    // barycenter of the opposite face; the two share no neighbor, so no
    // cells merge and the quotient is a sphere with two points identified.
    Complex s = barycentric_subdivision(sphere_tetra());
    Complex c = identify_vertices(s, 0, 4 + 6 + 3);  // vertex 0, face (1,2,3)
    require_counts(c, 13, 36, 24, "sphere_pinched");
    require_closed_pure(c, "sphere_pinched");
    require_betti(c, {1, 1, 1}, {1, 1, 1}, "sphere_pinched");
    return c;
  }();
  return x;
}

Complex p2_pinched() {
  static const Complex x = [] {
    // Vertex 4 and the barycenter of face (0,1,3) share no neighbor.
    Complex s = barycentric_subdivision(p2_six());
    Complex c = identify_vertices(s, 4, 6 + 15 + 0);
    require_counts(c, 30, 90, 60, "p2_pinched");
    require_closed_pure(c, "p2_pinched");
    require_betti(c, {1, 1, 0}, {1, 2, 1}, "p2_pinched");
    return c;
  }();
  return x;
}

Complex p_prime() {
  static const Complex x = [] {
    // Barycenters of faces (0,1,3) and (0,2,4) share exactly the neighbor 0,
    // so the quotient merges one edge pair and no faces: a projective plane
    // with two adjacent edges identified. v and e drop by one, f stays.
    Complex s = barycentric_subdivision(p2_six());
    Complex c = identify_vertices(s, 6 + 15 + 0, 6 + 15 + 3);
    require_counts(c, 30, 89, 60, "p_prime");
    require_closed_pure(c, "p_prime");
    require_betti(c, {1, 0, 0}, {1, 1, 1}, "p_prime");
    int maxdeg = 0;
    for (int d : c.edge_triangle_degrees()) maxdeg = std::max(maxdeg, d);
    require(maxdeg == 4, "p_prime: identified edge degree");
    return c;
  }();
  return x;
}

Complex quotient_cycle_small() {
  static const Complex x = [] {
    // Output of search_quotient_cycle(8), frozen: the three faces through
    // vertex 8 are a disc over the essential triangle 0-1-4; the rest is a
    // closed 7-vertex projective plane with one edge pair identified (edge
    // (0,3) has triangle degree 4).
    Complex c = Complex::from_cells({
        {0, 1, 2}, {0, 1, 3}, {0, 1, 8}, {0, 2, 3}, {0, 3, 4}, {0, 3, 6},
        {0, 4, 6}, {0, 4, 8}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 4, 8},
        {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5},
    });
    require_counts(c, 8, 23, 17, "quotient_cycle_small");
    require_betti(c, {1, 0, 1}, {1, 0, 1}, "quotient_cycle_small");
    require(2 * c.count(1) - 3 * c.count(2) == -5, "quotient_cycle_small: L");
    return c;
  }();
  return x;
}

namespace {

// Square boundary 0-1-2-3 for every r; r = 0 uses the diagonal (1,3).
Complex disc_square(int r) {
  std::vector<std::vector<int>> cells;
  if (r == 0) {
    cells = {{0, 1, 3}, {1, 2, 3}};
  } else {
    auto u = [](int i) { return 3 + i; };
    cells.push_back({0, 1, u(1)});
    cells.push_back({0, 3, u(1)});
    for (int i = 1; i < r; ++i) {
      cells.push_back({1, u(i), u(i + 1)});
      cells.push_back({3, u(i), u(i + 1)});
    }
    cells.push_back({1, 2, u(r)});
    cells.push_back({2, 3, u(r)});
    for (auto& t : cells) std::sort(t.begin(), t.end());
  }
  return Complex::from_cells(cells);
}

}  // namespace

Complex generate_disc(int r) {
  if (r < 0) throw std::invalid_argument("disc size must be >= 0");
  Complex c = disc_square(r);
  require_counts(c, r + 4, 3 * r + 5, 2 * r + 2, "generate_disc");
  require_betti(c, {1, 0, 0}, {1, 0, 0}, "generate_disc");
  require(is_clean(c), "generate_disc: clean");
  int deficient = 0;
  for (int d : c.edge_triangle_degrees()) deficient += d == 1;
  require(deficient == 4, "generate_disc: boundary");
  auto cert = freeness_certificate(c);
  require(cert.outcome == FreenessCertificate::Outcome::free_fundamental_group &&
              cert.free_rank == 0,
          "generate_disc: not collapsible to a tree");
  return c;
}

Complex generate_surface(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::sphere: return sphere_tetra();
    case SurfaceKind::torus: return torus_grid_clean();
    case SurfaceKind::projective_plane: return p2_clean_11();
    case SurfaceKind::klein: return klein_clean();
    case SurfaceKind::genus2: return genus2_clean();
  }
  throw std::invalid_argument("unknown surface kind");
}

namespace {

struct Surgery {
  int a, b;    // removed edge: original vertex a, face barycenter b
  int c1, c2;  // edge barycenters completing the two removed faces
};

Surgery surgery_site(const Complex& base) {
  // Labels in genus2_clean: 0..10 original vertices, 11..49 edge
  // barycenters, 50..75 face barycenters. Removing a (vertex, face) edge
  // leaves c1, c2 with no common neighbor besides a and b, which keeps the
  // complex clean after the disc is glued.
  for (long long i = 0; i < base.count(1); ++i) {
    auto e = base.cell(1, i);
    if (e[0] < 11 && e[1] >= 50) {
      Surgery s;
      s.a = e[0];
      s.b = e[1];
      std::vector<int> third;
      for (long long t = 0; t < base.count(2); ++t) {
        auto f = base.cell(2, t);
        bool has_a = false, has_b = false;
        int other = -1;
        for (int v : f) {
          if (v == s.a) has_a = true;
          else if (v == s.b) has_b = true;
          else other = v;
        }
        if (has_a && has_b) third.push_back(other);
      }
      if (third.size() != 2) throw std::logic_error("surgery site: edge degree != 2");
      s.c1 = std::min(third[0], third[1]);
      s.c2 = std::max(third[0], third[1]);
      return s;
    }
  }
  throw std::logic_error("surgery site: no (vertex, face) edge found");
}

}  // namespace

Complex generate_unbalanced_clean_surface(int r) {
  if (r < 0) throw std::invalid_argument("disc size must be >= 0");
  Complex base = genus2_clean();
  Surgery s = surgery_site(base);

  std::vector<std::vector<int>> cells;
  for (long long i = 0; i < base.count(2); ++i) {
    auto f = base.cell(2, i);
    bool has_a = false, has_b = false;
    for (int v : f) {
      has_a = has_a || v == s.a;
      has_b = has_b || v == s.b;
    }
    if (has_a && has_b) continue;
    cells.emplace_back(f.begin(), f.end());
  }
  // Disc boundary square 0-1-2-3 glues onto the hole cycle a-c1-b-c2.
  Complex disc = disc_square(r);
  auto relabel = [&](int v) {
    switch (v) {
      case 0: return s.a;
      case 1: return s.c1;
      case 2: return s.b;
      case 3: return s.c2;
      default: return 76 + (v - 4);
    }
  };
  for (long long i = 0; i < disc.count(2); ++i) {
    auto f = disc.cell(2, i);
    std::vector<int> t = {relabel(f[0]), relabel(f[1]), relabel(f[2])};
    std::sort(t.begin(), t.end());
    cells.push_back(t);
  }
  Complex c = Complex::from_cells(cells);
  require_counts(c, 76 + r, 234 + 3 * r, 156 + 2 * r, "generate_unbalanced_clean_surface");
  require_surface(c, -2, "generate_unbalanced_clean_surface");
  require_betti(c, {1, 4, 1}, {1, 4, 1}, "generate_unbalanced_clean_surface");
  require(is_clean(c), "generate_unbalanced_clean_surface: clean");
  return c;
}

int unbalanced_crossover_r() {
  static const int r = [] {
    for (int k = 0;; ++k) {
      Complex c = generate_unbalanced_clean_surface(k);
      if (!max_density_subgraph(c.one_skeleton()).attained_by_whole) return k;
      if (k > 200) throw std::logic_error("unbalanced crossover not found by r = 200");
    }
  }();
  return r;
}

Complex barycentric_subdivision(const Complex& x) {
  if (x.dimension() > 2)
    throw std::invalid_argument("barycentric subdivision implemented for dimension <= 2");
  long long V = x.count(0), E = x.count(1);
  auto vlabel = [&](int orig) { return static_cast<int>(x.vertex_index(orig)); };
  std::vector<std::vector<int>> cells;
  std::vector<int> edge_in_face(static_cast<size_t>(E), 0);
  for (long long f = 0; f < x.count(2); ++f) {
    auto t = x.cell(2, f);
    int flab = static_cast<int>(V + E + f);
    std::array<std::array<int, 2>, 3> edges = {{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
    for (auto [p, q] : edges) {
      long long e = x.index_of(1, std::array<int, 2>{p, q});
      edge_in_face[static_cast<size_t>(e)] = 1;
      int elab = static_cast<int>(V + e);
      std::vector<int> c1 = {vlabel(p), elab, flab};
      std::vector<int> c2 = {vlabel(q), elab, flab};
      std::sort(c1.begin(), c1.end());
      std::sort(c2.begin(), c2.end());
      cells.push_back(c1);
      cells.push_back(c2);
    }
  }
  std::vector<int> vert_in_edge(static_cast<size_t>(V), 0);
  for (long long e = 0; e < E; ++e) {
    auto ev = x.cell(1, e);
    vert_in_edge[static_cast<size_t>(x.vertex_index(ev[0]))] = 1;
    vert_in_edge[static_cast<size_t>(x.vertex_index(ev[1]))] = 1;
    if (edge_in_face[static_cast<size_t>(e)]) continue;
    int elab = static_cast<int>(V + e);
    cells.push_back({std::min(vlabel(ev[0]), elab), std::max(vlabel(ev[0]), elab)});
    cells.push_back({std::min(vlabel(ev[1]), elab), std::max(vlabel(ev[1]), elab)});
  }
  for (long long v = 0; v < V; ++v)
    if (!vert_in_edge[static_cast<size_t>(v)]) cells.push_back({static_cast<int>(v)});
  return Complex::from_cells(cells);
}

Complex identify_vertices(const Complex& x, int keep, int drop) {
  if (keep == drop || x.vertex_index(keep) < 0 || x.vertex_index(drop) < 0)
    throw std::invalid_argument("identify_vertices: bad labels");
  std::vector<std::vector<int>> cells;
  for (int k = 0; k <= x.dimension(); ++k)
    for (long long i = 0; i < x.count(k); ++i) {
      auto cell = x.cell(k, i);
      std::vector<int> c;
      for (int v : cell) c.push_back(v == drop ? keep : v);
      std::sort(c.begin(), c.end());
      if (std::adjacent_find(c.begin(), c.end()) != c.end())
        throw std::invalid_argument("identify_vertices: labels span a cell");
      cells.push_back(c);
    }
  return Complex::from_cells(cells);
}

Complex cone_over_cycle(const Complex& x, const std::vector<int>& cycle, int apex) {
  if (cycle.size() < 3) throw std::invalid_argument("cone: cycle length < 3");
  if (x.vertex_index(apex) >= 0) throw std::invalid_argument("cone: apex label in use");
  if (std::set<int>(cycle.begin(), cycle.end()).size() != cycle.size())
    throw std::invalid_argument("cone: repeated cycle vertex");
  std::vector<std::vector<int>> cells;
  for (int k = 0; k <= x.dimension(); ++k)
    for (long long i = 0; i < x.count(k); ++i) {
      auto cell = x.cell(k, i);
      cells.emplace_back(cell.begin(), cell.end());
    }
  for (size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    if (!x.has_cell({std::min(a, b), std::max(a, b)}))
      throw std::invalid_argument("cone: consecutive cycle vertices not adjacent");
    std::vector<int> t = {a, b, apex};
    std::sort(t.begin(), t.end());
    cells.push_back(t);
  }
  return Complex::from_cells(cells);
}

}  // namespace cliquetop
