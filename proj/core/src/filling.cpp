#include "cliquetop/filling.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "cliquetop/homology.hpp"

namespace cliquetop {

namespace {

using Word = std::vector<int>;

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : w) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

Word canonical_rotation(const Word& w) {
  if (w.size() <= 1) return w;
  Word best = w, rot = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

// Apexes of each edge and a face membership test on labels.
struct FaceIndex {
  const Complex& x;
  std::vector<std::vector<int>> apexes;  // parallel to flat(1)

  explicit FaceIndex(const Complex& c) : x(c) {
    apexes.resize(static_cast<size_t>(c.count(1)));
    for (long long f = 0; f < c.count(2); ++f) {
      auto t = c.cell(2, f);
      apexes[idx(t[0], t[1])].push_back(t[2]);
      apexes[idx(t[0], t[2])].push_back(t[1]);
      apexes[idx(t[1], t[2])].push_back(t[0]);
    }
  }
  size_t idx(int u, int v) const {
    std::array<int, 2> e = {std::min(u, v), std::max(u, v)};
    long long i = x.index_of(1, e);
    if (i < 0) throw std::logic_error("filling: missing edge");
    return static_cast<size_t>(i);
  }
  const std::vector<int>& apexes_of(int u, int v) const { return apexes[idx(u, v)]; }
  bool face_exists(int a, int b, int c) const {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    return x.has_cell(t);
  }
};

// Column echelon of the GF2 triangle boundary; answers membership in the
// boundary space (the necessary condition for any filling to exist).
struct NullHomologyTester {
  long long rows = 0;
  std::vector<std::vector<uint64_t>> basis;
  std::vector<int> pivots;

  explicit NullHomologyTester(const Complex& x) {
    Gf2Matrix m = boundary_matrix_gf2(x, 2);
    rows = m.rows;
    for (auto& col : m.cols) add(col);
  }
  static int lowest_bit(const std::vector<uint64_t>& v) {
    for (size_t w = 0; w < v.size(); ++w)
      if (v[w]) return static_cast<int>((w << 6) + std::countr_zero(v[w]));
    return -1;
  }
  void reduce(std::vector<uint64_t>& z) const {
    for (size_t b = 0; b < basis.size(); ++b) {
      int p = pivots[b];
      if ((z[static_cast<size_t>(p) >> 6] >> (p & 63)) & 1)
        for (size_t w = 0; w < z.size(); ++w) z[w] ^= basis[b][w];
    }
  }
  void add(std::vector<uint64_t> col) {
    reduce(col);
    int p = lowest_bit(col);
    if (p < 0) return;
    basis.push_back(std::move(col));
    pivots.push_back(p);
  }
  bool in_span(const Complex& x, const Word& loop) const {
    std::vector<uint64_t> z((static_cast<size_t>(rows) + 63) / 64, 0);
    for (size_t i = 0; i < loop.size(); ++i) {
      int a = loop[i], b = loop[(i + 1) % loop.size()];
      std::array<int, 2> e = {std::min(a, b), std::max(a, b)};
      long long r = x.index_of(1, e);
      z[static_cast<size_t>(r) >> 6] ^= uint64_t{1} << (r & 63);
    }
    reduce(z);
    return lowest_bit(z) < 0;
  }
};

std::vector<int> sorted_face(int a, int b, int c) {
  std::array<int, 3> t = {a, b, c};
  std::sort(t.begin(), t.end());
  return {t[0], t[1], t[2]};
}

}  // namespace

void validate_loop(const Complex& x, const std::vector<int>& loop) {
  if (loop.size() < 3) throw std::invalid_argument("loop must have length >= 3");
  for (size_t i = 0; i < loop.size(); ++i) {
    int a = loop[i], b = loop[(i + 1) % loop.size()];
    if (a == b) throw std::invalid_argument("loop repeats a vertex consecutively");
    if (!x.has_cell({std::min(a, b), std::max(a, b)}))
      throw std::invalid_argument("consecutive loop vertices not adjacent");
  }
}

FillingResult filling_area(const Complex& x, const std::vector<int>& loop,
                           const FillingLimits& lim) {
  validate_loop(x, loop);
  FillingResult out;
  NullHomologyTester nh(x);
  if (!nh.in_span(x, loop)) {
    out.null_homologous = false;
    return out;
  }
  FaceIndex fi(x);
  size_t max_len = loop.size() + static_cast<size_t>(std::max(0, lim.extra_length));

  struct Prev {
    Word word;
    std::vector<int> face;  // empty for spur moves
  };
  std::unordered_map<Word, long long, WordHash> dist;
  std::unordered_map<Word, Prev, WordHash> pred;
  std::deque<std::pair<long long, Word>> dq;

  Word start = canonical_rotation(loop);
  dist[start] = 0;
  dq.push_back({0, start});
  bool done = false;

  auto relax = [&](const Word& from, Word to, long long nd, std::vector<int> face) {
    to = canonical_rotation(to);
    auto it = dist.find(to);
    if (it != dist.end() && it->second <= nd) return;
    bool free_move = face.empty();
    dist[to] = nd;
    pred[to] = {from, std::move(face)};
    if (free_move) {
      dq.push_front({nd, to});
    } else {
      dq.push_back({nd, to});
    }
  };

  while (!dq.empty() && !done) {
    auto [d, w] = dq.front();
    dq.pop_front();
    auto it = dist.find(w);
    if (it == dist.end() || it->second != d) continue;  // stale entry
    ++out.states;
    if (out.states > lim.max_states || d > lim.max_area) return out;
    if (w.empty()) {
      out.area = d;
      done = true;
      break;
    }
    size_t L = w.size();
    for (size_t i = 0; i < L; ++i) {  // spur: w[i-1] == w[i+1], drop i and i+1
      if (w[(i + L - 1) % L] != w[(i + 1) % L]) continue;
      Word nw;
      nw.reserve(L - 2);
      for (size_t j = 0; j < L; ++j)
        if (j != i && j != (i + 1) % L) nw.push_back(w[j]);
      relax(w, std::move(nw), d, {});
    }
    if (L >= 3)
      for (size_t i = 0; i < L; ++i) {  // contract a b c -> a c
        int a = w[(i + L - 1) % L], b = w[i], c = w[(i + 1) % L];
        if (a == c || !fi.face_exists(a, b, c)) continue;
        Word nw;
        nw.reserve(L - 1);
        for (size_t j = 0; j < L; ++j)
          if (j != i) nw.push_back(w[j]);
        relax(w, std::move(nw), d + 1, sorted_face(a, b, c));
      }
    if (L + 1 <= max_len)
      for (size_t i = 0; i < L; ++i) {  // expand a c -> a b c
        int a = w[i], c = w[(i + 1) % L];
        for (int b : fi.apexes_of(a, c)) {
          Word nw;
          nw.reserve(L + 1);
          for (size_t j = 0; j <= i; ++j) nw.push_back(w[j]);
          nw.push_back(b);
          for (size_t j = i + 1; j < L; ++j) nw.push_back(w[j]);
          relax(w, std::move(nw), d + 1, sorted_face(a, b, c));
        }
      }
  }
  if (!done) return out;
  out.filled = true;
  Word cur;  // empty goal word
  while (cur != start) {
    const Prev& pr = pred.at(cur);
    if (!pr.face.empty()) out.disc.push_back(pr.face);
    cur = pr.word;
  }
  std::reverse(out.disc.begin(), out.disc.end());
  return out;
}

namespace {

std::optional<long long> min_opt(std::optional<long long> a, std::optional<long long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Minimum triangles over singular disc diagrams filling `poly`, at most
// `budget`. The triangle covering the edge (p0, p1) has some apex x with
// {p0, p1, x} a face: treating x as interior grows the polygon, and every
// boundary position sharing x's label admits a pinch into two sub-diagrams.
std::optional<long long> oracle_rec(const FaceIndex& fi, const Word& poly, long long budget) {
  size_t L = poly.size();
  if (L == 0 || L == 2) return 0;  // a 2-gon folds its edges together
  std::optional<long long> best;
  for (size_t i = 0; i < L; ++i) {  // free spur folds
    if (poly[(i + L - 1) % L] != poly[(i + 1) % L]) continue;
    Word nw;
    nw.reserve(L - 2);
    for (size_t j = 0; j < L; ++j)
      if (j != i && j != (i + 1) % L) nw.push_back(poly[j]);
    best = min_opt(best, oracle_rec(fi, nw, budget));
  }
  if (budget <= 0) return best;
  for (int apex : fi.apexes_of(poly[0], poly[1])) {
    Word grown(poly.begin() + 1, poly.end());
    grown.push_back(poly[0]);
    grown.push_back(apex);
    if (auto sub = oracle_rec(fi, grown, budget - 1)) best = min_opt(best, 1 + *sub);
    for (size_t j = 2; j < L; ++j) {
      if (poly[j] != apex) continue;
      Word p1(poly.begin() + 1, poly.begin() + static_cast<long>(j) + 1);
      Word p2(poly.begin() + static_cast<long>(j), poly.end());
      p2.push_back(poly[0]);
      if (auto a1 = oracle_rec(fi, p1, budget - 1))
        if (auto a2 = oracle_rec(fi, p2, budget - 1 - *a1))
          best = min_opt(best, 1 + *a1 + *a2);
    }
  }
  return best;
}

}  // namespace

std::optional<long long> filling_area_oracle(const Complex& x, const std::vector<int>& loop,
                                             long long max_area) {
  validate_loop(x, loop);
  FaceIndex fi(x);
  return oracle_rec(fi, loop, max_area);
}

IsoperimetricScan restricted_isoperimetric_ratio(const Complex& x, int max_len,
                                                 const FillingLimits& lim) {
  IsoperimetricScan scan;
  if (max_len < 3 || x.count(1) == 0) return scan;
  Graph skel = x.one_skeleton();
  const std::vector<int>& labels = x.vertex_labels();
  NullHomologyTester nh(x);

  auto handle = [&](const Word& idx_word) {
    Word rev(idx_word.rbegin(), idx_word.rend());
    if (canonical_rotation(rev) < idx_word) return;  // reflection twin comes first
    ++scan.loops_scanned;
    Word loop;
    loop.reserve(idx_word.size());
    for (int i : idx_word) loop.push_back(labels[static_cast<size_t>(i)]);
    if (!nh.in_span(x, loop)) {
      ++scan.non_null;
      return;
    }
    FillingResult fr = filling_area(x, loop, lim);
    if (!fr.filled) {
      ++scan.unfilled_within;
      return;
    }
    Rational ratio(static_cast<long long>(loop.size()), fr.area);
    if (!scan.min_ratio || ratio < *scan.min_ratio) {
      scan.min_ratio = ratio;
      scan.witness = IsoperimetricLoop{loop, fr.area};
    }
  };

  std::vector<int> path;
  std::function<void()> extend = [&]() {
    int last = path.back();
    int anchor = path[0];
    size_t L = path.size();
    if (L >= 3 && skel.has_edge(last, anchor) && path[L - 2] != anchor && path[1] != last) {
      // Starting at the minimum index makes `path` its own canonical
      // rotation candidate; emit only the rotation minimum.
      if (canonical_rotation(path) == path) handle(path);
    }
    if (static_cast<int>(L) == max_len) return;
    for (int w : skel.neighbors(last)) {
      if (w < anchor) continue;
      if (L >= 2 && w == path[L - 2]) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  };
  for (int v = 0; v < skel.vertex_count(); ++v) {
    path = {v};
    extend();
  }
  return scan;
}

bool filling_boundary_matches(const Complex& x, const std::vector<int>& loop,
                              const std::vector<std::vector<int>>& disc) {
  std::map<std::pair<int, int>, int> toggles;
  auto flip = [&](int a, int b) { toggles[{std::min(a, b), std::max(a, b)}] ^= 1; };
  for (size_t i = 0; i < loop.size(); ++i) flip(loop[i], loop[(i + 1) % loop.size()]);
  for (const auto& f : disc) {
    if (f.size() != 3 || !x.has_cell({f[0], f[1], f[2]})) return false;
    flip(f[0], f[1]);
    flip(f[0], f[2]);
    flip(f[1], f[2]);
  }
  for (const auto& [edge, parity] : toggles)
    if (parity) return false;
  return true;
}

}  // namespace cliquetop
