#include "cliquetop/cycles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "cliquetop/density.hpp"
#include "cliquetop/homology.hpp"

namespace cliquetop {

namespace {

// Triangle boundary columns of a pure 2-complex, rows indexed by its edges.
struct FaceSystem {
  long long edge_rows = 0;
  std::vector<std::array<long long, 3>> rows;  // per face: edge indices
  static constexpr int kSigns[3] = {+1, -1, +1};  // drop a, b, c of (a,b,c)
};

FaceSystem face_system(const Complex& p) {
  FaceSystem fs;
  fs.edge_rows = p.count(1);
  fs.rows.reserve(static_cast<size_t>(p.count(2)));
  for (long long i = 0; i < p.count(2); ++i) {
    auto t = p.cell(2, i);
    int a = t[0], b = t[1], c = t[2];
    fs.rows.push_back({p.index_of(1, std::array<int, 2>{b, c}),
                       p.index_of(1, std::array<int, 2>{a, c}),
                       p.index_of(1, std::array<int, 2>{a, b})});
  }
  return fs;
}

SparseIntMatrix submatrix(const FaceSystem& fs, const std::vector<long long>& cols) {
  SparseIntMatrix m;
  m.rows = fs.edge_rows;
  m.cols = static_cast<long long>(cols.size());
  for (long long j = 0; j < m.cols; ++j)
    for (int s = 0; s < 3; ++s)
      m.entries.emplace_back(fs.rows[static_cast<size_t>(cols[static_cast<size_t>(j)])][static_cast<size_t>(s)], j,
                             FaceSystem::kSigns[s]);
  return m;
}

// Whether the columns have a nonzero rational kernel vector. A modular rank
// equal to the column count certifies full rank (modular rank never exceeds
// the rational rank); otherwise the two primes must agree, with elimination
// as arbiter. `exact` forces elimination whenever full rank is not certified.
bool has_q_cycle(const FaceSystem& fs, const std::vector<long long>& cols, bool exact) {
  if (cols.empty()) return false;
  auto m = submatrix(fs, cols);
  long long f = m.cols;
  long long ra = modular_rank(m, kRankPrimeA);
  if (ra == f) return false;
  long long rb = modular_rank(m, kRankPrimeB);
  if (rb == f) return false;
  if (!exact && ra == rb) return true;
  return bareiss_rank(m) < f;
}

// Exact rank of the column set: certified modular full rank short-circuits.
long long q_rank(const FaceSystem& fs, const std::vector<long long>& cols) {
  if (cols.empty()) return 0;
  auto m = submatrix(fs, cols);
  long long ra = modular_rank(m, kRankPrimeA);
  if (ra == m.cols) return ra;
  return bareiss_rank(m);
}

std::vector<long long> erased(const std::vector<long long>& cols, size_t at) {
  std::vector<long long> out;
  out.reserve(cols.size() - 1);
  for (size_t i = 0; i < cols.size(); ++i)
    if (i != at) out.push_back(cols[i]);
  return out;
}

// One forward sweep. Once a face cannot be deleted it stays undeletable:
// the kernel only shrinks, so a face lying in every kernel vector keeps
// doing so. A single lexicographic pass therefore reaches the fixpoint.
std::vector<long long> greedy_delete(const FaceSystem& fs, std::vector<long long> cols,
                                     bool exact, long long* deleted) {
  for (size_t i = 0; i < cols.size();) {
    auto cand = erased(cols, i);
    if (has_q_cycle(fs, cand, exact)) {
      cols = std::move(cand);
      ++(*deleted);
    } else {
      ++i;
    }
  }
  return cols;
}

bool verify_minimal(const FaceSystem& fs, const std::vector<long long>& cols) {
  long long f = static_cast<long long>(cols.size());
  if (f == 0 || q_rank(fs, cols) != f - 1) return false;  // b2 != 1
  for (size_t i = 0; i < cols.size(); ++i)
    if (has_q_cycle(fs, erased(cols, i), /*exact=*/true)) return false;
  return true;
}

std::vector<std::array<int, 3>> face_labels(const Complex& x) {
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<size_t>(x.count(2)));
  for (long long i = 0; i < x.count(2); ++i) {
    auto t = x.cell(2, i);
    out.push_back({t[0], t[1], t[2]});
  }
  return out;
}

Complex complex_of_faces(const std::vector<std::array<int, 3>>& faces) {
  std::vector<std::vector<int>> cells;
  cells.reserve(faces.size());
  for (const auto& f : faces) cells.push_back({f[0], f[1], f[2]});
  return Complex::from_cells(cells);
}

std::vector<long long> betti_gf2_of(const Complex& x) { return betti(x, Field::GF2); }

long long euler2_of(const Complex& x) { return x.count(0) - x.count(1) + x.count(2); }

bool gf2_signature(const Complex& x, long long b0, long long b1, long long b2) {
  auto b = betti_gf2_of(x);
  auto get = [&](size_t k) { return k < b.size() ? b[k] : 0; };
  return get(0) == b0 && get(1) == b1 && get(2) == b2;
}

}  // namespace

Complex closed_core(const Complex& x) {
  auto faces = face_labels(x.pure_part(2));
  for (;;) {
    std::map<std::pair<int, int>, int> deg;
    for (const auto& f : faces) {
      ++deg[{f[0], f[1]}];
      ++deg[{f[0], f[2]}];
      ++deg[{f[1], f[2]}];
    }
    std::vector<std::array<int, 3>> kept;
    kept.reserve(faces.size());
    for (const auto& f : faces)
      if (deg[{f[0], f[1]}] >= 2 && deg[{f[0], f[2]}] >= 2 && deg[{f[1], f[2]}] >= 2)
        kept.push_back(f);
    bool stable = kept.size() == faces.size();
    faces = std::move(kept);
    if (stable || faces.empty()) break;
  }
  if (faces.empty()) return Complex{};
  return complex_of_faces(faces);
}

std::optional<MinimalCycle> extract_minimal_cycle(const Complex& x) {
  Complex pure = x.pure_part(2);
  if (pure.count(2) == 0) return std::nullopt;
  auto fs = face_system(pure);

  std::vector<long long> all(static_cast<size_t>(pure.count(2)));
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<long long>(i);
  if (!has_q_cycle(fs, all, /*exact=*/true)) return std::nullopt;

  // Seed with the first GF2 kernel support that still carries a rational
  // cycle; the full face set always works as fallback.
  std::vector<long long> seed = all;
  for (const auto& sup : two_cycle_space(pure)) {
    if (has_q_cycle(fs, sup, /*exact=*/true)) {
      seed = sup;
      break;
    }
  }

  long long deleted = 0;
  auto cols = greedy_delete(fs, seed, /*exact=*/false, &deleted);
  if (!verify_minimal(fs, cols)) {
    // A dual-prime coincidence misled the fast pass; redo with elimination.
    deleted = 0;
    cols = greedy_delete(fs, seed, /*exact=*/true, &deleted);
    if (!verify_minimal(fs, cols)) throw RankUncertainError("minimal cycle verification failed");
  }
  return MinimalCycle{pure.closure_of_cells(2, cols), deleted};
}

bool is_minimal_cycle(const Complex& support) {
  if (support.dimension() != 2 || support.count(2) == 0) return false;
  if (!(support.pure_part(2) == support)) return false;
  auto fs = face_system(support);
  std::vector<long long> all(static_cast<size_t>(support.count(2)));
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<long long>(i);
  return verify_minimal(fs, all);
}

CycleClassification classify_minimal_cycle(const Complex& support) {
  CycleClassification out;
  out.big_l = 2 * support.count(1) - 3 * support.count(2);

  auto sol = max_density_subgraph(support.one_skeleton());
  if (!(sol.max_density < Rational(3))) {
    out.nu_hypothesis_ok = false;
    std::vector<int> labels;
    for (int idx : sol.witness) labels.push_back(support.vertex_labels()[static_cast<size_t>(idx)]);
    out.nu_violation = "nu_tilde = " + to_string(Rational(1) / sol.max_density) +
                       " <= 1/3 on vertices {";
    for (size_t i = 0; i < labels.size(); ++i)
      out.nu_violation += (i ? "," : "") + std::to_string(labels[i]);
    out.nu_violation += "}; the dichotomy is not guaranteed";
  }

  // Type B exactly when some single-face deletion leaves a nonempty closed
  // core; the largest such core is the closed part the disc hangs off.
  Complex best_core;
  for (long long t = 0; t < support.count(2); ++t) {
    std::vector<long long> rest;
    for (long long i = 0; i < support.count(2); ++i)
      if (i != t) rest.push_back(i);
    Complex core = closed_core(support.closure_of_cells(2, rest));
    if (core.count(2) > best_core.count(2)) best_core = core;
  }
  out.is_type_b = best_core.count(2) > 0;

  if (!out.is_type_b) {
    out.witness_face.assign(support.cell(2, 0).begin(), support.cell(2, 0).end());
    if (gf2_signature(support, 1, 0, 1) && euler2_of(support) == 2)
      out.type = CycleType::sphere_like;
    else if (gf2_signature(support, 1, 1, 1) && euler2_of(support) == 1)
      out.type = CycleType::sphere_wedge_circle;
    return out;
  }

  out.core = best_core;
  for (long long i = 0; i < support.count(2); ++i) {
    auto t = support.cell(2, i);
    if (!out.core.has_cell(t)) {
      out.witness_face.assign(t.begin(), t.end());
      break;
    }
  }

  auto degs = support.edge_triangle_degrees();
  int maxdeg = 0;
  for (int d : degs) maxdeg = std::max(maxdeg, d);

  if (maxdeg >= 4) {
    out.type = CycleType::quotient_p2_union_disc;
    return out;
  }

  // Degree-3 edges must form one cycle of length 3, 4 or 5 (the disc rim).
  std::vector<std::pair<int, int>> rim;
  for (long long i = 0; i < support.count(1); ++i)
    if (degs[static_cast<size_t>(i)] == 3) {
      auto e = support.cell(1, i);
      rim.emplace_back(e[0], e[1]);
    }
  std::map<int, int> touch;
  for (auto [a, b] : rim) {
    ++touch[a];
    ++touch[b];
  }
  bool rim_ok = rim.size() >= 3 && rim.size() <= 5 && rim.size() == touch.size();
  for (auto [v, d] : touch) rim_ok = rim_ok && d == 2;
  // touch.size() == rim.size() with all degrees 2 forces a disjoint union of
  // cycles; at most 5 edges it is a single one.

  if (rim_ok && gf2_signature(out.core, 1, 1, 1) && euler2_of(out.core) == 1)
    out.type = CycleType::p2_union_disc;
  return out;
}

namespace {

std::optional<BubbleReason> bubble_reason(const Complex& cand) {
  if (cand.count(2) == 0) return std::nullopt;
  auto fs = face_system(cand);
  std::vector<long long> all(static_cast<size_t>(cand.count(2)));
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<long long>(i);
  if (has_q_cycle(fs, all, /*exact=*/true)) return BubbleReason::minimal_cycle;
  if (gf2_signature(cand, 1, 1, 1) && euler2_of(cand) == 1)
    return BubbleReason::projective_plane;
  if (gf2_signature(cand, 1, 2, 1) && euler2_of(cand) == 0)
    return BubbleReason::p2_quotient;
  return std::nullopt;
}

// Forward GF2 shrink; same permanence argument as the rational greedy pass.
std::vector<long long> shrink_gf2(const Complex& pure, std::vector<long long> cols) {
  auto full = boundary_matrix_gf2(pure, 2);
  auto sub_has_kernel = [&](const std::vector<long long>& cs) {
    Gf2Matrix m;
    m.rows = full.rows;
    for (long long c : cs) m.cols.push_back(full.cols[static_cast<size_t>(c)]);
    return gf2_rank(m) < static_cast<long long>(cs.size());
  };
  for (size_t i = 0; i < cols.size();) {
    auto cand = erased(cols, i);
    if (!cand.empty() && sub_has_kernel(cand))
      cols = std::move(cand);
    else
      ++i;
  }
  return cols;
}

}  // namespace

std::optional<Bubble> find_small_bubble(const Complex& x, int edge_cap) {
  if (edge_cap < 6) return std::nullopt;  // no closed pure 2-complex fits
  Complex pure = x.pure_part(2);
  if (pure.count(2) == 0) return std::nullopt;

  std::vector<Complex> candidates;
  for (const auto& sup : two_cycle_space(pure))
    candidates.push_back(pure.closure_of_cells(2, shrink_gf2(pure, sup)));
  Complex core = closed_core(pure);
  if (core.count(2) > 0) candidates.push_back(core);

  std::optional<Bubble> best;
  for (const auto& cand : candidates) {
    if (cand.count(1) > edge_cap) continue;
    auto reason = bubble_reason(cand);
    if (!reason) continue;
    if (!best || cand.count(1) < best->edges)
      best = Bubble{cand, *reason, static_cast<int>(cand.count(1))};
  }
  return best;
}

std::optional<Bubble> find_small_bubble_oracle(const Complex& x, int edge_cap) {
  if (edge_cap < 6) return std::nullopt;
  Complex pure = x.pure_part(2);
  long long f = pure.count(2);
  if (f == 0) return std::nullopt;
  if (f > 22) throw std::invalid_argument("bubble oracle limited to 22 faces");

  auto faces = face_labels(pure);
  std::optional<Bubble> best;
  for (uint64_t mask = 1; mask < (uint64_t{1} << f); ++mask) {
    // A witness of any kind is closed, so prune subsets with a deficient edge.
    std::map<std::pair<int, int>, int> deg;
    for (long long i = 0; i < f; ++i)
      if (mask >> i & 1) {
        const auto& t = faces[static_cast<size_t>(i)];
        ++deg[{t[0], t[1]}];
        ++deg[{t[0], t[2]}];
        ++deg[{t[1], t[2]}];
      }
    if (static_cast<int>(deg.size()) > edge_cap) continue;
    bool closed = true;
    for (auto& [e, d] : deg) closed = closed && d >= 2;
    if (!closed) continue;

    std::vector<std::array<int, 3>> sub;
    for (long long i = 0; i < f; ++i)
      if (mask >> i & 1) sub.push_back(faces[static_cast<size_t>(i)]);
    Complex cand = complex_of_faces(sub);
    auto reason = bubble_reason(cand);
    if (!reason) continue;
    if (!best || cand.count(1) < best->edges)
      best = Bubble{cand, *reason, static_cast<int>(cand.count(1))};
  }
  return best;
}

TorsionScreen odd_torsion_screen(const Complex& x) {
  TorsionScreen out;
  if (x.count(1) == 0) {
    out.certified = true;
    out.nu_tilde = Rational(0);
    return out;
  }
  auto sol = max_density_subgraph(x.one_skeleton());
  out.nu_tilde = Rational(1) / sol.max_density;
  out.certified = sol.max_density < Rational(3);
  if (!out.certified)
    for (int idx : sol.witness)
      out.dense_witness.push_back(x.vertex_labels()[static_cast<size_t>(idx)]);
  return out;
}

}  // namespace cliquetop
