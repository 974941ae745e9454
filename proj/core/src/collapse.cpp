#include "cliquetop/collapse.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cliquetop {

namespace {

using Cell = std::vector<int>;

std::vector<Cell> cells_of(const Complex& x, int k) {
  std::vector<Cell> out;
  for (long long i = 0; i < x.count(k); ++i) {
    auto c = x.cell(k, i);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

// Removes (free k-face, (k+1)-coface) pairs, smallest free face first.
CollapseOutcome run_phase(const Complex& x, int k) {
  std::set<Cell> low, high;
  for (auto& c : cells_of(x, k)) low.insert(c);
  for (auto& c : cells_of(x, k + 1)) high.insert(c);
  std::map<Cell, std::set<Cell>> cofaces;
  for (const auto& c : low) cofaces[c];
  for (const auto& h : high)
    for (size_t drop = 0; drop < h.size(); ++drop) {
      Cell face;
      for (size_t i = 0; i < h.size(); ++i)
        if (i != drop) face.push_back(h[i]);
      cofaces[face].insert(h);
    }
  std::set<Cell> free_faces;
  for (auto& [face, over] : cofaces)
    if (over.size() == 1) free_faces.insert(face);

  CollapseOutcome out;
  while (!high.empty() && !free_faces.empty()) {
    Cell face = *free_faces.begin();
    Cell top = *cofaces[face].begin();
    out.steps.push_back({face, top});
    high.erase(top);
    for (size_t drop = 0; drop < top.size(); ++drop) {
      Cell g;
      for (size_t i = 0; i < top.size(); ++i)
        if (i != drop) g.push_back(top[i]);
      auto& over = cofaces[g];
      over.erase(top);
      if (over.size() == 1)
        free_faces.insert(g);
      else
        free_faces.erase(g);
    }
    low.erase(face);
    cofaces.erase(face);
    free_faces.erase(face);
  }
  out.removed_all_top = high.empty();

  std::vector<Cell> remaining;
  for (int d = 0; d < k; ++d)
    for (auto& c : cells_of(x, d)) remaining.push_back(c);
  for (int d = k + 2; d <= x.dimension(); ++d)
    for (auto& c : cells_of(x, d)) remaining.push_back(c);
  remaining.insert(remaining.end(), low.begin(), low.end());
  remaining.insert(remaining.end(), high.begin(), high.end());
  out.residue = Complex::from_cells(remaining);
  return out;
}

}  // namespace

CollapseOutcome collapse_3_to_2(const Complex& x) {
  if (x.dimension() > 3) throw std::invalid_argument("collapse_3_to_2: dimension > 3");
  return run_phase(x, 2);
}

CollapseOutcome collapse_2_cascade(const Complex& x) {
  if (x.dimension() > 2) throw std::invalid_argument("collapse_2_cascade: dimension > 2");
  return run_phase(x, 1);
}

ResidueKind residue_kind(const Complex& residue) {
  if (residue.count(2) == 0) return ResidueKind::graph;
  auto deg = residue.edge_triangle_degrees();
  bool all_covered = true;
  for (int d : deg)
    if (d < 2) all_covered = false;
  if (all_covered && residue == residue.pure_part(2)) return ResidueKind::closed_2_complex;
  return ResidueKind::mixed;
}

FreenessCertificate freeness_certificate(const Complex& x) {
  if (x.dimension() > 3)
    throw std::invalid_argument("freeness_certificate: dimension > 3");
  FreenessCertificate cert;
  auto phase3 = collapse_3_to_2(x);
  cert.steps = phase3.steps;
  if (!phase3.removed_all_top) {
    cert.outcome = FreenessCertificate::Outcome::obstructed_3_collapse;
    cert.residue = phase3.residue;
    return cert;
  }
  auto phase2 = collapse_2_cascade(phase3.residue);
  cert.steps.insert(cert.steps.end(), phase2.steps.begin(), phase2.steps.end());
  cert.residue = phase2.residue;
  switch (residue_kind(cert.residue)) {
    case ResidueKind::graph: {
      cert.outcome = FreenessCertificate::Outcome::free_fundamental_group;
      auto comps = cert.residue.one_skeleton().components();
      cert.free_rank = cert.residue.edge_count() - cert.residue.vertex_count() +
                       static_cast<long long>(comps.size());
      break;
    }
    case ResidueKind::closed_2_complex:
      cert.outcome = FreenessCertificate::Outcome::closed_residue;
      break;
    case ResidueKind::mixed:
      cert.outcome = FreenessCertificate::Outcome::mixed_residue;
      break;
  }
  return cert;
}

std::string collapse_trace(std::span<const CollapseStep> steps) {
  std::ostringstream os;
  for (const auto& s : steps) {
    os << "COLLAPSE";
    for (int v : s.free_face) os << ' ' << v;
    for (int v : s.coface) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

Complex apply_collapse_steps(const Complex& x, std::span<const CollapseStep> steps,
                             long long count) {
  if (count < 0) count = static_cast<long long>(steps.size());
  std::set<Cell> removed;
  for (long long i = 0; i < count; ++i) {
    removed.insert(steps[i].free_face);
    removed.insert(steps[i].coface);
  }
  std::vector<Cell> kept;
  for (int d = 0; d <= x.dimension(); ++d)
    for (auto& c : cells_of(x, d))
      if (!removed.count(c)) kept.push_back(c);
  return Complex::from_cells(kept);
}

}  // namespace cliquetop
