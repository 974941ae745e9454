#pragma once

#include <optional>
#include <vector>

#include "cliquetop/complex.hpp"
#include "cliquetop/rational.hpp"

namespace cliquetop {

// Throws std::invalid_argument unless `loop` is a cyclic edge path: length
// >= 3, consecutive entries (including the wrap) distinct and adjacent in
// the skeleton of x. Entries may repeat, so non-simple loops are fine.
void validate_loop(const Complex& x, const std::vector<int>& loop);

struct FillingLimits {
  int extra_length = 2;         // words may exceed the input length by this
  long long max_area = 32;      // stop past this many triangles
  long long max_states = 200000;
};

struct FillingResult {
  bool filled = false;
  bool null_homologous = true;  // GF2 necessary condition for any filling
  long long area = 0;
  std::vector<std::vector<int>> disc;  // faces used, with multiplicity
  long long states = 0;                // distinct words settled
};

// Bounded search for a disc with boundary `loop`, by shortest-path over
// cyclic words: free spur removal (... a b a ... -> ... a ...), contraction
// a b c -> a c across a face, expansion a c -> a b c across a face. Words
// are deduplicated up to rotation. A `filled` answer carries an explicit
// face multiset whose GF2 boundary is the loop's edge vector; `!filled`
// only means no filling was found within the limits, except that
// null_homologous == false rules out any filling outright.
FillingResult filling_area(const Complex& x, const std::vector<int>& loop,
                           const FillingLimits& lim = {});

// Exhaustive minimum over singular disc diagrams with at most max_area
// triangles: the diagram triangle covering a fixed boundary edge has its
// apex either interior (polygon grows by one) or on the boundary (polygon
// pinches in two), and both branches are explored. Fixture-sized inputs.
std::optional<long long> filling_area_oracle(const Complex& x, const std::vector<int>& loop,
                                             long long max_area = 8);

struct IsoperimetricLoop {
  std::vector<int> loop;
  long long area = 0;
};

struct IsoperimetricScan {
  std::optional<Rational> min_ratio;  // length/area over successfully filled loops
  std::optional<IsoperimetricLoop> witness;
  long long loops_scanned = 0;
  long long unfilled_within = 0;  // null-homologous but not filled under the limits
  long long non_null = 0;         // failed the GF2 necessary condition
};

// Scans cyclically reduced loops of length 3..max_len, one representative
// per rotation/reflection/basepoint class, and reports the smallest
// length/area ratio the bounded search certifies. Intended for small
// complexes; the loop count grows like degree^max_len.
IsoperimetricScan restricted_isoperimetric_ratio(const Complex& x, int max_len,
                                                 const FillingLimits& lim = {});

// The loop's GF2 edge vector (each traversal toggles an edge) equals the
// XOR of the disc faces' boundaries; used to audit filling witnesses.
bool filling_boundary_matches(const Complex& x, const std::vector<int>& loop,
                              const std::vector<std::vector<int>>& disc);

}  // namespace cliquetop
