#pragma once

#include <optional>
#include <vector>

#include "cliquetop/complex.hpp"

namespace cliquetop {

// All closed strongly connected pure 2-complexes on at most max_vertices
// (<= 8) vertices with rational b2 = 0 and nu > 1/3, up to isomorphism.
//
// The search grows face sets over canonical labels (new vertices appear in
// increasing order, the lexicographically first deficient edge is covered
// next, sibling branches forbid earlier candidates so each face set is
// visited once). Two prunes are exact: a face set whose boundary columns are
// rationally dependent stays dependent in every superset, and 24 or more
// edges force nu <= 1/3 for every completion on <= 8 vertices. Column
// independence is tracked modulo a large prime, which certifies rational
// independence; apparent dependence is confirmed by fraction-free
// elimination before pruning.
std::vector<Complex> census_closed_sc(int max_vertices);

// Searches for a minimal 2-cycle whose closed part is a projective plane
// with one edge pair identified: quotients census projective planes by a
// non-adjacent vertex pair, keeps those with an edge of triangle degree
// >= 4 and the homology of a projective plane, cones a short essential
// cycle, and returns the first extracted minimal cycle that classifies as
// quotient_p2_union_disc with L in {-3,-4,-5}. Empty when the space holds
// none.
std::optional<Complex> search_quotient_cycle(int max_vertices);

}  // namespace cliquetop
