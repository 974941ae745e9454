#pragma once

#include <vector>

#include "cliquetop/complex.hpp"

namespace cliquetop {

// Reference complexes with checked invariants. Every generator validates its
// output (counts, closedness, link conditions, homology over both fields,
// cleanliness where claimed) and throws std::logic_error on mismatch, so a
// fixture that constructs at all is trustworthy. Results are cached.

Complex sphere_tetra();        // boundary of the 3-simplex; clean
Complex sphere_bipyramid();    // 5-vertex sphere, two cones over a triangle
Complex sphere_octahedron();   // clean
Complex p2_six();              // 6-vertex projective plane, skeleton K6
Complex p2_clean_11();         // 11-vertex clean projective plane
Complex torus_csaszar();       // 7-vertex torus, skeleton K7
Complex torus_grid_clean();    // 4x4 grid torus with aligned diagonals; clean
Complex klein_grid();          // 16-vertex Klein bottle (grid with a flip)
Complex klein_clean();         // subdivided klein_grid; clean
Complex genus2_clean();        // subdivided double torus; clean
Complex annulus_band();        // 8-vertex annulus, no 2-cycles
Complex p2_union_disc_rim3();  // p2_six plus a disc over the essential (0,1,4)
Complex p2_union_disc_rim5();  // p2_clean_11 plus a disc over its outer 5-cycle
Complex sphere_pinched();      // subdivided sphere, two far points identified
Complex p2_pinched();          // subdivided p2_six, two far points identified
Complex p_prime();             // subdivided p2_six, one adjacent edge pair identified
Complex quotient_cycle_small();  // 8-vertex minimal 2-cycle over a quotient
                                 // projective plane (census search output)

// Disc with r interior vertices: a square boundary 0-1-2-3 with an interior
// path joined to the two opposite boundary vertices 1 and 3 (a plain
// diagonal at r = 0). v = r + 4, e = 3r + 5, f = 2r + 2 for every r >= 0;
// clean and collapsible.
Complex generate_disc(int r);

enum class SurfaceKind { sphere, torus, projective_plane, klein, genus2 };

// Clean triangulation of the requested surface.
Complex generate_surface(SurfaceKind kind);

// Cut-and-glue family: remove one edge of genus2_clean together with its two
// faces and glue a disc with r interior vertices across the hole. Clean and
// of Euler characteristic -2 for every r >= 0. The surface part keeps 233
// edges on 76 vertices while the whole complex has (234 + 3r)/(76 + r), so
// the whole stops attaining the maximum skeleton density for large r.
Complex generate_unbalanced_clean_surface(int r);

// Smallest r at which generate_unbalanced_clean_surface(r) is not
// density-balanced, found by sweeping the solver upward from r = 0.
int unbalanced_crossover_r();

// Barycentric subdivision (dimension <= 2): the result's vertex labels are
// cell ids of x, vertices first (by position in the vertex list), then edges,
// then faces. Order complexes are flag, so the result is always clean.
Complex barycentric_subdivision(const Complex& x);

// Quotient identifying label `drop` with label `keep`. Throws when some cell
// contains both labels (the quotient would not be simplicial). Cells that
// merge in pairs are kept once.
Complex identify_vertices(const Complex& x, int keep, int drop);

// x plus a cone with fresh apex label over a closed vertex cycle (length
// >= 3, consecutive vertices adjacent in x's skeleton).
Complex cone_over_cycle(const Complex& x, const std::vector<int>& cycle, int apex);

}  // namespace cliquetop
