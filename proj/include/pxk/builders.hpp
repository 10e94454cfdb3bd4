#pragma once

// Ready-made complexes and polytopes used by the CLI and the test corpus.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pxk/complex.hpp"
#include "pxk/polytope.hpp"

namespace pxk::builders {

// ---------------------------------------------------------------------------
// Simplicial complexes
// ---------------------------------------------------------------------------

// Boundary of the d-simplex on vertices 1..d+1 (all d-subsets as facets).
SimplicialComplex simplex_boundary(int d);

// The n-gon: vertices 1..n, facets {i, i+1} cyclically.  Requires n >= 3.
SimplicialComplex cycle(int n);

// Boundary complex of the d-dimensional cross-polytope on the vertex pairs
// {2i-1, 2i}: one facet per transversal picking a vertex from every pair.
// Coincides label-for-label with dualize(cube(d)).
SimplicialComplex cross_polytope(int d);

// 9-vertex triangulation of the torus: 3x3 vertex grid, every square split
// along the same diagonal.  All vertex links are hexagons.
SimplicialComplex torus_T();

// Same grid as torus_T with the diagonals of the middle column of squares
// flipped.  Shares the f-vector and vertex degrees of torus_T but has a
// different projectivity group.
SimplicialComplex anti_torus_A();

// Four triangles forming a path whose dual graph is connected while the star
// of vertex 5 is not strongly connected.
SimplicialComplex nonlocal_path();

// n distinct facets of dimension d drawn uniformly from a vertex pool of
// size d + 2 + n/2.  Same seed, same complex.
SimplicialComplex random_pure(int d, int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Simple polytopes
// ---------------------------------------------------------------------------

// The d-cube.  Facet labels 1..2d (2i-1 and 2i are the opposite facets of
// coordinate i); vertex labels are the coordinate bitmasks 0..2^d-1.
SimplePolytope cube(int d);

// The d-simplex.  Facets 1..d+1; vertex i lies on every facet except i.
SimplePolytope simplex(int d);

// The regular dodecahedron: twelve pentagon facets labelled N, S, u1..u5,
// l1..l5 after the icosahedral vertices they are dual to.
SimplePolytope dodecahedron();

// The 3-dimensional permutohedron (truncated octahedron): vertices are the
// 24 permutations of 1234; the 14 facets are the nonempty proper subsets of
// positions, written as digit strings.
SimplePolytope permutohedron();

// Two 3-cubes blended at a vertex: facets A1..A3 and B1..B3 are the square
// facets of the left and right cube, C1..C3 the merged hexagonal ones.
// f-vector (14, 21, 9).
SimplePolytope blend_M();

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct Generated {
    std::string name;
    std::optional<SimplicialComplex> complex;
    std::optional<SimplePolytope> polytope;
};

// Builds an object by registry name, e.g. ("cube", {3}) or
// ("random_pure", {2, 12, 99}).  Throws ValidationError for unknown names or
// a wrong number of parameters.
Generated make(const std::string& name, const std::vector<std::int64_t>& params);

// Registry names with their parameter signatures, for CLI help output.
std::vector<std::string> available();

}  // namespace pxk::builders
