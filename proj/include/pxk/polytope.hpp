#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "pxk/coloring.hpp"
#include "pxk/complex.hpp"
#include "pxk/projectivity.hpp"

namespace pxk {

// A 2-face of a simple polytope: the vertices sharing a fixed set of dim-2
// facets, together with its boundary cycle.
struct TwoFace {
    std::vector<int> defining_facets; // facet indices, |dim - 2| of them
    std::vector<int> boundary;        // vertex indices in cyclic order
    bool even() const { return boundary.size() % 2 == 0; }
};

// Combinatorial simple d-polytope, given by vertex-facet incidences: every
// vertex lies in exactly d facets.  Edges and 2-faces are derived; the
// builder validates that every candidate 2-face traces to a single cycle and
// that the vertex-edge graph is connected.
class SimplePolytope {
public:
    static SimplePolytope build(int dim, std::vector<Label> facet_labels,
                                std::map<Label, std::vector<Label>> vertex_facets);

    int dim() const { return dim_; }
    const std::vector<Label>& facet_labels() const { return facets_; }
    const std::vector<Label>& vertex_labels() const { return verts_; }
    std::size_t facet_count() const { return facets_.size(); }
    std::size_t vertex_count() const { return verts_.size(); }
    const Label& facet_label(int i) const { return facets_[static_cast<std::size_t>(i)]; }
    const Label& vertex_label(int i) const { return verts_[static_cast<std::size_t>(i)]; }
    int facet_index(const Label& l) const;
    int vertex_index(const Label& l) const;

    // Facet indices of a vertex, sorted, size == dim.
    const std::vector<int>& facets_of(int v) const {
        return incidence_[static_cast<std::size_t>(v)];
    }
    Simplex facet_set(int v) const; // the same as a simplex of facet labels

    // Vertex pairs sharing exactly dim-1 facets, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<TwoFace>& two_faces() const { return two_faces_; }
    // Vertices incident to facet i.
    std::vector<int> facet_vertices(int i) const;

    // (vertex count, edge count, facet count).
    std::array<std::size_t, 3> f_vector() const {
        return {verts_.size(), edges_.size(), facets_.size()};
    }

private:
    int dim_ = 0;
    std::vector<Label> facets_; // sorted
    std::vector<Label> verts_;  // sorted
    std::vector<std::vector<int>> incidence_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<TwoFace> two_faces_;
};

// Dual simplicial complex: one vertex per facet label, one facet per polytope
// vertex (its facet set).  Pure of dimension dim-1.
SimplicialComplex dualize(const SimplePolytope& p);

// Graph on the polytope's vertices and edges.
AbstractGraph vertex_edge_graph(const SimplePolytope& p);
// Graph on the facets; adjacent iff they share a vertex.
AbstractGraph facet_intersection_graph(const SimplePolytope& p);

// For an edge {v,w}: the facet containing v but not w maps to the facet
// containing w but not v, all shared facets stay fixed.  This matches the
// perspectivity of the dual complex between the two vertex facet-sets.
struct VertexPerspectivity {
    Label swapped_out; // the facet at v missing at w
    Label swapped_in;  // the facet at w missing at v
    std::map<Label, Label> map;
};
VertexPerspectivity vertex_perspectivity(const SimplePolytope& p, int v, int w);

// Group of projectivities of the polytope at a base vertex: the group of the
// dual complex at the corresponding facet.
PiGroupResult pi_group(const SimplePolytope& p, int base_vertex);

bool is_even(const SimplePolytope& p);

// The four equivalent conditions, each computed independently; they must all
// agree, and disagreement signals an implementation bug, never bad input.
struct ColoringTheoremReport {
    bool even = false;
    bool bipartite = false;
    bool dual_balanced = false;
    int gamma = 0; // exact chromatic number of the facet-intersection graph
    bool gamma_is_dim = false;
    bool agree = false;
};
ColoringTheoremReport coloring_theorem_check(const SimplePolytope& p);

// n - gamma <= s(P) <= n - d for the maximal number s(P) of pairwise disjoint
// facet-complement pieces; tight exactly when gamma == d.
struct SBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool tight = false;
};
SBounds s_bounds(const SimplePolytope& p);

// Proper facet d-coloring -> proper edge d-coloring: every edge takes the
// shared color of its two swapped facets (equal by a counting argument; a
// mismatch is asserted as an internal bug).
struct EdgeColoringResult {
    std::map<std::pair<Label, Label>, int> edge_colors;
    int colors_used = 0;
    bool proper = true;
};
EdgeColoringResult induced_edge_coloring(const SimplePolytope& p,
                                         const Coloring& facet_coloring);

// For every edge of an even simple polytope the two swapped facets are
// vertex-disjoint.  Returns false when some pair intersects.
bool disjoint_facet_check(const SimplePolytope& p);

// Rank over GF(2) of the 2-face boundary cycles inside the edge space,
// against the cycle-space dimension |E| - |V| + 1 of the connected graph.
struct CycleSpaceReport {
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool equal = false;
};
CycleSpaceReport cycle_space_check(const SimplePolytope& p);

// Combinatorial product: facets are the disjoint union of the factors'
// facets (right labels gain "'" on collision), vertices are pairs.
struct ProductResult {
    SimplePolytope polytope;
    std::map<Label, Label> right_facet_relabel;
    // product vertex label -> (left vertex, right vertex)
    std::map<Label, std::pair<Label, Label>> vertex_pairs;
};
ProductResult product_polytope(const SimplePolytope& p, const SimplePolytope& q);

// Checks that the group of the product at (v,w) is the internal direct
// product of the factor images, and that the orbit-size partitions
// concatenate.
struct ProductGroupReport {
    std::size_t order_left = 0;
    std::size_t order_right = 0;
    std::size_t order_product = 0;
    bool product = false;
    bool partitions_concatenate = false;
};
ProductGroupReport verify_product(const SimplePolytope& p, int base_v,
                                  const SimplePolytope& q, int base_w);

} // namespace pxk
