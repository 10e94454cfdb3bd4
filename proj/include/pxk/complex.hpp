#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pxk/simplex.hpp"

namespace pxk {

// Dual graph of a complex: one node per facet, an edge whenever two facets of
// equal dimension share a ridge (a common face of codimension one).  The shared
// ridge must be non-empty; in particular the dual graph of a 0-dimensional
// complex has no edges, so a pair of isolated vertices stays disconnected.
// Two distinct simplices of equal cardinality can share at most one ridge,
// namely their intersection, so this is a simple graph.
struct DualGraph {
    struct Edge {
        int a = 0, b = 0; // facet indices, a < b
        Simplex ridge;
    };
    int nodes = 0;
    std::vector<Edge> edges;
    // adj[i] = sorted list of (neighbor facet, edge index)
    std::vector<std::vector<std::pair<int, int>>> adj;

    // Edge index between facets i and j, or -1.
    int edge_between(int i, int j) const;
};

// An abstract simplicial complex, stored by its facet list.  Immutable after
// construction; facets are kept in canonical (lexicographic) order, so facet
// indices are stable and reproducible across runs.
class SimplicialComplex {
public:
    // Canonicalizes: sorts facets, removes duplicates and faces dominated by a
    // larger facet.  Throws ValidationError on an empty facet list.
    static SimplicialComplex build(std::vector<Simplex> facets);

    int dim() const { return dim_; }
    bool pure() const { return pure_; }
    std::size_t facet_count() const { return facets_.size(); }
    const std::vector<Simplex>& facets() const { return facets_; }
    const Simplex& facet(int i) const { return facets_[static_cast<std::size_t>(i)]; }
    const std::vector<Label>& vertices() const { return vertices_; }
    const DualGraph& dual_graph() const { return dual_; }

    // Index of s in the facet list, or -1 if s is not a facet.
    int facet_index(const Simplex& s) const;
    // True iff s is a face of some facet.
    bool has_face(const Simplex& s) const;

    // All faces of the given dimension (k >= -1; k == -1 yields the empty
    // simplex).  Generated on demand.
    std::vector<Simplex> faces_of_dim(int k) const;

    // Number of k-faces for k = 0..dim (the f-vector).
    std::vector<std::size_t> f_vector() const;

private:
    std::vector<Simplex> facets_;
    std::vector<Label> vertices_;
    DualGraph dual_;
    int dim_ = -1;
    bool pure_ = true;
};

// Subcomplex generated by the facets containing s.  s must be a face.
SimplicialComplex star(const SimplicialComplex& c, const Simplex& s);

// Link of s: all faces disjoint from s whose union with s is a face.  Its
// facets are exactly {f \ s : f a facet containing s}.  s must be a face.
SimplicialComplex link(const SimplicialComplex& c, const Simplex& s);

bool is_strongly_connected(const SimplicialComplex& c);

// Strongly connected and, additionally, every vertex star is strongly
// connected.
bool is_locally_strongly_connected(const SimplicialComplex& c);

// Join of two complexes.  If the vertex sets are not disjoint, the right
// complex is relabeled (labels gain a "'" suffix until free) and the applied
// relabeling is recorded.
struct JoinResult {
    SimplicialComplex complex;
    std::map<Label, Label> right_relabel; // original right label -> label used

    // Image of a simplex of the right factor inside the join's vertex set.
    Simplex map_right(const Simplex& s) const;
};
JoinResult join(const SimplicialComplex& left, const SimplicialComplex& right);

// Barycentric subdivision.  Each non-empty face becomes a vertex (labeled by
// the face, e.g. "{1,2,4}") and each maximal chain of faces becomes a facet.
// face_dim records the dimension of the originating face for every new
// vertex; this is the canonical proper coloring of the subdivision.
struct SdResult {
    SimplicialComplex complex;
    std::map<Label, int> face_dim;
};
SdResult barycentric_subdivision(const SimplicialComplex& c);

// Report on one codimension-2 face: the dual graph of its star is either a
// single cycle (then cycle_length is its length and the face is even or odd
// by the parity of that length) or it is not, which is flagged.
struct Codim2Face {
    Simplex face;
    int cycle_length = 0;
    bool is_cycle = false;
    bool odd() const { return is_cycle && cycle_length % 2 == 1; }
};
// All (dim-2)-faces of a pure complex with their star-cycle diagnostics.
// For a 1-dimensional complex the unique (-1)-face is the empty simplex and
// its star is the whole complex.
std::vector<Codim2Face> codim2_faces(const SimplicialComplex& c);

// Decidable fragment of a combinatorial-manifold check: purity, every ridge in
// at most two facets, every codimension-2 star dual graph a single cycle, and
// (for dim <= 3 only, where this is decidable) vertex links that look like
// spheres of the right dimension.  Silent on anything deeper.
struct ManifoldReport {
    int dim = -1;
    bool pure = false;
    bool ridges_at_most_two = false; // pseudomanifold-with-boundary condition
    bool closed = false;             // every ridge in exactly two facets
    bool codim2_cyclic = false;
    bool vertex_links_checked = false; // only attempted for dim <= 3
    bool vertex_links_spherical = false;
    bool passed() const {
        return pure && ridges_at_most_two && codim2_cyclic &&
               (!vertex_links_checked || vertex_links_spherical);
    }
};
ManifoldReport manifold_precheck(const SimplicialComplex& c);

} // namespace pxk
