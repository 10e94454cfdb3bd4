#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pxk/complex.hpp"
#include "pxk/permutation.hpp"

namespace pxk {

// Vertex bijection between two facets of equal dimension, stored by position:
// the i-th vertex of the source facet (in sorted order) maps to the
// image_pos[i]-th vertex of the target facet.
struct Projectivity {
    int source = -1;
    int target = -1;
    std::vector<std::uint8_t> image_pos;

    // Diagrammatic composition: this first, then b (requires target == b.source).
    Projectivity then(const Projectivity& b) const;
    Projectivity inverse() const;

    // Image of a vertex of the source facet.
    Label apply(const SimplicialComplex& c, const Label& v) const;
    // The bijection as a label map.
    std::map<Label, Label> as_map(const SimplicialComplex& c) const;
    // For a closed loop (source == target) the bijection is a permutation of
    // the base facet's sorted vertex list.
    Permutation as_permutation() const;
};

// Walk in the dual graph, as a sequence of facet indices; consecutive facets
// must share a ridge.
class FacetPath {
public:
    FacetPath() = default;
    // Validates adjacency of consecutive facets.
    static FacetPath of(const SimplicialComplex& c, std::vector<int> facets);
    // Convenience: build from explicit facet vertex lists.
    static FacetPath of_simplices(const SimplicialComplex& c,
                                  const std::vector<Simplex>& facets);

    const std::vector<int>& facets() const { return f_; }
    int source() const { return f_.front(); }
    int target() const { return f_.back(); }
    bool is_loop() const { return f_.size() >= 1 && f_.front() == f_.back(); }
    std::size_t length() const { return f_.empty() ? 0 : f_.size() - 1; }

    // Concatenation g*h (h must start where g ends).
    FacetPath concat(const FacetPath& h) const;
    FacetPath reversed() const;

private:
    std::vector<int> f_;
};

// The perspectivity from facet src to adjacent facet dst: the unique vertex of
// src not in dst maps to the unique vertex of dst not in src, every shared
// vertex is fixed.
Projectivity perspectivity(const SimplicialComplex& c, int src, int dst);

// Composite of the perspectivities along a path.
Projectivity projectivity(const SimplicialComplex& c, const FacetPath& p);

// One generator of the group of projectivities: the loop it came from and its
// permutation of the base facet.
struct LoopGenerator {
    FacetPath loop;
    Permutation perm;
};

// Group of projectivities at a base facet, computed from a BFS spanning tree
// of the dual graph (root = base, neighbors scanned in canonical facet order):
// one generator per non-tree edge, conjugated to the base by the tree paths.
// Only the strongly connected component of the base is examined;
// covers_all_facets records whether that was everything.
struct PiGroupResult {
    PermutationGroup group;
    std::vector<LoopGenerator> gens;
    std::vector<int> tree_parent;               // -1 at root and off-component
    std::vector<std::pair<int, int>> tree_edges; // (parent, child), BFS order
    bool covers_all_facets = true;
};
PiGroupResult pi_group(const SimplicialComplex& c, int base);

// Subgroup generated by the loops around odd codimension-2 faces, conjugated
// to the base along spanning-tree paths.  Each such loop walks once around
// the dual cycle of the star of an odd face, starting toward the smaller
// facet index; each generator is a transposition of the base facet.
// Requires every codimension-2 star dual graph to be a single cycle.
struct OddGenerator {
    Simplex face;
    FacetPath loop; // conjugated loop based at the base facet
    Permutation perm;
};
struct OddSubgroupResult {
    PermutationGroup group;
    std::vector<OddGenerator> gens;
};
OddSubgroupResult odd_subgroup(const SimplicialComplex& c, int base);

// Checks the change-of-base identity: conjugating the group at base1 by the
// projectivity along any path from base0 to base1 yields the group at base0.
struct BaseChangeResult {
    PermutationGroup group0;
    PermutationGroup group1;
    bool conjugate = false;
};
BaseChangeResult base_change(const SimplicialComplex& c, int base0, int base1,
                             const FacetPath& path01);

// Do the odd-face generators together with the given extra loops generate the
// whole group of projectivities?  Loops must be based at base.
bool verify_generation(const SimplicialComplex& c, int base,
                       const std::vector<FacetPath>& loops);

// A simplicial vertex map between complexes.
struct SimplicialMap {
    std::map<Label, Label> vertex_map;
    Label operator()(const Label& v) const;
    Simplex apply(const Simplex& s) const;
};

// Pushes the group of projectivities of (src, base) through a non-degenerate
// simplicial map into dst: every generator loop maps to a facet loop whose
// projectivity must lie in the group of (dst, f(base)) and must equal the
// conjugate of the original by f restricted to the base facet.
struct InducedMapReport {
    bool image_in_target = false;  // pushed generators lie in the target group
    bool homomorphism = false;     // pushforward = conjugation by f|base
    bool facet_injective = false;  // f is injective on the facet set
    bool monomorphism = false;     // distinct elements keep distinct images
    std::size_t source_order = 0;
    std::size_t image_order = 0;
};
InducedMapReport induced_map_check(const SimplicialMap& f,
                                   const SimplicialComplex& src, int base,
                                   const SimplicialComplex& dst);

// Joins the two complexes and checks that the group of projectivities of the
// join at (base_left u base_right) is the internal direct product of the
// images of the factor groups.
struct JoinProductReport {
    JoinResult joined;
    std::size_t order_left = 0;
    std::size_t order_right = 0;
    std::size_t order_join = 0;
    bool product = false;
};
JoinProductReport verify_join_product(const SimplicialComplex& left, int base_left,
                                      const SimplicialComplex& right, int base_right);

} // namespace pxk
