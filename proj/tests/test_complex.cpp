#include <doctest.h>

#include <algorithm>
#include <set>

#include <pxk/builders.hpp>
#include <pxk/complex.hpp>
#include <pxk/errors.hpp>

using namespace pxk;

namespace {
SimplicialComplex tetra_boundary() { return builders::simplex_boundary(3); }
} // namespace

TEST_CASE("construction canonicalizes and validates") {
    CHECK_THROWS_AS(SimplicialComplex::build({}), ValidationError);

    // Duplicates and dominated faces disappear.
    auto c = SimplicialComplex::build({Simplex::of_ints({1, 2, 3}),
                                       Simplex::of_ints({2, 3}),
                                       Simplex::of_ints({3, 2, 1})});
    CHECK(c.facet_count() == 1);
    CHECK(c.dim() == 2);
    CHECK(c.pure());

    auto mixed = SimplicialComplex::build(
        {Simplex::of_ints({1, 2, 3}), Simplex::of_ints({4, 5})});
    CHECK_FALSE(mixed.pure());
    CHECK(mixed.dim() == 2);
}

TEST_CASE("f-vector and face enumeration of the tetrahedron boundary") {
    auto c = tetra_boundary();
    CHECK(c.f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(c.faces_of_dim(1).size() == 6);
    CHECK(c.faces_of_dim(-1).size() == 1); // the empty simplex
    CHECK(c.has_face(Simplex::of_ints({1, 4})));
    CHECK_FALSE(c.has_face(Simplex::of_ints({1, 2, 3, 4})));
    CHECK(c.facet_index(Simplex::of_ints({1, 2, 3})) == 0);
    CHECK(c.facet_index(Simplex::of_ints({1, 2, 3, 4})) == -1);
}

TEST_CASE("dual graph joins facets along ridges only") {
    // A path of three edges: dual graph is itself a path.
    auto path = SimplicialComplex::build({Simplex::of_ints({1, 2}),
                                          Simplex::of_ints({2, 3}),
                                          Simplex::of_ints({3, 4})});
    CHECK(path.dual_graph().edges.size() == 2);
    CHECK(path.dual_graph().edge_between(0, 1) >= 0);
    CHECK(path.dual_graph().edge_between(0, 2) == -1);

    // Isolated vertices share the empty face, which is not a ridge.
    auto points = SimplicialComplex::build(
        {Simplex::of_ints({1}), Simplex::of_ints({2})});
    CHECK(points.dual_graph().edges.empty());
    CHECK_FALSE(is_strongly_connected(points));

    // The tetrahedron boundary's dual graph is complete on 4 nodes.
    CHECK(tetra_boundary().dual_graph().edges.size() == 6);
}

TEST_CASE("star and link") {
    auto c = tetra_boundary();
    auto v = Simplex::of_ints({1});
    auto st = star(c, v);
    CHECK(st.facet_count() == 3);
    for (const auto& f : st.facets()) CHECK(f.contains(Label(std::int64_t(1))));

    // The link of a vertex of a 2-sphere triangulation is a cycle.
    auto lk = link(c, v);
    CHECK(lk.dim() == 1);
    CHECK(lk.facet_count() == 3);
    CHECK(lk.f_vector() == std::vector<std::size_t>{3, 3});
    CHECK_THROWS_AS(link(c, Simplex::of_ints({9})), ValidationError);
}

TEST_CASE("local strong connectivity is stricter than strong connectivity") {
    auto c = builders::nonlocal_path();
    CHECK(is_strongly_connected(c));
    CHECK_FALSE(is_locally_strongly_connected(c));
    CHECK(is_locally_strongly_connected(builders::torus_T()));
}

TEST_CASE("join relabels colliding right-hand vertices") {
    auto c3 = builders::cycle(3);
    auto j = join(c3, c3);
    CHECK(j.complex.dim() == 3);
    CHECK(j.complex.facet_count() == 9); // 3 x 3 facet pairs
    CHECK(j.complex.vertices().size() == 6);
    CHECK(j.right_relabel.size() == 3); // every right vertex collided
    // Disjoint vertex sets pass through unchanged.
    auto c4 = SimplicialComplex::build(
        {Simplex::of_ints({7, 8}), Simplex::of_ints({8, 9}),
         Simplex::of_ints({7, 9})});
    CHECK(join(c3, c4).right_relabel.empty());
}

TEST_CASE("barycentric subdivision produces the face-dimension coloring") {
    auto c = tetra_boundary();
    auto sd = barycentric_subdivision(c);
    CHECK(sd.complex.facet_count() == 24); // one facet per maximal face chain
    CHECK(sd.complex.vertices().size() == 4 + 6 + 4);
    for (const auto& f : sd.complex.facets()) {
        // Every facet holds one face of each dimension.
        std::set<int> dims;
        for (const auto& v : f.vertices()) dims.insert(sd.face_dim.at(v));
        CHECK(dims == std::set<int>{0, 1, 2});
    }
}

TEST_CASE("codimension-2 faces of the torus are all even") {
    auto faces = codim2_faces(builders::torus_T());
    CHECK(faces.size() == 9); // the vertices
    for (const auto& f : faces) {
        CHECK(f.is_cycle);
        CHECK(f.cycle_length == 6);
        CHECK_FALSE(f.odd());
    }
}

TEST_CASE("codimension-2 stars of a 1-complex revolve around the empty face") {
    auto faces = codim2_faces(builders::cycle(5));
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].face.empty());
    CHECK(faces[0].is_cycle);
    CHECK(faces[0].cycle_length == 5);
    CHECK(faces[0].odd());
}

TEST_CASE("manifold precheck separates surfaces from non-manifolds") {
    auto torus = manifold_precheck(builders::torus_T());
    CHECK(torus.passed());
    CHECK(torus.closed);
    CHECK(torus.vertex_links_checked);

    auto path = manifold_precheck(builders::nonlocal_path());
    CHECK_FALSE(path.passed());

    // Three triangles around one shared edge: a ridge in three facets.
    auto book = SimplicialComplex::build({Simplex::of_ints({1, 2, 3}),
                                          Simplex::of_ints({1, 2, 4}),
                                          Simplex::of_ints({1, 2, 5})});
    auto rep = manifold_precheck(book);
    CHECK_FALSE(rep.ridges_at_most_two);
    CHECK_FALSE(rep.passed());
}
