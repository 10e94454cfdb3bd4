#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <pxk/builders.hpp>
#include <pxk/errors.hpp>
#include <pxk/polytope.hpp>

using namespace pxk;

namespace {
std::map<std::size_t, int> two_face_census(const SimplePolytope& p) {
    std::map<std::size_t, int> census;
    for (const auto& tf : p.two_faces()) census[tf.boundary.size()]++;
    return census;
}
} // namespace

TEST_CASE("construction validates simplicity and face structure") {
    // A vertex on the wrong number of facets is rejected.
    CHECK_THROWS_AS(
        SimplePolytope::build(
            3, {Label(std::string("a")), Label(std::string("b"))},
            {{Label(std::int64_t(1)),
              {Label(std::string("a")), Label(std::string("b"))}}}),
        ValidationError);
    CHECK_THROWS_AS(SimplePolytope::build(3, {}, {}), ValidationError);
}

TEST_CASE("the cube family has the expected face numbers") {
    auto c3 = builders::cube(3);
    CHECK(c3.f_vector() == std::array<std::size_t, 3>{8, 12, 6});
    CHECK(two_face_census(c3) == std::map<std::size_t, int>{{4, 6}});
    for (int v = 0; v < 8; ++v) CHECK(c3.facets_of(v).size() == 3);

    auto c4 = builders::cube(4);
    CHECK(c4.f_vector() == std::array<std::size_t, 3>{16, 32, 8});
    CHECK(two_face_census(c4) == std::map<std::size_t, int>{{4, 24}});
}

TEST_CASE("simplices, the dodecahedron, and the permutohedron") {
    auto s3 = builders::simplex(3);
    CHECK(s3.f_vector() == std::array<std::size_t, 3>{4, 6, 4});
    CHECK(two_face_census(s3) == std::map<std::size_t, int>{{3, 4}});

    auto dod = builders::dodecahedron();
    CHECK(dod.f_vector() == std::array<std::size_t, 3>{20, 30, 12});
    CHECK(two_face_census(dod) == std::map<std::size_t, int>{{5, 12}});

    auto perm = builders::permutohedron();
    CHECK(perm.f_vector() == std::array<std::size_t, 3>{24, 36, 14});
    CHECK(two_face_census(perm) == std::map<std::size_t, int>{{4, 6}, {6, 8}});
}

TEST_CASE("dualization gives the boundary complex of the polar polytope") {
    for (int d = 2; d <= 4; ++d) {
        auto dual = dualize(builders::cube(d));
        auto cross = builders::cross_polytope(d);
        CHECK(dual.facets() == cross.facets());
    }
    // The dual of a simple polytope is pure of dimension d-1 with one facet
    // per polytope vertex.
    auto dd = dualize(builders::dodecahedron());
    CHECK(dd.dim() == 2);
    CHECK(dd.facet_count() == 20);
    CHECK(manifold_precheck(dd).passed());
}

TEST_CASE("vertex perspectivities match the dual complex's perspectivities") {
    auto p = builders::cube(3);
    auto dual = dualize(p);
    for (auto [v, w] : p.edges()) {
        auto vp = vertex_perspectivity(p, v, w);
        int fv = dual.facet_index(p.facet_set(v));
        int fw = dual.facet_index(p.facet_set(w));
        auto pp = perspectivity(dual, fv, fw).as_map(dual);
        CHECK(vp.map == pp);
        CHECK(vp.map.at(vp.swapped_out) == vp.swapped_in);
        // Shared facets stay fixed.
        for (const auto& [from, to] : vp.map)
            if (from != vp.swapped_out) CHECK(from == to);
    }
}

TEST_CASE("projectivity groups of the polytope gallery") {
    CHECK(pi_group(builders::cube(3), 0).group.order() == 1);
    CHECK(pi_group(builders::cube(4), 0).group.order() == 1);
    CHECK(pi_group(builders::simplex(3), 0).group.order() == 6);
    CHECK(pi_group(builders::simplex(4), 0).group.order() == 24);
    CHECK(pi_group(builders::dodecahedron(), 0).group.order() == 6);
    CHECK(pi_group(builders::permutohedron(), 0).group.order() == 1);
}

TEST_CASE("the group does not depend on the base vertex") {
    for (const auto& p : {builders::simplex(3), builders::dodecahedron(),
                          builders::blend_M()}) {
        auto at0 = pi_group(p, 0);
        auto atLast = pi_group(p, static_cast<int>(p.vertex_count()) - 1);
        CHECK(at0.group.order() == atLast.group.order());
        auto c0 = classify_symmetric_product(at0.group);
        auto c1 = classify_symmetric_product(atLast.group);
        CHECK(c0 == c1);
    }
}

TEST_CASE("evenness, bipartiteness, balancedness, and gamma move together") {
    std::vector<std::pair<SimplePolytope, bool>> gallery;
    gallery.emplace_back(builders::cube(3), true);
    gallery.emplace_back(builders::cube(4), true);
    gallery.emplace_back(builders::simplex(3), false);
    gallery.emplace_back(builders::dodecahedron(), false);
    gallery.emplace_back(builders::permutohedron(), true);
    gallery.emplace_back(builders::blend_M(), true);
    for (const auto& [p, expect_even] : gallery) {
        auto rep = coloring_theorem_check(p);
        CHECK(rep.agree);
        CHECK(rep.even == expect_even);
        CHECK(rep.bipartite == expect_even);
        CHECK(rep.dual_balanced == expect_even);
        CHECK(rep.gamma_is_dim == expect_even);
        CHECK(is_even(p) == expect_even);
    }
}

TEST_CASE("gamma and the bounds on the number of disjoint pieces") {
    auto dod = builders::dodecahedron();
    auto chi = chromatic_number(facet_intersection_graph(dod));
    CHECK(chi.value == 4);
    auto sb = s_bounds(dod);
    CHECK(sb.lower == 12 - 4);
    CHECK(sb.upper == 12 - 3);
    CHECK_FALSE(sb.tight);

    auto m = builders::blend_M();
    auto sm = s_bounds(m);
    CHECK(sm.lower == 6);
    CHECK(sm.upper == 6);
    CHECK(sm.tight);
}

TEST_CASE("a proper facet coloring induces a proper edge coloring") {
    auto m = builders::blend_M();
    auto chi = chromatic_number(facet_intersection_graph(m));
    REQUIRE(chi.value == 3);
    // Translate the witness onto facet labels as the edge-coloring expects.
    auto ec = induced_edge_coloring(m, chi.witness);
    CHECK(ec.proper);
    CHECK(ec.colors_used == 3);
    CHECK(ec.edge_colors.size() == 21); // every edge is colored
    CHECK(disjoint_facet_check(m));
}

TEST_CASE("two-face boundaries span the whole cycle space") {
    auto check = [](const SimplePolytope& p, std::size_t expected_rank) {
        auto cs = cycle_space_check(p);
        CHECK(cs.equal);
        CHECK(cs.rank == expected_rank);
        CHECK(cs.expected == expected_rank);
    };
    check(builders::cube(3), 5);
    check(builders::simplex(3), 3);
    check(builders::dodecahedron(), 11);
    check(builders::blend_M(), 8);
}

TEST_CASE("products multiply the face data and the groups") {
    auto prism = product_polytope(builders::simplex(2), builders::simplex(1));
    CHECK(prism.polytope.dim() == 3);
    CHECK(prism.polytope.f_vector() == std::array<std::size_t, 3>{6, 9, 5});
    CHECK(two_face_census(prism.polytope) ==
          std::map<std::size_t, int>{{3, 2}, {4, 3}});

    auto pg = pi_group(prism.polytope, 0);
    CHECK(pg.group.order() == 2);
    auto cls = classify_symmetric_product(pg.group);
    REQUIRE(cls.has_value());
    CHECK(*cls == std::vector<std::size_t>{1, 2});

    auto rep = verify_product(builders::simplex(2), 0, builders::simplex(1), 0);
    CHECK(rep.product);
    CHECK(rep.partitions_concatenate);
    CHECK(rep.order_product == rep.order_left * rep.order_right);

    auto big = verify_product(builders::simplex(3), 0, builders::simplex(2), 0);
    CHECK(big.order_product == 12);
    CHECK(big.product);
    CHECK(big.partitions_concatenate);
}

TEST_CASE("mixed products concatenate trivial and symmetric partitions") {
    // Square times triangle: the trivial group contributes singleton orbits,
    // the triangle contributes a full S2 orbit, and the product's partition
    // is their sorted concatenation (1,1,2).
    auto rep = verify_product(builders::cube(2), 0, builders::simplex(2), 0);
    CHECK(rep.product);
    CHECK(rep.partitions_concatenate);
    CHECK(rep.order_product == 2);

    auto pg = pi_group(product_polytope(builders::cube(2), builders::simplex(2))
                           .polytope,
                       0);
    auto cls = classify_symmetric_product(pg.group);
    REQUIRE(cls.has_value());
    CHECK(*cls == std::vector<std::size_t>{1, 1, 2});
}
