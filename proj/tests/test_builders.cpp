#include <doctest.h>

#include <set>
#include <vector>

#include <pxk/builders.hpp>
#include <pxk/errors.hpp>
#include <pxk/io.hpp>

using namespace pxk;

TEST_CASE("every registered builder constructs with its sample parameters") {
    for (const auto& entry : builders::available()) {
        std::vector<std::int64_t> params;
        if (entry.find("simplex_boundary") == 0 || entry.find("cube") == 0 ||
            entry.find("simplex") == 0 || entry.find("cross_polytope") == 0)
            params = {3};
        else if (entry.find("cycle") == 0)
            params = {5};
        else if (entry.find("random_pure") == 0)
            params = {2, 6, 42};
        auto name = entry.substr(0, entry.find(' '));
        auto g = builders::make(name, params);
        CHECK(g.name == name);
        CHECK((g.complex.has_value() || g.polytope.has_value()));
    }
    CHECK_THROWS_AS(builders::make("no_such_thing", {}), ValidationError);
    CHECK_THROWS_AS(builders::make("cube", {}), ValidationError);
    CHECK_THROWS_AS(builders::make("cube", {99}), ValidationError);
}

TEST_CASE("the two tori share every classical invariant") {
    auto t = builders::torus_T();
    auto a = builders::anti_torus_A();
    CHECK(t.f_vector() == std::vector<std::size_t>{9, 27, 18});
    CHECK(a.f_vector() == std::vector<std::size_t>{9, 27, 18});
    CHECK(manifold_precheck(t).passed());
    CHECK(manifold_precheck(a).passed());
    // Same vertex degrees in the 1-skeleton...
    auto degrees = [](const SimplicialComplex& c) {
        std::multiset<std::size_t> d;
        for (const auto& v : c.vertices()) {
            std::size_t n = 0;
            for (const auto& e : c.faces_of_dim(1))
                if (e.contains(v)) ++n;
            d.insert(n);
        }
        return d;
    };
    CHECK(degrees(t) == degrees(a));
    // ...but different facet lists.
    CHECK(t.facets() != a.facets());
}

TEST_CASE("cross-polytope boundaries match the dualized cubes by name") {
    for (int d = 2; d <= 4; ++d) {
        auto c = builders::cross_polytope(d);
        CHECK(c.dim() == d - 1);
        CHECK(c.facet_count() == (std::size_t(1) << d));
        CHECK(c.facets() == dualize(builders::cube(d)).facets());
    }
}

TEST_CASE("random pure complexes are reproducible and honest about size") {
    auto a = builders::random_pure(2, 12, 7);
    auto b = builders::random_pure(2, 12, 7);
    CHECK(a.facets() == b.facets());
    CHECK(a.pure());
    CHECK(a.dim() == 2);
    CHECK(a.facet_count() == 12);

    auto c = builders::random_pure(2, 12, 8);
    CHECK(io::write_complex_lines(a) != io::write_complex_lines(c));

    // Impossible requests are refused rather than looping forever.
    CHECK_THROWS_AS(builders::random_pure(0, 100, 1), ValidationError);
}

TEST_CASE("the blended polytope matches its bundled data file") {
    auto built = builders::blend_M();
    auto loaded = io::read_polytope(std::string(PXK_DATA_DIR) + "/blend_M.json");
    CHECK(built.dim() == loaded.dim());
    CHECK(built.facet_labels() == loaded.facet_labels());
    CHECK(built.vertex_labels() == loaded.vertex_labels());
    for (std::size_t v = 0; v < built.vertex_count(); ++v)
        CHECK(built.facets_of(static_cast<int>(v)) ==
              loaded.facets_of(static_cast<int>(v)));
}
