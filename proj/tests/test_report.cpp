#include <doctest.h>

#include <string>

#include <json.hpp>

#include <pxk/builders.hpp>
#include <pxk/errors.hpp>
#include <pxk/io.hpp>
#include <pxk/report.hpp>

#include "oracle.hpp"

using namespace pxk;
using nlohmann::json;

namespace {
json schema() {
    return json::parse(
        io::read_file(std::string(PXK_DATA_DIR) + "/report.schema.json"));
}

json parsed(const Report& rep) { return json::parse(rep.json); }
} // namespace

TEST_CASE("complex reports validate against the published schema") {
    auto s = schema();
    for (const auto& c :
         {builders::torus_T(), builders::anti_torus_A(),
          builders::simplex_boundary(3), builders::nonlocal_path(),
          builders::cycle(5),
          barycentric_subdivision(builders::simplex_boundary(3)).complex}) {
        auto rep = analyze_complex(c);
        std::string why;
        CHECK_MESSAGE(oracle::schema_valid(parsed(rep), s, &why), why);
        CHECK(rep.theorem_ok);
        CHECK_FALSE(rep.text.empty());
    }
}

TEST_CASE("polytope and coloring and path reports validate too") {
    auto s = schema();
    for (const auto& p : {builders::cube(3), builders::simplex(3),
                          builders::dodecahedron(), builders::blend_M()}) {
        auto rep = analyze_polytope(p);
        std::string why;
        CHECK_MESSAGE(oracle::schema_valid(parsed(rep), s, &why), why);
        CHECK(rep.theorem_ok);
    }
    std::string why;
    auto col = color_complex(builders::torus_T());
    CHECK_MESSAGE(oracle::schema_valid(parsed(col), schema(), &why), why);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    auto a = analyze_complex(builders::anti_torus_A());
    auto b = analyze_complex(builders::anti_torus_A());
    CHECK(a.json == b.json);
    CHECK(a.text == b.text);

    auto p = analyze_polytope(builders::dodecahedron());
    auto q = analyze_polytope(builders::dodecahedron());
    CHECK(p.json == q.json);
}

TEST_CASE("reports degrade to null sections instead of failing") {
    // A non-pure complex has no parity census, no group, no balancedness.
    auto mixed = SimplicialComplex::build(
        {Simplex::of_ints({1, 2, 3}), Simplex::of_ints({4, 5})});
    auto rep = analyze_complex(mixed);
    auto j = parsed(rep);
    CHECK_FALSE(j["pure"].get<bool>());
    CHECK(j["parity"].is_null());
    CHECK(j["odd_subgroup"].is_null());
    CHECK(j["balanced"].is_null());
    // The group at the base facet still exists; it just cannot see the
    // facets outside the base's dual component.
    CHECK(j["pi"]["order"].get<std::size_t>() == 1);
    CHECK_FALSE(j["pi"]["covers_all_facets"].get<bool>());
    CHECK(rep.theorem_ok); // nothing computed, nothing violated
    std::string why;
    CHECK_MESSAGE(oracle::schema_valid(j, schema(), &why), why);

    CHECK_THROWS_AS(color_complex(mixed), ValidationError);
}

TEST_CASE("the report's group data matches a direct computation") {
    auto c = builders::anti_torus_A();
    auto rep = analyze_complex(c);
    auto j = parsed(rep);
    int base = c.facet_index(Simplex::of_ints({1, 2, 4}));
    CHECK(j["base_facet"].get<std::string>() == "{1,2,4}");
    CHECK(base == 0); // lexicographically least facet is the default base
    CHECK(j["pi"]["order"].get<std::size_t>() == 3);
    CHECK(j["odd_subgroup"]["order"].get<std::size_t>() == 1);
    CHECK(j["odd_subgroup"]["contained_in_pi"].get<bool>());
    CHECK(j["balanced"]["balanced"].get<bool>() == false);
    CHECK(j["digest"].get<std::string>() ==
          io::fnv1a_hex(io::write_complex_lines(c)));
}

TEST_CASE("polytope reports carry the coloring theorem verdict") {
    auto rep = analyze_polytope(builders::blend_M());
    auto j = parsed(rep);
    const auto& ct = j["coloring_theorem"];
    CHECK(ct["agree"].get<bool>());
    CHECK(ct["even"].get<bool>());
    CHECK(ct["gamma"].get<int>() == 3);
    CHECK(j["s_bounds"]["tight"].get<bool>());
    CHECK(j["edge_coloring"]["proper"].get<bool>());
    CHECK(j["disjoint_facets"].get<bool>());
    CHECK(rep.theorem_ok);

    // Odd polytopes have no edge coloring and no disjoint-facet statement.
    auto odd = analyze_polytope(builders::simplex(3));
    auto jo = parsed(odd);
    CHECK(jo["edge_coloring"].is_null());
    CHECK(jo["disjoint_facets"].is_null());
    CHECK(odd.theorem_ok);
}

TEST_CASE("oversized inputs lose exactness, not validity") {
    auto big = io::read_polytope(std::string(PXK_DATA_DIR) + "/cell120.json");
    auto rep = analyze_polytope(big);
    auto j = parsed(rep);
    CHECK(j["coloring_theorem"].is_null()); // beyond the exact search
    CHECK_FALSE(j["gamma"]["exact"].get<bool>());
    CHECK(j["s_bounds"].is_null());
    CHECK(j["pi"]["order"].get<std::size_t>() == 24);
    CHECK(rep.theorem_ok);
    std::string why;
    CHECK_MESSAGE(oracle::schema_valid(j, schema(), &why), why);
}
