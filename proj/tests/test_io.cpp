#include <doctest.h>

#include <string>

#include <pxk/builders.hpp>
#include <pxk/errors.hpp>
#include <pxk/io.hpp>

using namespace pxk;

TEST_CASE("line format round-trips, with comments and blank lines ignored") {
    auto c = io::parse_complex("# a torus facet list\n"
                               "1 2 4\n"
                               "2,4,5  # mixed separators are fine\n"
                               "\n"
                               "4 5 7\n");
    CHECK(c.facet_count() == 3);
    CHECK(c.facet_index(Simplex::of_ints({2, 4, 5})) >= 0);

    auto text = io::write_complex_lines(c);
    auto back = io::parse_complex(text);
    CHECK(back.facets() == c.facets());
}

TEST_CASE("labels with separators survive a round trip by quoting") {
    auto sd = barycentric_subdivision(builders::simplex_boundary(3)).complex;
    auto text = io::write_complex_lines(sd);
    CHECK(text.find('"') != std::string::npos); // "{1,2}"-style labels
    auto back = io::parse_complex(text);
    CHECK(back.facets() == sd.facets());

    // Quoting arbitrary punctuation, escapes included.
    auto odd = SimplicialComplex::build({Simplex::of(
        {Label(std::string("a b")), Label(std::string("c\"d")),
         Label(std::string("e\\f"))})});
    auto round = io::parse_complex(io::write_complex_lines(odd));
    CHECK(round.facets() == odd.facets());

    CHECK_THROWS_AS(io::parse_complex("\"unterminated\n"), ValidationError);
}

TEST_CASE("JSON and line inputs are told apart by their first byte") {
    auto c = builders::torus_T();
    auto via_json = io::parse_complex(io::write_complex_json(c));
    auto via_lines = io::parse_complex(io::write_complex_lines(c));
    CHECK(via_json.facets() == c.facets());
    CHECK(via_lines.facets() == c.facets());
    // Digit-string labels normalize to integers either way.
    auto j = io::parse_complex("{\"facets\": [[\"1\", \"2\"], [2, 3]]}");
    CHECK(j.facet_index(Simplex::of_ints({1, 2})) >= 0);
    CHECK(j.facet_index(Simplex::of_ints({2, 3})) >= 0);

    CHECK_THROWS_AS(io::parse_complex("{\"facets\": \"oops\"}"), ValidationError);
    CHECK_THROWS_AS(io::parse_complex("{}"), ValidationError);
}

TEST_CASE("polytope JSON round-trips and validates") {
    auto p = builders::blend_M();
    auto text = io::write_polytope_json(p);
    auto back = io::parse_polytope(text);
    CHECK(back.dim() == p.dim());
    CHECK(back.facet_labels() == p.facet_labels());
    CHECK(back.vertex_labels() == p.vertex_labels());
    CHECK(io::write_polytope_json(back) == text); // canonical form is stable

    CHECK_THROWS_AS(io::parse_polytope("{\"dim\": 3}"), ValidationError);
    CHECK_THROWS_AS(io::parse_polytope("[1,2]"), ValidationError);
}

TEST_CASE("paths and loop files") {
    auto c = builders::torus_T();
    auto p = io::parse_path("[[1,2,4],[2,4,5],[2,3,5]]", c);
    CHECK(p.length() == 2);
    CHECK_FALSE(p.is_loop());

    auto loops = io::parse_loops(
        "[[[1,2,4],[2,4,5],[1,2,4]], [[1,2,4],[1,2,8],[1,2,4]]]", c);
    CHECK(loops.size() == 2);
    for (const auto& l : loops) CHECK(l.is_loop());

    CHECK_THROWS_AS(io::parse_path("[[1,2,4],[3,5,6]]", c), ValidationError);
    CHECK_THROWS_AS(io::parse_path("[[1,2,4],[9,9,9]]", c), ValidationError);
    CHECK_THROWS_AS(io::parse_path("[]", c), ValidationError);
}

TEST_CASE("the digest is the 64-bit FNV-1a of the canonical bytes") {
    // Published reference values for the empty string and "a".
    CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(io::fnv1a_hex("ab") != io::fnv1a_hex("ba"));

    // The digest of a complex is format-independent because it is taken over
    // the canonical line serialization.
    auto c = builders::anti_torus_A();
    CHECK(io::fnv1a_hex(io::write_complex_lines(io::parse_complex(
              io::write_complex_json(c)))) ==
          io::fnv1a_hex(io::write_complex_lines(c)));
}
