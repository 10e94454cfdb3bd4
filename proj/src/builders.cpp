#include "pxk/builders.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "pxk/errors.hpp"

namespace pxk::builders {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

// Vertex of the 3x3 toroidal grid at row r, column c (indices taken mod 3).
std::int64_t grid_vertex(int r, int c) { return 1 + 3 * (r % 3) + (c % 3); }

// Triangulation of the torus from the 3x3 grid.  Every square is split along
// the same diagonal; with flip_middle_column the squares of column 1 are
// split along the other diagonal instead.
SimplicialComplex grid_torus(bool flip_middle_column) {
    std::vector<Simplex> fs;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            std::int64_t a = grid_vertex(r, c), b = grid_vertex(r, c + 1);
            std::int64_t p = grid_vertex(r + 1, c), q = grid_vertex(r + 1, c + 1);
            if (flip_middle_column && c == 1) {
                fs.push_back(Simplex::of_ints({a, b, q}));
                fs.push_back(Simplex::of_ints({a, p, q}));
            } else {
                fs.push_back(Simplex::of_ints({a, b, p}));
                fs.push_back(Simplex::of_ints({b, p, q}));
            }
        }
    }
    return SimplicialComplex::build(std::move(fs));
}

// Binomial coefficient, saturating well above any feasible facet count.
std::uint64_t binomial_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    constexpr std::uint64_t cap = 1ull << 62;
    for (int i = 1; i <= k; ++i) {
        if (r > cap / static_cast<std::uint64_t>(n - k + i)) return cap;
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

}  // namespace

SimplicialComplex simplex_boundary(int d) {
    require(d >= 1 && d <= 20, "simplex_boundary: d must be in 1..20");
    std::vector<Simplex> fs;
    // All d-subsets of {1..d+1}: drop each vertex in turn.
    for (std::int64_t omit = 1; omit <= d + 1; ++omit) {
        std::vector<Label> verts;
        for (std::int64_t v = 1; v <= d + 1; ++v)
            if (v != omit) verts.emplace_back(v);
        fs.push_back(Simplex::of(std::move(verts)));
    }
    return SimplicialComplex::build(std::move(fs));
}

SimplicialComplex cycle(int n) {
    require(n >= 3 && n <= 1000000, "cycle: n must be in 3..1000000");
    std::vector<Simplex> fs;
    for (std::int64_t i = 1; i <= n; ++i)
        fs.push_back(Simplex::of_ints({i, i % n + 1}));
    return SimplicialComplex::build(std::move(fs));
}

SimplicialComplex cross_polytope(int d) {
    require(d >= 1 && d <= 16, "cross_polytope: d must be in 1..16");
    std::vector<Simplex> fs;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<Label> verts;
        for (int i = 0; i < d; ++i)
            verts.emplace_back(std::int64_t((mask >> i) & 1u ? 2 * i + 2 : 2 * i + 1));
        fs.push_back(Simplex::of(std::move(verts)));
    }
    return SimplicialComplex::build(std::move(fs));
}

SimplicialComplex torus_T() { return grid_torus(false); }

SimplicialComplex anti_torus_A() { return grid_torus(true); }

SimplicialComplex nonlocal_path() {
    return SimplicialComplex::build({
        Simplex::of_ints({1, 2, 5}),
        Simplex::of_ints({1, 2, 3}),
        Simplex::of_ints({2, 3, 4}),
        Simplex::of_ints({3, 4, 5}),
    });
}

SimplicialComplex random_pure(int d, int n, std::uint64_t seed) {
    require(d >= 0 && d <= 16, "random_pure: d must be in 0..16");
    require(n >= 1 && n <= 100000, "random_pure: n must be in 1..100000");
    const int pool = d + 2 + n / 2;
    require(binomial_capped(pool, d + 1) >= static_cast<std::uint64_t>(n),
            "random_pure: not enough distinct facets available");

    std::mt19937_64 gen(seed);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(pool));
    std::iota(labels.begin(), labels.end(), 1);

    std::set<Simplex> chosen;
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = 1000ull * static_cast<std::uint64_t>(n) + 1000;
    while (chosen.size() < static_cast<std::size_t>(n)) {
        if (++attempts > max_attempts)
            throw ValidationError("random_pure: sampling failed to converge");
        std::shuffle(labels.begin(), labels.end(), gen);
        std::vector<Label> verts;
        for (int i = 0; i <= d; ++i) verts.emplace_back(labels[static_cast<std::size_t>(i)]);
        chosen.insert(Simplex::of(std::move(verts)));
    }
    return SimplicialComplex::build({chosen.begin(), chosen.end()});
}

SimplePolytope cube(int d) {
    require(d >= 1 && d <= 12, "cube: d must be in 1..12");
    std::vector<Label> facets;
    for (std::int64_t i = 1; i <= 2 * d; ++i) facets.emplace_back(i);
    std::map<Label, std::vector<Label>> verts;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<Label> inc;
        for (int i = 0; i < d; ++i)
            inc.emplace_back(std::int64_t((mask >> i) & 1u ? 2 * i + 2 : 2 * i + 1));
        verts[Label(std::int64_t(mask))] = std::move(inc);
    }
    return SimplePolytope::build(d, std::move(facets), std::move(verts));
}

SimplePolytope simplex(int d) {
    require(d >= 1 && d <= 20, "simplex: d must be in 1..20");
    std::vector<Label> facets;
    for (std::int64_t i = 1; i <= d + 1; ++i) facets.emplace_back(i);
    std::map<Label, std::vector<Label>> verts;
    for (std::int64_t v = 1; v <= d + 1; ++v) {
        std::vector<Label> inc;
        for (std::int64_t f = 1; f <= d + 1; ++f)
            if (f != v) inc.emplace_back(f);
        verts[Label(v)] = std::move(inc);
    }
    return SimplePolytope::build(d, std::move(facets), std::move(verts));
}

SimplePolytope dodecahedron() {
    // The twelve facets are named after the icosahedron vertices they are dual
    // to: poles N/S and the upper/lower five-rings u1..u5, l1..l5.  The twenty
    // polytope vertices are the icosahedron triangles.
    auto u = [](int i) { return "u" + std::to_string(i % 5 + 1); };
    auto l = [](int i) { return "l" + std::to_string(i % 5 + 1); };
    std::vector<std::array<std::string, 3>> triangles;
    for (int i = 0; i < 5; ++i) {
        triangles.push_back({"N", u(i), u(i + 1)});
        triangles.push_back({u(i), u(i + 1), l(i)});
        triangles.push_back({l(i), l(i + 1), u(i + 1)});
        triangles.push_back({"S", l(i), l(i + 1)});
    }

    std::vector<Label> facets;
    facets.emplace_back(std::string("N"));
    facets.emplace_back(std::string("S"));
    for (int i = 0; i < 5; ++i) facets.emplace_back(u(i));
    for (int i = 0; i < 5; ++i) facets.emplace_back(l(i));

    std::map<Label, std::vector<Label>> verts;
    for (auto tri : triangles) {
        std::sort(tri.begin(), tri.end());
        Label name(tri[0] + "." + tri[1] + "." + tri[2]);
        verts[name] = {Label(tri[0]), Label(tri[1]), Label(tri[2])};
    }
    return SimplePolytope::build(3, std::move(facets), std::move(verts));
}

SimplePolytope permutohedron() {
    // Facet labels are digit strings of position subsets: facet S contains the
    // vertices whose positions in S carry the values 1..|S|.
    auto subset_label = [](const std::vector<int>& positions) {
        std::string s;
        for (int p : positions) s += std::to_string(p);
        return Label::parse(s);
    };

    std::vector<Label> facets;
    for (std::uint32_t mask = 1; mask < 15u; ++mask) {  // proper nonempty subsets
        std::vector<int> ps;
        for (int p = 1; p <= 4; ++p)
            if (mask >> (p - 1) & 1u) ps.push_back(p);
        facets.push_back(subset_label(ps));
    }

    std::map<Label, std::vector<Label>> verts;
    std::array<int, 4> val = {1, 2, 3, 4};  // val[pos-1] = value at position pos
    do {
        std::int64_t name = 0;
        for (int pos = 0; pos < 4; ++pos) name = name * 10 + val[static_cast<std::size_t>(pos)];
        std::vector<Label> inc;
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> ps;
            for (int pos = 1; pos <= 4; ++pos)
                if (val[static_cast<std::size_t>(pos - 1)] <= k) ps.push_back(pos);
            inc.push_back(subset_label(ps));
        }
        verts[Label(name)] = std::move(inc);
    } while (std::next_permutation(val.begin(), val.end()));
    return SimplePolytope::build(3, std::move(facets), std::move(verts));
}

SimplePolytope blend_M() {
    // Two 3-cubes, each truncated at the all-ones vertex, glued along the three
    // facets meeting that vertex.  Bit i of a vertex selects facet Ai (left
    // cube) or Bi (right cube) when 0 and the shared facet Ci when 1.
    std::vector<Label> facets;
    for (int i = 1; i <= 3; ++i) facets.emplace_back("A" + std::to_string(i));
    for (int i = 1; i <= 3; ++i) facets.emplace_back("B" + std::to_string(i));
    for (int i = 1; i <= 3; ++i) facets.emplace_back("C" + std::to_string(i));

    std::map<Label, std::vector<Label>> verts;
    for (std::uint32_t mask = 0; mask < 7u; ++mask) {  // all-ones corner removed
        std::string bits;
        for (int i = 0; i < 3; ++i) bits += (mask >> i & 1u) ? '1' : '0';
        std::vector<Label> left, right;
        for (int i = 0; i < 3; ++i) {
            const std::string idx = std::to_string(i + 1);
            left.emplace_back((mask >> i & 1u ? "C" : "A") + idx);
            right.emplace_back((mask >> i & 1u ? "C" : "B") + idx);
        }
        verts[Label("P" + bits)] = std::move(left);
        verts[Label("Q" + bits)] = std::move(right);
    }
    return SimplePolytope::build(3, std::move(facets), std::move(verts));
}

Generated make(const std::string& name, const std::vector<std::int64_t>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ValidationError("builder '" + name + "' expects " +
                                  std::to_string(k) + " parameter(s), got " +
                                  std::to_string(params.size()));
    };
    auto as_int = [&](std::size_t i) {
        if (params[i] < -1000000 || params[i] > 1000000)
            throw ValidationError("builder parameter out of range");
        return static_cast<int>(params[i]);
    };

    Generated g;
    g.name = name;
    if (name == "simplex_boundary") {
        need(1);
        g.complex = simplex_boundary(as_int(0));
    } else if (name == "cycle") {
        need(1);
        g.complex = cycle(as_int(0));
    } else if (name == "cross_polytope") {
        need(1);
        g.complex = cross_polytope(as_int(0));
    } else if (name == "torus_T") {
        need(0);
        g.complex = torus_T();
    } else if (name == "anti_torus_A") {
        need(0);
        g.complex = anti_torus_A();
    } else if (name == "nonlocal_path") {
        need(0);
        g.complex = nonlocal_path();
    } else if (name == "random_pure") {
        need(3);
        g.complex = random_pure(as_int(0), as_int(1), static_cast<std::uint64_t>(params[2]));
    } else if (name == "cube") {
        need(1);
        g.polytope = cube(as_int(0));
    } else if (name == "simplex") {
        need(1);
        g.polytope = simplex(as_int(0));
    } else if (name == "dodecahedron") {
        need(0);
        g.polytope = dodecahedron();
    } else if (name == "permutohedron") {
        need(0);
        g.polytope = permutohedron();
    } else if (name == "blend_M") {
        need(0);
        g.polytope = blend_M();
    } else {
        std::string names;
        for (const auto& a : available()) {
            if (!names.empty()) names += ", ";
            names += a.substr(0, a.find(' '));
        }
        throw ValidationError("unknown builder '" + name + "'; available: " + names);
    }
    return g;
}

std::vector<std::string> available() {
    return {
        "simplex_boundary d", "cycle n",      "cross_polytope d", "cube d",
        "simplex d",          "dodecahedron", "permutohedron",    "torus_T",
        "anti_torus_A",       "nonlocal_path", "blend_M",         "random_pure d n seed",
    };
}

}  // namespace pxk::builders
