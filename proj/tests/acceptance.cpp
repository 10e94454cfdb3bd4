// Acceptance checks: one line of output per criterion, PASS or FAIL, with a
// nonzero exit code when anything fails.  The 120-cell item reads the bundled
// data file and only runs under --slow.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <pxk/builders.hpp>
#include <pxk/coloring.hpp>
#include <pxk/errors.hpp>
#include <pxk/io.hpp>
#include <pxk/polytope.hpp>
#include <pxk/projectivity.hpp>

#include "oracle.hpp"

using namespace pxk;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) throw Failure{what};
}

int run(int idx, const std::string& name,
        const std::function<void(std::string&)>& body) {
    std::string note;
    try {
        body(note);
        std::printf("PASS  %d. %s%s\n", idx, name.c_str(), note.c_str());
        return 0;
    } catch (const Failure& f) {
        std::printf("FAIL  %d. %s: %s\n", idx, name.c_str(), f.detail.c_str());
    } catch (const std::exception& e) {
        std::printf("FAIL  %d. %s: unexpected error: %s\n", idx, name.c_str(),
                    e.what());
    }
    return 1;
}

FacetPath loop_of(const SimplicialComplex& c,
                  std::initializer_list<std::initializer_list<std::int64_t>> fs) {
    std::vector<Simplex> seq;
    for (auto f : fs) seq.push_back(Simplex::of_ints(f));
    return FacetPath::of_simplices(c, seq);
}

std::string perm_str(const Permutation& p) {
    return cycle_string(p, {Label(std::int64_t(1)), Label(std::int64_t(2)),
                            Label(std::int64_t(4))});
}

// ---------------------------------------------------------------------------

void torus_pair(std::string&) {
    auto t = builders::torus_T();
    auto a = builders::anti_torus_A();
    int bt = t.facet_index(Simplex::of_ints({1, 2, 4}));
    int ba = a.facet_index(Simplex::of_ints({1, 2, 4}));
    require(bt >= 0 && ba >= 0, "base facet {1,2,4} missing");

    require(pi_group(t, bt).group.order() == 1, "torus group is not trivial");
    auto ga = pi_group(a, ba).group;
    require(ga.order() == 3, "anti-torus group order != 3");
    require(ga.contains(Permutation({2, 0, 1})),
            "anti-torus group lacks (1 4 2)");

    auto p = [&](const SimplicialComplex& c) {
        return loop_of(c, {{1, 2, 4}, {2, 4, 5}, {4, 5, 7}, {5, 7, 8},
                           {1, 7, 8}, {1, 2, 8}, {1, 2, 4}});
    };
    auto q = loop_of(t, {{1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {3, 5, 6},
                         {1, 3, 6}, {1, 4, 6}, {1, 2, 4}});
    auto qp = loop_of(a, {{1, 2, 4}, {2, 4, 5}, {2, 5, 6}, {2, 3, 6},
                          {1, 3, 6}, {1, 4, 6}, {1, 2, 4}});

    require(projectivity(t, p(t)).as_permutation().is_identity(),
            "<p> on the torus is not the identity");
    require(projectivity(t, q).as_permutation().is_identity(),
            "<q> on the torus is not the identity");
    require(projectivity(a, p(a)).as_permutation().is_identity(),
            "<p> on the anti-torus is not the identity");
    require_eq(perm_str(projectivity(a, qp).as_permutation()),
               std::string("(1 4 2)"), "<q'> on the anti-torus is not (1 4 2)");
}

void regular_polytopes(bool slow, std::string& note) {
    auto expect = [](const SimplePolytope& p, std::size_t order,
                     std::vector<std::size_t> partition, const char* name) {
        auto pg = pi_group(p, 0);
        require(pg.group.order() == order,
                std::string(name) + ": wrong group order");
        auto cls = classify_symmetric_product(pg.group);
        require(cls.has_value(), std::string(name) + ": not a product");
        require(*cls == partition, std::string(name) + ": wrong partition");
    };
    expect(builders::simplex(3), 6, {3}, "3-simplex");
    expect(builders::simplex(4), 24, {4}, "4-simplex");
    expect(builders::dodecahedron(), 6, {3}, "dodecahedron");
    expect(builders::cube(3), 1, {1, 1, 1}, "3-cube");
    expect(builders::cube(4), 1, {1, 1, 1, 1}, "4-cube");

    if (!slow) {
        note = "  (120-cell skipped; pass --slow)";
        return;
    }
    std::string file = std::string(PXK_DATA_DIR) + "/cell120.json";
    SimplePolytope big = [&] {
        try {
            return io::read_polytope(file);
        } catch (const ValidationError&) {
            throw Failure{"optional data file " + file + " is unreadable"};
        }
    }();
    expect(big, 24, {4}, "120-cell");
}

void coloring_theorem_corpus(std::string&) {
    std::vector<std::pair<std::string, SimplePolytope>> corpus;
    corpus.emplace_back("3-cube", builders::cube(3));
    corpus.emplace_back("4-cube", builders::cube(4));
    corpus.emplace_back("tetrahedron", builders::simplex(3));
    corpus.emplace_back("dodecahedron", builders::dodecahedron());
    corpus.emplace_back("permutohedron", builders::permutohedron());
    corpus.emplace_back("blend", builders::blend_M());
    corpus.emplace_back(
        "prism",
        product_polytope(builders::simplex(2), builders::simplex(1)).polytope);
    for (const auto& [name, p] : corpus) {
        auto rep = coloring_theorem_check(p);
        bool pairwise = rep.even == rep.bipartite &&
                        rep.bipartite == rep.dual_balanced &&
                        rep.dual_balanced == rep.gamma_is_dim;
        require(pairwise && rep.agree,
                name + ": the four criteria disagree (even=" +
                    std::to_string(rep.even) + " bipartite=" +
                    std::to_string(rep.bipartite) + " dual_balanced=" +
                    std::to_string(rep.dual_balanced) + " gamma=" +
                    std::to_string(rep.gamma) + ")");
    }
}

void blended_polytope(std::string&) {
    auto m = builders::blend_M();
    require(m.f_vector() == std::array<std::size_t, 3>{14, 21, 9},
            "wrong f-vector");
    require(is_even(m), "not even");

    auto bp = is_bipartite(vertex_edge_graph(m));
    require(bp.bipartite, "graph is not bipartite");
    require(bp.classes->first.size() == 7 && bp.classes->second.size() == 7,
            "bipartition classes are not 7+7");

    auto chi = chromatic_number(facet_intersection_graph(m));
    require(chi.exact && chi.value == 3, "gamma != 3");

    auto sb = s_bounds(m);
    require(sb.lower == 6 && sb.upper == 6 && sb.tight, "s-bounds not (6,6)");

    auto ec = induced_edge_coloring(m, chi.witness);
    require(ec.proper, "induced edge coloring is improper");
    require(ec.colors_used == 3, "induced edge coloring needs != 3 colors");
    require(ec.edge_colors.size() == 21, "not all 21 edges colored");

    require(disjoint_facet_check(m), "swapped facets are not disjoint");
}

void joins_and_products(std::string&) {
    auto c3 = builders::cycle(3);
    auto jp = verify_join_product(c3, 0, c3, 0);
    require(jp.order_join == 4, "joined cycles: group order != 4");
    require(jp.product, "joined cycles: not the product of the factors");

    auto prism = product_polytope(builders::simplex(2), builders::simplex(1));
    auto pg = pi_group(prism.polytope, 0);
    require(pg.group.order() == 2, "prism group order != 2");
    auto cls = classify_symmetric_product(pg.group);
    require(cls.has_value() && *cls == std::vector<std::size_t>{1, 2},
            "prism partition != (1,2)");

    // Two-step crossings in a join commute: stepping left-then-right equals
    // right-then-left for 200 random facet quadruples in random joins.
    std::mt19937_64 rng(0x1209);
    std::vector<SimplicialComplex> pool = {
        builders::cycle(3),           builders::cycle(4),
        builders::cycle(5),           builders::cycle(6),
        builders::simplex_boundary(2), builders::simplex_boundary(3)};
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    for (int i = 0; i < 200; ++i) {
        const auto& left = pool[pick(pool.size())];
        const auto& right = pool[pick(pool.size())];
        auto jr = join(left, right);

        const auto& le = left.dual_graph().edges;
        const auto& re = right.dual_graph().edges;
        auto [la, lb] = [&] {
            const auto& e = le[pick(le.size())];
            return rng() & 1 ? std::pair(e.a, e.b) : std::pair(e.b, e.a);
        }();
        auto [ra, rb] = [&] {
            const auto& e = re[pick(re.size())];
            return rng() & 1 ? std::pair(e.a, e.b) : std::pair(e.b, e.a);
        }();
        Simplex s = left.facet(la), t = left.facet(lb);
        Simplex sp = jr.map_right(right.facet(ra));
        Simplex tp = jr.map_right(right.facet(rb));

        auto path1 = FacetPath::of_simplices(
            jr.complex,
            {s.union_with(sp), s.union_with(tp), t.union_with(tp)});
        auto path2 = FacetPath::of_simplices(
            jr.complex,
            {s.union_with(sp), t.union_with(sp), t.union_with(tp)});
        auto p1 = projectivity(jr.complex, path1);
        auto p2 = projectivity(jr.complex, path2);
        require(p1.image_pos == p2.image_pos,
                "crossing order changed the projectivity (sample " +
                    std::to_string(i) + ")");
    }
}

void random_spheres(std::string&) {
    int spheres = 0;
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(20250816u + static_cast<unsigned>(i));
        auto c = SimplicialComplex::build(
            oracle::random_sphere(rng, i % 3, (i * 7) % 5));
        require(c.facet_count() <= 8, "generator exceeded 8 facets");
        auto mp = manifold_precheck(c);
        require(mp.passed() && mp.closed,
                "sample " + std::to_string(i) + " is not a closed surface");
        ++spheres;

        auto pg = pi_group(c, 0);
        require(pg.covers_all_facets, "sphere dual graph disconnected");
        auto ref = oracle::projectivity_group(oracle::facet_lists(c), 0);
        require(oracle::matches(pg, ref),
                "group != exhaustive oracle on sample " + std::to_string(i));

        auto odd = odd_subgroup(c, 0);
        require(odd.group.subgroup_of(pg.group),
                "odd subgroup not contained in the group");
        require(odd.group.same_group(pg.group),
                "odd subgroup is proper on a sphere (sample " +
                    std::to_string(i) + ")");
    }
    require(spheres == 50, "wrong sample count");
}

void path_algebra(std::string&) {
    std::vector<SimplicialComplex> pool = {
        builders::torus_T(), builders::anti_torus_A(),
        builders::simplex_boundary(4),
        barycentric_subdivision(builders::simplex_boundary(3)).complex};
    std::mt19937_64 rng(0x715);
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    auto random_walk = [&](const SimplicialComplex& c, int from, int len) {
        std::vector<int> w{from};
        for (int s = 0; s < len; ++s) {
            const auto& nb = c.dual_graph().adj[w.back()];
            w.push_back(nb[pick(nb.size())].first);
        }
        return w;
    };

    // Composition and inversion laws on 500 random paths.
    for (int i = 0; i < 500; ++i) {
        const auto& c = pool[pick(pool.size())];
        int start = static_cast<int>(pick(c.facet_count()));
        auto walk = random_walk(c, start, 2 + static_cast<int>(pick(9)));
        auto cut = 1 + pick(walk.size() - 2);
        std::vector<int> front(walk.begin(), walk.begin() + cut + 1);
        std::vector<int> back(walk.begin() + cut, walk.end());
        auto p = FacetPath::of(c, front), q = FacetPath::of(c, back);

        auto whole = projectivity(c, p.concat(q));
        auto split = projectivity(c, p).then(projectivity(c, q));
        require(whole.image_pos == split.image_pos &&
                    whole.source == split.source && whole.target == split.target,
                "composition law failed (sample " + std::to_string(i) + ")");

        auto fwd = projectivity(c, p);
        auto bwd = projectivity(c, p.reversed());
        require(fwd.inverse().image_pos == bwd.image_pos,
                "inversion law failed (sample " + std::to_string(i) + ")");
    }

    // Change of base is conjugation, on 100 random walks.
    for (int i = 0; i < 100; ++i) {
        const auto& c = pool[pick(pool.size())];
        int b0 = static_cast<int>(pick(c.facet_count()));
        auto walk = random_walk(c, b0, 1 + static_cast<int>(pick(10)));
        auto bc = base_change(c, b0, walk.back(), FacetPath::of(c, walk));
        require(bc.conjugate,
                "base change is not a conjugation (sample " + std::to_string(i) +
                    ")");
        require(bc.group0.order() == bc.group1.order(),
                "conjugate groups differ in order");
    }

    // Lagrange divisibility and witness properness across the pool.
    for (const auto& c : pool) {
        auto pg = pi_group(c, 0);
        std::size_t full = 1;
        for (std::size_t k = 2; k <= c.facet(0).size(); ++k) full *= k;
        require(full % pg.group.order() == 0,
                "group order does not divide the symmetric group order");
        auto odd = odd_subgroup(c, 0);
        require(pg.group.order() % odd.group.order() == 0,
                "odd subgroup order does not divide the group order");
        require(odd.group.subgroup_of(pg.group), "odd subgroup not contained");

        auto bal = is_balanced(c);
        if (bal.balanced) {
            require(bal.witness.has_value(), "balanced but no witness");
            require(one_skeleton(c).proper(*bal.witness),
                    "balanced witness is improper");
            std::set<int> used;
            for (auto [_, col] : *bal.witness) used.insert(col);
            require(static_cast<int>(used.size()) <= c.dim() + 1,
                    "balanced witness uses too many colors");
        }
    }
}

void cycle_space_ranks(std::string&) {
    auto expect = [](const SimplePolytope& p, std::size_t rank,
                     const char* name) {
        auto cs = cycle_space_check(p);
        require(cs.rank == rank && cs.expected == rank && cs.equal,
                std::string(name) + ": rank " + std::to_string(cs.rank) +
                    " vs expected " + std::to_string(rank));
    };
    expect(builders::cube(3), 5, "3-cube");
    expect(builders::dodecahedron(), 11, "dodecahedron");
    expect(builders::simplex(3), 3, "tetrahedron");
    expect(builders::blend_M(), 8, "blend");

    for (const auto& p :
         {builders::cube(3), builders::cube(4), builders::permutohedron(),
          builders::blend_M()})
        if (is_even(p))
            require(p.vertex_count() % 2 == 0,
                    "even polytope with an odd number of vertices");
}

void balanced_subdivisions(std::string&) {
    for (const auto& c :
         {builders::anti_torus_A(), builders::simplex_boundary(3)}) {
        auto sd = barycentric_subdivision(c);
        auto bal = is_balanced(sd.complex);
        require(bal.balanced, "subdivision is not balanced");
        require(bal.witness.has_value(), "no witness");
        require(one_skeleton(sd.complex).proper(*bal.witness),
                "witness is improper");
        Coloring canon;
        for (const auto& [v, d] : sd.face_dim) canon[v] = d;
        require(one_skeleton(sd.complex).proper(canon),
                "face-dimension coloring is improper");
    }
}

} // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--slow") slow = true;

    int failures = 0;
    failures += run(1, "torus pair loop actions", torus_pair);
    failures += run(2, "regular polytope groups",
                    [&](std::string& note) { regular_polytopes(slow, note); });
    failures += run(3, "coloring criteria agree on the corpus",
                    coloring_theorem_corpus);
    failures += run(4, "blended polytope profile", blended_polytope);
    failures += run(5, "joins and products", joins_and_products);
    failures += run(6, "random spheres match the exhaustive oracle",
                    random_spheres);
    failures += run(7, "path algebra, conjugation, divisibility, witnesses",
                    path_algebra);
    failures += run(8, "cycle-space ranks", cycle_space_ranks);
    failures += run(9, "subdivisions are balanced", balanced_subdivisions);

    if (failures)
        std::printf("%d of 9 criteria FAILED\n", failures);
    else
        std::printf("all 9 criteria passed\n");
    return failures ? 1 : 0;
}
