#include "pxk/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "pxk/coloring.hpp"
#include "pxk/errors.hpp"
#include "pxk/io.hpp"
#include "pxk/permutation.hpp"
#include "pxk/projectivity.hpp"

namespace pxk {

namespace {

using nlohmann::json;

json partition_json(const PermutationGroup& g) {
    auto cls = classify_symmetric_product(g);
    if (!cls) return json("not a product");
    json arr = json::array();
    for (std::size_t d : *cls) arr.push_back(d);
    return arr;
}

std::string partition_text(const json& p) {
    if (p.is_string()) return p.get<std::string>();
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i].get<std::size_t>());
    }
    return out + ")";
}

json witness_json(const Coloring& col) {
    json w;
    for (const auto& [l, c] : col) w[l.str()] = c;
    return w;
}

// Group section shared by complex and polytope reports.  node_name renders a
// dual-graph node (a facet of the complex, a vertex of the polytope).
template <typename NodeName>
json pi_json(const PiGroupResult& pg, const std::vector<Label>& ground,
             NodeName&& node_name) {
    json gens = json::array(), loops = json::array();
    for (const auto& g : pg.gens) {
        gens.push_back(cycle_string(g.perm, ground));
        json loop = json::array();
        for (int f : g.loop.facets()) loop.push_back(node_name(f));
        loops.push_back(std::move(loop));
    }
    json tree = json::array();
    for (const auto& [a, b] : pg.tree_edges)
        tree.push_back(json::array({node_name(a), node_name(b)}));
    json j;
    j["order"] = pg.group.order();
    j["generators"] = std::move(gens);
    j["generator_loops"] = std::move(loops);
    j["partition"] = partition_json(pg.group);
    j["spanning_tree"] = std::move(tree);
    j["covers_all_facets"] = pg.covers_all_facets;
    return j;
}

json balanced_json(const SimplicialComplex& c) {
    if (!c.pure()) return json(nullptr);
    try {
        BalancedResult b = is_balanced(c);
        json j;
        j["balanced"] = b.balanced;
        j["by_propagation"] = b.by_propagation;
        j["witness"] = b.witness ? witness_json(*b.witness) : json(nullptr);
        return j;
    } catch (const ValidationError&) {
        return json(nullptr); // out of reach of the exact search
    }
}

std::string balanced_text(const json& b) {
    if (b.is_null()) return "undecided";
    if (!b["balanced"].get<bool>()) return "no";
    return b["by_propagation"].get<bool>() ? "yes (by propagation)"
                                           : "yes (by search)";
}

// At most a screenful of generators in text form; JSON keeps them all.
void append_generators(std::ostringstream& t, const json& gens) {
    bool any = false;
    int shown = 0, skipped = 0;
    for (const auto& g : gens) {
        if (g.get<std::string>() == "()") continue; // identity loops add nothing
        if (shown == 12) {
            ++skipped;
            continue;
        }
        t << (any ? " " : ", generators: ") << g.get<std::string>();
        any = true;
        ++shown;
    }
    if (skipped) t << " ... (" << skipped << " more)";
    t << "\n";
}

std::string render_report(const json& j, const std::string& body) {
    std::ostringstream t;
    t << j["kind"].get<std::string>() << "  digest=" << j["digest"].get<std::string>()
      << "\n" << body;
    return t.str();
}

} // namespace

Report analyze_complex(const SimplicialComplex& c, int base) {
    if (base == -1) base = 0;
    if (base < 0 || static_cast<std::size_t>(base) >= c.facet_count())
        throw ValidationError("base facet index out of range");

    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "complex";
    j["digest"] = io::fnv1a_hex(io::write_complex_lines(c));
    j["dim"] = c.dim();
    j["pure"] = c.pure();
    j["facet_count"] = c.facet_count();
    j["vertex_count"] = c.vertices().size();
    json fv = json::array();
    for (std::size_t n : c.f_vector()) fv.push_back(n);
    j["f_vector"] = std::move(fv);
    j["strongly_connected"] = is_strongly_connected(c);
    j["locally_strongly_connected"] = is_locally_strongly_connected(c);

    ManifoldReport m = manifold_precheck(c);
    j["manifold_precheck"] = {
        {"pure", m.pure},
        {"ridges_at_most_two", m.ridges_at_most_two},
        {"closed", m.closed},
        {"codim2_cyclic", m.codim2_cyclic},
        {"vertex_links_checked", m.vertex_links_checked},
        {"vertex_links_spherical", m.vertex_links_spherical},
        {"passed", m.passed()},
    };

    if (c.pure()) {
        int even = 0, odd = 0, non_cycle = 0;
        for (const auto& k : codim2_faces(c)) {
            if (!k.is_cycle)
                ++non_cycle;
            else if (k.odd())
                ++odd;
            else
                ++even;
        }
        j["parity"] = {{"even", even}, {"odd", odd}, {"non_cycle", non_cycle}};
    } else {
        j["parity"] = nullptr;
    }

    auto facet_name = [&](int f) { return c.facet(f).str(); };
    j["base_facet"] = facet_name(base);
    PiGroupResult pg = pi_group(c, base);
    const std::vector<Label>& ground = c.facet(base).vertices();
    j["pi"] = pi_json(pg, ground, facet_name);

    bool odd_in_pi = true;
    try {
        OddSubgroupResult og = odd_subgroup(c, base);
        json gens = json::array(), faces = json::array();
        for (const auto& g : og.gens) {
            gens.push_back(cycle_string(g.perm, ground));
            faces.push_back(g.face.str());
        }
        odd_in_pi = og.group.subgroup_of(pg.group);
        j["odd_subgroup"] = {{"order", og.group.order()},
                             {"generators", std::move(gens)},
                             {"faces", std::move(faces)},
                             {"contained_in_pi", odd_in_pi}};
    } catch (const ValidationError&) {
        j["odd_subgroup"] = nullptr; // some codimension-2 star is not a cycle
    }

    j["balanced"] = balanced_json(c);

    Report rep;
    rep.theorem_ok = odd_in_pi;
    rep.json = j.dump(2) + "\n";

    std::ostringstream t;
    t << "dim=" << c.dim() << "  facets=" << c.facet_count()
      << "  vertices=" << c.vertices().size() << "  pure=" << (c.pure() ? "yes" : "no")
      << "\nstrongly connected: " << (j["strongly_connected"].get<bool>() ? "yes" : "no")
      << "  locally: " << (j["locally_strongly_connected"].get<bool>() ? "yes" : "no")
      << "\nmanifold precheck: " << (m.passed() ? "passed" : "failed") << "\n";
    if (!j["parity"].is_null())
        t << "codim-2 parity: " << j["parity"]["even"].get<int>() << " even, "
          << j["parity"]["odd"].get<int>() << " odd, "
          << j["parity"]["non_cycle"].get<int>() << " non-cycle\n";
    t << "base facet " << j["base_facet"].get<std::string>() << "\n"
      << "pi: order " << pg.group.order() << ", partition "
      << partition_text(j["pi"]["partition"]);
    append_generators(t, j["pi"]["generators"]);
    if (j["odd_subgroup"].is_null())
        t << "odd subgroup: not defined (a codim-2 star is not a cycle)\n";
    else
        t << "odd subgroup: order " << j["odd_subgroup"]["order"].get<std::size_t>()
          << (odd_in_pi ? "" : "  NOT CONTAINED IN PI") << "\n";
    t << "balanced: " << balanced_text(j["balanced"]) << "\n";
    rep.text = render_report(j, t.str());
    return rep;
}

Report analyze_polytope(const SimplePolytope& p, int base_vertex) {
    if (base_vertex == -1) base_vertex = 0;
    if (base_vertex < 0 ||
        static_cast<std::size_t>(base_vertex) >= p.vertex_count())
        throw ValidationError("base vertex index out of range");

    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "polytope";
    j["digest"] = io::fnv1a_hex(io::write_polytope_json(p));
    j["dim"] = p.dim();
    auto fv = p.f_vector();
    j["f_vector"] = json::array({fv[0], fv[1], fv[2]});

    std::map<std::size_t, int> census;
    for (const auto& tf : p.two_faces()) census[tf.boundary.size()]++;
    json cj;
    for (const auto& [size, count] : census) cj[std::to_string(size)] = count;
    j["two_face_sizes"] = std::move(cj);

    const bool even = is_even(p);
    j["even"] = even;

    BipartiteResult bp = is_bipartite(vertex_edge_graph(p));
    {
        json b;
        b["bipartite"] = bp.bipartite;
        if (bp.classes)
            b["class_sizes"] =
                json::array({bp.classes->first.size(), bp.classes->second.size()});
        else
            b["class_sizes"] = nullptr;
        if (bp.odd_cycle) {
            json cyc = json::array();
            for (const auto& l : *bp.odd_cycle) cyc.push_back(l.str());
            b["odd_cycle"] = std::move(cyc);
        } else {
            b["odd_cycle"] = nullptr;
        }
        j["bipartite"] = std::move(b);
    }

    bool agree_ok = true;
    bool have_theorem = false;
    ColoringTheoremReport ct;
    try {
        ct = coloring_theorem_check(p);
        have_theorem = true;
        j["coloring_theorem"] = {
            {"even", ct.even},           {"bipartite", ct.bipartite},
            {"dual_balanced", ct.dual_balanced}, {"gamma", ct.gamma},
            {"gamma_is_dim", ct.gamma_is_dim},   {"agree", ct.agree},
        };
        agree_ok = ct.agree;
        j["gamma"] = {{"value", ct.gamma}, {"exact", true}};
        SBounds sb = s_bounds(p);
        j["s_bounds"] = {{"lower", sb.lower}, {"upper", sb.upper}, {"tight", sb.tight}};
    } catch (const ValidationError&) {
        j["coloring_theorem"] = nullptr; // exact coloring out of reach
        ChromaticResult chi = chromatic_number(facet_intersection_graph(p));
        j["gamma"] = {{"value", chi.value}, {"exact", chi.exact}};
        j["s_bounds"] = nullptr;
    }

    CycleSpaceReport cs = cycle_space_check(p);
    j["cycle_space"] = {
        {"rank", cs.rank}, {"expected", cs.expected}, {"equal", cs.equal}};

    j["disjoint_facets"] = even ? json(disjoint_facet_check(p)) : json(nullptr);

    if (even && have_theorem && ct.gamma == p.dim()) {
        ChromaticResult chi =
            chromatic_number(facet_intersection_graph(p), p.dim());
        EdgeColoringResult ec = induced_edge_coloring(p, chi.witness);
        j["edge_coloring"] = {{"colors_used", ec.colors_used},
                              {"proper", ec.proper}};
    } else {
        j["edge_coloring"] = nullptr;
    }

    // The group lives on the dual complex; name its nodes by vertex label.
    SimplicialComplex dual = dualize(p);
    std::map<int, std::string> node_name;
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        node_name[dual.facet_index(p.facet_set(static_cast<int>(v)))] =
            p.vertex_label(static_cast<int>(v)).str();
    j["base_vertex"] = p.vertex_label(base_vertex).str();
    PiGroupResult pg = pi_group(p, base_vertex);
    const Simplex base_set = p.facet_set(base_vertex);
    j["pi"] = pi_json(pg, base_set.vertices(),
                      [&](int f) { return node_name.at(f); });

    Report rep;
    rep.theorem_ok = agree_ok;
    rep.json = j.dump(2) + "\n";

    std::ostringstream t;
    t << "dim=" << p.dim() << "  vertices=" << fv[0] << "  edges=" << fv[1]
      << "  facets=" << fv[2] << "\n2-face sizes:";
    for (const auto& [size, count] : census) t << " " << size << "x" << count;
    t << "\neven: " << (even ? "yes" : "no")
      << "  bipartite: " << (bp.bipartite ? "yes" : "no") << "\n";
    if (have_theorem) {
        t << "gamma: " << ct.gamma << " (exact)  s-bounds: ["
          << j["s_bounds"]["lower"].get<std::size_t>() << ", "
          << j["s_bounds"]["upper"].get<std::size_t>() << "]"
          << (j["s_bounds"]["tight"].get<bool>() ? " tight" : "") << "\n"
          << "coloring theorem: "
          << (ct.agree ? "all four predicates agree" : "PREDICATES DISAGREE")
          << "\n";
    } else {
        t << "gamma: " << j["gamma"]["value"].get<int>()
          << " (upper bound)  coloring theorem: skipped (too large for exact "
             "search)\n";
    }
    t << "cycle space: rank " << cs.rank << " of expected " << cs.expected
      << (cs.equal ? "" : "  MISMATCH") << "\n"
      << "base vertex " << j["base_vertex"].get<std::string>() << "\n"
      << "pi: order " << pg.group.order() << ", partition "
      << partition_text(j["pi"]["partition"]);
    append_generators(t, j["pi"]["generators"]);
    rep.text = render_report(j, t.str());
    return rep;
}

Report color_complex(const SimplicialComplex& c) {
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "coloring";
    j["digest"] = io::fnv1a_hex(io::write_complex_lines(c));
    j["dim"] = c.dim();
    j["pure"] = c.pure();
    if (!c.pure())
        throw ValidationError("balancedness is defined for pure complexes");
    j["balanced"] = balanced_json(c);

    Report rep;
    rep.json = j.dump(2) + "\n";
    std::ostringstream t;
    t << "dim=" << c.dim() << "  facets=" << c.facet_count()
      << "\nbalanced: " << balanced_text(j["balanced"]) << "\n";
    if (!j["balanced"].is_null() && !j["balanced"]["witness"].is_null()) {
        t << "witness:";
        for (const auto& [k, v] : j["balanced"]["witness"].items())
            t << " " << k << "=" << v.get<int>();
        t << "\n";
    }
    rep.text = render_report(j, t.str());
    return rep;
}

} // namespace pxk
