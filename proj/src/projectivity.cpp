#include "pxk/projectivity.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pxk/errors.hpp"

namespace pxk {

Projectivity Projectivity::then(const Projectivity& b) const {
    if (target != b.source)
        throw ValidationError("projectivity composition endpoint mismatch");
    Projectivity out;
    out.source = source;
    out.target = b.target;
    out.image_pos.resize(image_pos.size());
    for (std::size_t i = 0; i < image_pos.size(); ++i)
        out.image_pos[i] = b.image_pos[image_pos[i]];
    return out;
}

Projectivity Projectivity::inverse() const {
    Projectivity out;
    out.source = target;
    out.target = source;
    out.image_pos.resize(image_pos.size());
    for (std::size_t i = 0; i < image_pos.size(); ++i)
        out.image_pos[image_pos[i]] = static_cast<std::uint8_t>(i);
    return out;
}

Label Projectivity::apply(const SimplicialComplex& c, const Label& v) const {
    const Simplex& s = c.facet(source);
    int i = s.index_of(v);
    if (i < 0)
        throw ValidationError("vertex " + v.str() + " not in source facet");
    return c.facet(target)[image_pos[static_cast<std::size_t>(i)]];
}

std::map<Label, Label> Projectivity::as_map(const SimplicialComplex& c) const {
    std::map<Label, Label> out;
    const Simplex& s = c.facet(source);
    const Simplex& t = c.facet(target);
    for (std::size_t i = 0; i < image_pos.size(); ++i)
        out[s[i]] = t[image_pos[i]];
    return out;
}

Permutation Projectivity::as_permutation() const {
    if (source != target)
        throw ValidationError("projectivity of an open path is not a permutation");
    return Permutation(image_pos);
}

FacetPath FacetPath::of(const SimplicialComplex& c, std::vector<int> facets) {
    if (facets.empty())
        throw ValidationError("facet path must be non-empty");
    for (int f : facets)
        if (f < 0 || f >= static_cast<int>(c.facet_count()))
            throw ValidationError("facet index out of range");
    for (std::size_t i = 0; i + 1 < facets.size(); ++i)
        if (c.dual_graph().edge_between(facets[i], facets[i + 1]) < 0)
            throw ValidationError("facets " + c.facet(facets[i]).str() + " and " +
                                  c.facet(facets[i + 1]).str() +
                                  " do not share a ridge");
    FacetPath p;
    p.f_ = std::move(facets);
    return p;
}

FacetPath FacetPath::of_simplices(const SimplicialComplex& c,
                                  const std::vector<Simplex>& facets) {
    std::vector<int> idx;
    for (const auto& s : facets) {
        int i = c.facet_index(s);
        if (i < 0)
            throw ValidationError(s.str() + " is not a facet");
        idx.push_back(i);
    }
    return of(c, std::move(idx));
}

FacetPath FacetPath::concat(const FacetPath& h) const {
    if (f_.empty() || h.f_.empty() || f_.back() != h.f_.front())
        throw ValidationError("path concatenation endpoint mismatch");
    FacetPath out = *this;
    out.f_.insert(out.f_.end(), h.f_.begin() + 1, h.f_.end());
    return out;
}

FacetPath FacetPath::reversed() const {
    FacetPath out = *this;
    std::reverse(out.f_.begin(), out.f_.end());
    return out;
}

Projectivity perspectivity(const SimplicialComplex& c, int src, int dst) {
    if (c.dual_graph().edge_between(src, dst) < 0)
        throw ValidationError("facets do not share a ridge");
    const Simplex& a = c.facet(src);
    const Simplex& b = c.facet(dst);
    Simplex va = a.minus(b); // exactly one vertex each by adjacency
    Simplex vb = b.minus(a);
    Projectivity p;
    p.source = src;
    p.target = dst;
    p.image_pos.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Label& v = a[i];
        const Label& img = (v == va[0]) ? vb[0] : v;
        p.image_pos[i] = static_cast<std::uint8_t>(b.index_of(img));
    }
    return p;
}

Projectivity projectivity(const SimplicialComplex& c, const FacetPath& path) {
    Projectivity acc;
    acc.source = acc.target = path.source();
    acc.image_pos.resize(c.facet(path.source()).size());
    for (std::size_t i = 0; i < acc.image_pos.size(); ++i)
        acc.image_pos[i] = static_cast<std::uint8_t>(i);
    const auto& fs = path.facets();
    for (std::size_t i = 0; i + 1 < fs.size(); ++i)
        acc = acc.then(perspectivity(c, fs[i], fs[i + 1]));
    return acc;
}

namespace {

struct BfsTree {
    std::vector<int> parent;                     // -1 at root / off component
    std::vector<char> in_component;
    std::vector<std::pair<int, int>> tree_edges; // (parent, child) in BFS order

    // Path base -> x along tree edges.
    std::vector<int> path_from_root(int x) const {
        std::vector<int> p;
        for (int cur = x; cur >= 0; cur = parent[static_cast<std::size_t>(cur)])
            p.push_back(cur);
        std::reverse(p.begin(), p.end());
        return p;
    }
};

// BFS spanning tree of the dual graph from base; neighbor scan follows the
// canonical facet order, which makes the tree (and everything built from it)
// reproducible.
BfsTree spanning_tree(const SimplicialComplex& c, int base) {
    if (base < 0 || base >= static_cast<int>(c.facet_count()))
        throw ValidationError("base facet index out of range");
    BfsTree t;
    t.parent.assign(c.facet_count(), -1);
    t.in_component.assign(c.facet_count(), 0);
    t.in_component[static_cast<std::size_t>(base)] = 1;
    std::deque<int> q = {base};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const auto& [nb, eid] : c.dual_graph().adj[static_cast<std::size_t>(x)]) {
            if (t.in_component[static_cast<std::size_t>(nb)]) continue;
            t.in_component[static_cast<std::size_t>(nb)] = 1;
            t.parent[static_cast<std::size_t>(nb)] = x;
            t.tree_edges.emplace_back(x, nb);
            q.push_back(nb);
        }
    }
    return t;
}

Permutation loop_permutation(const SimplicialComplex& c, const FacetPath& l) {
    return projectivity(c, l).as_permutation();
}

} // namespace

PiGroupResult pi_group(const SimplicialComplex& c, int base) {
    BfsTree tree = spanning_tree(c, base);
    PiGroupResult res;
    res.tree_parent = tree.parent;
    res.tree_edges = tree.tree_edges;
    res.covers_all_facets = true;
    for (char f : tree.in_component)
        if (!f) res.covers_all_facets = false;

    std::vector<Label> ground = c.facet(base).vertices();
    for (const auto& e : c.dual_graph().edges) {
        if (!tree.in_component[static_cast<std::size_t>(e.a)] ||
            !tree.in_component[static_cast<std::size_t>(e.b)])
            continue;
        if (tree.parent[static_cast<std::size_t>(e.b)] == e.a ||
            tree.parent[static_cast<std::size_t>(e.a)] == e.b)
            continue; // tree edge
        std::vector<int> seq = tree.path_from_root(e.a);
        seq.push_back(e.b);
        std::vector<int> back = tree.path_from_root(e.b);
        seq.insert(seq.end(), back.rbegin() + 1, back.rend());
        FacetPath loop = FacetPath::of(c, std::move(seq));
        res.gens.push_back({loop, loop_permutation(c, loop)});
    }

    std::vector<Permutation> perms;
    for (const auto& g : res.gens) perms.push_back(g.perm);
    res.group = PermutationGroup::generate(std::move(ground), std::move(perms));
    return res;
}

OddSubgroupResult odd_subgroup(const SimplicialComplex& c, int base) {
    BfsTree tree = spanning_tree(c, base);
    OddSubgroupResult res;
    std::vector<OddGenerator> gens;

    for (const auto& k : codim2_faces(c)) {
        if (!k.is_cycle)
            throw ValidationError("codimension-2 face " + k.face.str() +
                                  " has a non-cyclic star");
        if (!k.odd()) continue;

        std::vector<int> st;
        for (std::size_t i = 0; i < c.facet_count(); ++i)
            if (k.face.subset_of(c.facet(static_cast<int>(i))))
                st.push_back(static_cast<int>(i));
        int start = st[0];
        if (!tree.in_component[static_cast<std::size_t>(start)])
            throw ValidationError("odd face " + k.face.str() +
                                  " lies outside the base component");

        // Walk once around the star's dual cycle; the adjacency lists are
        // sorted, so the first matching neighbor is the smaller one.
        std::set<int> in(st.begin(), st.end());
        auto next_in_star = [&](int cur, int prev) {
            for (const auto& [nb, eid] : c.dual_graph().adj[static_cast<std::size_t>(cur)])
                if (in.count(nb) && nb != prev) return nb;
            throw TheoremViolation("cyclic star walk has no continuation");
        };
        std::vector<int> around = {start};
        for (const auto& [nb, eid] : c.dual_graph().adj[static_cast<std::size_t>(start)])
            if (in.count(nb)) {
                around.push_back(nb);
                break;
            }
        int prev = start;
        while (around.back() != start) {
            int nxt = next_in_star(around.back(), prev);
            prev = around.back();
            around.push_back(nxt);
        }

        std::vector<int> seq = tree.path_from_root(start);
        seq.insert(seq.end(), around.begin() + 1, around.end());
        std::vector<int> back = tree.path_from_root(start);
        seq.insert(seq.end(), back.rbegin() + 1, back.rend());
        FacetPath loop = FacetPath::of(c, std::move(seq));
        Permutation p = loop_permutation(c, loop);
        if (p.moved_points() != 2)
            throw TheoremViolation("odd star loop is not a transposition");
        gens.push_back({k.face, loop, p});
    }

    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(g.perm);
    res.group = PermutationGroup::generate(c.facet(base).vertices(), std::move(perms));
    res.gens = std::move(gens);
    return res;
}

BaseChangeResult base_change(const SimplicialComplex& c, int base0, int base1,
                             const FacetPath& path01) {
    if (path01.source() != base0 || path01.target() != base1)
        throw ValidationError("path endpoints do not match the two bases");
    PiGroupResult g0 = pi_group(c, base0);
    PiGroupResult g1 = pi_group(c, base1);
    Projectivity phi = projectivity(c, path01);
    Permutation fwd(phi.image_pos); // position map base0 -> base1
    Permutation bwd = fwd.inverse();

    std::vector<Permutation> conj;
    for (const auto& h : g1.group.elements())
        conj.push_back(fwd.then(h).then(bwd));
    std::sort(conj.begin(), conj.end());

    BaseChangeResult res{g0.group, g1.group, false};
    res.conjugate = conj == g0.group.elements();
    return res;
}

bool verify_generation(const SimplicialComplex& c, int base,
                       const std::vector<FacetPath>& loops) {
    std::vector<Permutation> perms;
    for (const auto& g : odd_subgroup(c, base).gens) perms.push_back(g.perm);
    for (const auto& l : loops) {
        if (!l.is_loop() || l.source() != base)
            throw ValidationError("generation check needs loops based at the base facet");
        perms.push_back(loop_permutation(c, l));
    }
    PermutationGroup spanned =
        PermutationGroup::generate(c.facet(base).vertices(), std::move(perms));
    return spanned.same_group(pi_group(c, base).group);
}

Label SimplicialMap::operator()(const Label& v) const {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end())
        throw ValidationError("vertex " + v.str() + " has no image");
    return it->second;
}

Simplex SimplicialMap::apply(const Simplex& s) const {
    std::vector<Label> out;
    for (const auto& v : s.vertices()) out.push_back((*this)(v));
    return Simplex::of(std::move(out));
}

InducedMapReport induced_map_check(const SimplicialMap& f,
                                   const SimplicialComplex& src, int base,
                                   const SimplicialComplex& dst) {
    if (src.dim() != dst.dim())
        throw ValidationError("induced map needs complexes of equal dimension");
    std::set<Simplex> images;
    for (const auto& s : src.facets()) {
        Simplex img = f.apply(s);
        if (img.size() != s.size())
            throw ValidationError("map is degenerate on facet " + s.str());
        if (!dst.has_face(img))
            throw ValidationError("image " + img.str() + " is not a face");
        images.insert(img);
    }

    InducedMapReport rep;
    rep.facet_injective = images.size() == src.facet_count();

    int fbase = dst.facet_index(f.apply(src.facet(base)));
    // A d-simplex face of a d-dimensional complex is always a facet.
    if (fbase < 0)
        throw TheoremViolation("image of the base facet is not a facet");

    PiGroupResult gs = pi_group(src, base);
    PiGroupResult gd = pi_group(dst, fbase);

    // f restricted to the base facet, as a position map.
    const Simplex& b0 = src.facet(base);
    const Simplex& b1 = dst.facet(fbase);
    std::vector<std::uint8_t> phi(b0.size());
    for (std::size_t i = 0; i < b0.size(); ++i)
        phi[i] = static_cast<std::uint8_t>(b1.index_of(f(b0[i])));
    Permutation fwd((std::vector<std::uint8_t>(phi)));
    Permutation bwd = fwd.inverse();

    rep.image_in_target = true;
    rep.homomorphism = true;
    std::vector<Permutation> pushed;
    for (const auto& g : gs.gens) {
        std::vector<int> seq;
        for (int fi : g.loop.facets()) {
            int im = dst.facet_index(f.apply(src.facet(fi)));
            if (im < 0) throw TheoremViolation("pushed facet is not a facet");
            if (seq.empty() || seq.back() != im) seq.push_back(im);
        }
        Permutation img = loop_permutation(dst, FacetPath::of(dst, std::move(seq)));
        pushed.push_back(img);
        if (!gd.group.contains(img)) rep.image_in_target = false;
        if (!(img == bwd.then(g.perm).then(fwd))) rep.homomorphism = false;
    }

    rep.source_order = gs.group.order();
    rep.image_order =
        PermutationGroup::generate(b1.vertices(), std::move(pushed)).order();
    if (rep.homomorphism) {
        std::set<Permutation> imgs;
        for (const auto& h : gs.group.elements())
            imgs.insert(bwd.then(h).then(fwd));
        rep.monomorphism = imgs.size() == gs.group.order();
    }
    return rep;
}

JoinProductReport verify_join_product(const SimplicialComplex& left, int base_left,
                                      const SimplicialComplex& right, int base_right) {
    JoinProductReport rep;
    rep.joined = join(left, right);
    const SimplicialComplex& J = rep.joined.complex;

    Simplex rb = rep.joined.map_right(right.facet(base_right));
    Simplex jb = left.facet(base_left).union_with(rb);
    int jbase = J.facet_index(jb);
    if (jbase < 0) throw TheoremViolation("join base facet missing");

    PiGroupResult gl = pi_group(left, base_left);
    PiGroupResult gr = pi_group(right, base_right);
    PiGroupResult gj = pi_group(J, jbase);
    rep.order_left = gl.group.order();
    rep.order_right = gr.group.order();
    rep.order_join = gj.group.order();

    auto push_loop = [&](const FacetPath& l, bool from_left) {
        std::vector<int> seq;
        for (int fi : l.facets()) {
            Simplex s = from_left
                            ? left.facet(fi).union_with(rb)
                            : left.facet(base_left).union_with(
                                  rep.joined.map_right(right.facet(fi)));
            int im = J.facet_index(s);
            if (im < 0) throw TheoremViolation("pushed join facet missing");
            seq.push_back(im);
        }
        return loop_permutation(J, FacetPath::of(J, std::move(seq)));
    };

    std::vector<Permutation> gens;
    for (const auto& g : gl.gens) gens.push_back(push_loop(g.loop, true));
    for (const auto& g : gr.gens) gens.push_back(push_loop(g.loop, false));
    PermutationGroup prod =
        PermutationGroup::generate(J.facet(jbase).vertices(), std::move(gens));

    rep.product = prod.same_group(gj.group) &&
                  rep.order_left * rep.order_right == rep.order_join;
    return rep;
}

} // namespace pxk
