#include "pxk/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pxk/errors.hpp"

namespace pxk {

int DualGraph::edge_between(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& [nb, eid] : adj[static_cast<std::size_t>(i)])
        if (nb == j) return eid;
    return -1;
}

SimplicialComplex SimplicialComplex::build(std::vector<Simplex> facets) {
    if (facets.empty())
        throw ValidationError("complex needs at least one facet");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Drop faces dominated by a strictly larger facet.
    std::vector<Simplex> maximal;
    for (const auto& f : facets) {
        bool dominated = false;
        for (const auto& g : facets)
            if (f.size() < g.size() && f.subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(f);
    }

    SimplicialComplex c;
    c.facets_ = std::move(maximal);

    std::set<Label> verts;
    c.dim_ = -1;
    for (const auto& f : c.facets_) {
        c.dim_ = std::max(c.dim_, f.dim());
        verts.insert(f.vertices().begin(), f.vertices().end());
    }
    c.vertices_.assign(verts.begin(), verts.end());
    c.pure_ = true;
    for (const auto& f : c.facets_)
        if (f.dim() != c.dim_) c.pure_ = false;

    // Dual graph: equal-size facets sharing a non-empty ridge.
    const int m = static_cast<int>(c.facets_.size());
    c.dual_.nodes = m;
    c.dual_.adj.assign(static_cast<std::size_t>(m), {});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Simplex& a = c.facets_[static_cast<std::size_t>(i)];
            const Simplex& b = c.facets_[static_cast<std::size_t>(j)];
            if (a.size() != b.size() || a.size() < 2) continue;
            Simplex r = a.intersect(b);
            if (r.size() + 1 != a.size()) continue;
            int eid = static_cast<int>(c.dual_.edges.size());
            c.dual_.edges.push_back({i, j, std::move(r)});
            c.dual_.adj[static_cast<std::size_t>(i)].emplace_back(j, eid);
            c.dual_.adj[static_cast<std::size_t>(j)].emplace_back(i, eid);
        }
    for (auto& nbs : c.dual_.adj) std::sort(nbs.begin(), nbs.end());
    return c;
}

int SimplicialComplex::facet_index(const Simplex& s) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), s);
    if (it == facets_.end() || !(*it == s)) return -1;
    return static_cast<int>(it - facets_.begin());
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    for (const auto& f : facets_)
        if (s.subset_of(f)) return true;
    return false;
}

namespace {

// All (k+1)-subsets of the vertices of f, appended to out.
void collect_subfaces(const Simplex& f, int k, std::set<Simplex>& out) {
    const auto& vs = f.vertices();
    const int n = static_cast<int>(vs.size());
    const int r = k + 1;
    if (r < 0 || r > n) return;
    if (r == 0) {
        out.insert(Simplex());
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<Label> pick;
        pick.reserve(static_cast<std::size_t>(r));
        for (int i : idx) pick.push_back(vs[static_cast<std::size_t>(i)]);
        out.insert(Simplex::of(std::move(pick)));
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

std::vector<Simplex> SimplicialComplex::faces_of_dim(int k) const {
    std::set<Simplex> out;
    if (k == -1) return {Simplex()};
    for (const auto& f : facets_) collect_subfaces(f, k, out);
    return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> fv;
    for (int k = 0; k <= dim_; ++k) fv.push_back(faces_of_dim(k).size());
    return fv;
}

SimplicialComplex star(const SimplicialComplex& c, const Simplex& s) {
    std::vector<Simplex> fs;
    for (const auto& f : c.facets())
        if (s.subset_of(f)) fs.push_back(f);
    if (fs.empty())
        throw ValidationError("star: " + s.str() + " is not a face");
    return SimplicialComplex::build(std::move(fs));
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& s) {
    std::vector<Simplex> fs;
    for (const auto& f : c.facets())
        if (s.subset_of(f)) fs.push_back(f.minus(s));
    if (fs.empty())
        throw ValidationError("link: " + s.str() + " is not a face");
    return SimplicialComplex::build(std::move(fs));
}

namespace {

// Connectivity of the dual graph restricted to the given facet indices
// (all of them when nodes is empty).
bool dual_connected(const DualGraph& g, const std::vector<int>& nodes) {
    if (nodes.empty()) return true;
    std::set<int> in(nodes.begin(), nodes.end());
    std::set<int> seen = {nodes[0]};
    std::deque<int> q = {nodes[0]};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const auto& [nb, eid] : g.adj[static_cast<std::size_t>(x)])
            if (in.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                q.push_back(nb);
            }
    }
    return seen.size() == in.size();
}

std::vector<int> all_nodes(const SimplicialComplex& c) {
    std::vector<int> v(c.facet_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    return v;
}

} // namespace

bool is_strongly_connected(const SimplicialComplex& c) {
    return dual_connected(c.dual_graph(), all_nodes(c));
}

bool is_locally_strongly_connected(const SimplicialComplex& c) {
    if (!is_strongly_connected(c)) return false;
    for (const auto& v : c.vertices()) {
        Simplex s = Simplex::of({v});
        std::vector<int> nodes;
        for (std::size_t i = 0; i < c.facet_count(); ++i)
            if (s.subset_of(c.facet(static_cast<int>(i))))
                nodes.push_back(static_cast<int>(i));
        if (!dual_connected(c.dual_graph(), nodes)) return false;
    }
    return true;
}

Simplex JoinResult::map_right(const Simplex& s) const {
    std::vector<Label> out;
    for (const auto& v : s.vertices()) {
        auto it = right_relabel.find(v);
        out.push_back(it == right_relabel.end() ? v : it->second);
    }
    return Simplex::of(std::move(out));
}

JoinResult join(const SimplicialComplex& left, const SimplicialComplex& right) {
    std::set<Label> lv(left.vertices().begin(), left.vertices().end());
    std::set<Label> taken = lv;
    for (const auto& v : right.vertices()) taken.insert(v);

    JoinResult res;
    for (const auto& v : right.vertices()) {
        if (!lv.count(v)) continue;
        std::string s = v.str();
        Label fresh;
        do {
            s += "'";
            fresh = Label(s);
        } while (taken.count(fresh));
        taken.insert(fresh);
        res.right_relabel[v] = fresh;
    }

    std::vector<Simplex> fs;
    for (const auto& a : left.facets())
        for (const auto& b : right.facets())
            fs.push_back(a.union_with(res.map_right(b)));
    res.complex = SimplicialComplex::build(std::move(fs));
    return res;
}

SdResult barycentric_subdivision(const SimplicialComplex& c) {
    SdResult res;
    std::vector<Simplex> fs;
    for (const auto& f : c.facets()) {
        if (f.empty()) {
            // The (-1)-dimensional complex subdivides to itself.
            fs.push_back(f);
            continue;
        }
        std::vector<Label> perm = f.vertices();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<Label> chain;
            std::vector<Label> prefix;
            for (const auto& v : perm) {
                prefix.push_back(v);
                Simplex face = Simplex::of(prefix);
                Label l{face.str()};
                chain.push_back(l);
                res.face_dim[l] = face.dim();
            }
            fs.push_back(Simplex::of(std::move(chain)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    res.complex = SimplicialComplex::build(std::move(fs));
    return res;
}

namespace {

// Is the dual graph restricted to the given nodes a single cycle?  Returns
// (is_cycle, length).
std::pair<bool, int> restricted_cycle(const DualGraph& g, const std::vector<int>& nodes) {
    std::set<int> in(nodes.begin(), nodes.end());
    int edges = 0;
    for (int x : nodes) {
        int deg = 0;
        for (const auto& [nb, eid] : g.adj[static_cast<std::size_t>(x)])
            if (in.count(nb)) ++deg;
        if (deg != 2) return {false, 0};
        edges += deg;
    }
    edges /= 2;
    if (nodes.size() < 3 || !dual_connected(g, nodes)) return {false, 0};
    return {true, edges};
}

} // namespace

std::vector<Codim2Face> codim2_faces(const SimplicialComplex& c) {
    if (!c.pure())
        throw ValidationError("codim2_faces requires a pure complex");
    std::vector<Codim2Face> out;
    for (const auto& k : c.faces_of_dim(c.dim() - 2)) {
        std::vector<int> st;
        for (std::size_t i = 0; i < c.facet_count(); ++i)
            if (k.subset_of(c.facet(static_cast<int>(i))))
                st.push_back(static_cast<int>(i));
        auto [cyc, len] = restricted_cycle(c.dual_graph(), st);
        out.push_back({k, len, cyc});
    }
    return out;
}

namespace {

// Vertex link looks like a sphere of dimension c.dim()-1; decidable for
// dim <= 2 links.
bool links_spherical(const SimplicialComplex& c) {
    const int d = c.dim();
    if (d <= 0) return true;
    for (const auto& v : c.vertices()) {
        SimplicialComplex lk = link(c, Simplex::of({v}));
        if (d == 1) {
            // 0-sphere: exactly two points.
            if (lk.dim() != 0 || lk.facet_count() != 2) return false;
        } else if (d == 2) {
            // 1-sphere: a single closed cycle.
            if (lk.dim() != 1 || !lk.pure()) return false;
            std::map<Label, int> deg;
            for (const auto& e : lk.facets())
                for (const auto& x : e.vertices()) ++deg[x];
            for (const auto& [x, dg] : deg)
                if (dg != 2) return false;
            if (lk.facet_count() != lk.vertices().size()) return false;
            if (!is_strongly_connected(lk)) return false;
        } else {
            // 2-sphere: pure, connected, Euler characteristic 2, every edge in
            // exactly two triangles.
            if (lk.dim() != 2 || !lk.pure()) return false;
            auto fv = lk.f_vector();
            long chi = static_cast<long>(fv[0]) - static_cast<long>(fv[1]) +
                       static_cast<long>(fv[2]);
            if (chi != 2) return false;
            std::map<Simplex, int> edge_count;
            for (const auto& t : lk.facets()) {
                std::set<Simplex> es;
                collect_subfaces(t, 1, es);
                for (const auto& e : es) ++edge_count[e];
            }
            for (const auto& [e, n] : edge_count)
                if (n != 2) return false;
            if (!is_strongly_connected(lk)) return false;
        }
    }
    return true;
}

} // namespace

ManifoldReport manifold_precheck(const SimplicialComplex& c) {
    ManifoldReport r;
    r.dim = c.dim();
    r.pure = c.pure();
    if (!r.pure) return r;

    std::map<Simplex, int> ridge_count;
    for (const auto& f : c.facets()) {
        std::set<Simplex> rs;
        collect_subfaces(f, c.dim() - 1, rs);
        for (const auto& rg : rs) ++ridge_count[rg];
    }
    r.ridges_at_most_two = true;
    r.closed = !ridge_count.empty();
    for (const auto& [rg, n] : ridge_count) {
        if (n > 2) r.ridges_at_most_two = false;
        if (n != 2) r.closed = false;
    }

    r.codim2_cyclic = true;
    if (c.dim() >= 1)
        for (const auto& k : codim2_faces(c))
            if (!k.is_cycle) r.codim2_cyclic = false;

    if (c.dim() <= 3) {
        r.vertex_links_checked = true;
        r.vertex_links_spherical = links_spherical(c);
    }
    return r;
}

} // namespace pxk
