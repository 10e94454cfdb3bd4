#include "pxk/polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pxk/errors.hpp"
#include "pxk/permutation.hpp"

namespace pxk {

namespace {

std::vector<int> sorted_common(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

} // namespace

SimplePolytope SimplePolytope::build(int dim, std::vector<Label> facet_labels,
                                     std::map<Label, std::vector<Label>> vertex_facets) {
    if (dim < 1)
        throw ValidationError("polytope dimension must be at least 1");
    if (vertex_facets.empty())
        throw ValidationError("polytope needs at least one vertex");

    SimplePolytope p;
    p.dim_ = dim;
    std::sort(facet_labels.begin(), facet_labels.end());
    facet_labels.erase(std::unique(facet_labels.begin(), facet_labels.end()),
                       facet_labels.end());
    p.facets_ = std::move(facet_labels);

    for (const auto& [v, fs] : vertex_facets) p.verts_.push_back(v);
    std::sort(p.verts_.begin(), p.verts_.end());

    std::set<std::vector<int>> seen_sets;
    p.incidence_.resize(p.verts_.size());
    for (std::size_t vi = 0; vi < p.verts_.size(); ++vi) {
        const auto& fs = vertex_facets.at(p.verts_[vi]);
        std::vector<int> idx;
        for (const auto& f : fs) {
            int i = p.facet_index(f);
            if (i < 0)
                throw ValidationError("vertex " + p.verts_[vi].str() +
                                      " lies in undeclared facet " + f.str());
            idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (static_cast<int>(idx.size()) != dim)
            throw ValidationError("vertex " + p.verts_[vi].str() + " lies in " +
                                  std::to_string(idx.size()) + " facets, expected " +
                                  std::to_string(dim) + " (not simple)");
        if (!seen_sets.insert(idx).second)
            throw ValidationError("two vertices share the facet set of " +
                                  p.verts_[vi].str());
        p.incidence_[vi] = std::move(idx);
    }

    std::vector<char> used(p.facets_.size(), 0);
    for (const auto& inc : p.incidence_)
        for (int f : inc) used[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            throw ValidationError("facet " + p.facets_[i].str() + " has no vertices");

    // Edges: vertex pairs sharing exactly dim-1 facets.
    const int n = static_cast<int>(p.verts_.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (sorted_common(p.incidence_[static_cast<std::size_t>(a)],
                              p.incidence_[static_cast<std::size_t>(b)])
                    .size() == static_cast<std::size_t>(dim - 1))
                p.edges_.emplace_back(a, b);

    // Connectivity of the vertex-edge graph.
    {
        std::vector<std::vector<int>> adj(p.verts_.size());
        for (const auto& [a, b] : p.edges_) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        std::vector<char> seen(p.verts_.size(), 0);
        std::deque<int> q = {0};
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++cnt;
                    q.push_back(y);
                }
        }
        if (cnt != p.verts_.size() && p.verts_.size() > 1)
            throw ValidationError("disconnected vertex-facet incidence");
    }

    // 2-faces: group vertices and edges by the (dim-2)-subsets of facets they
    // lie in, then trace each group as a single cycle.
    if (dim >= 2) {
        std::map<std::vector<int>, std::vector<int>> face_verts;
        for (int v = 0; v < n; ++v) {
            const auto& inc = p.incidence_[static_cast<std::size_t>(v)];
            std::vector<int> pick(static_cast<std::size_t>(dim - 2));
            std::vector<int> idx(static_cast<std::size_t>(dim - 2));
            // all (dim-2)-subsets of inc
            const int r = dim - 2;
            if (r == 0) {
                face_verts[{}].push_back(v);
            } else {
                for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
                while (true) {
                    for (int i = 0; i < r; ++i)
                        pick[static_cast<std::size_t>(i)] =
                            inc[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                    face_verts[pick].push_back(v);
                    int i = r - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == dim - r + i) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < r; ++j)
                        idx[static_cast<std::size_t>(j)] =
                            idx[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
        }
        std::map<std::vector<int>, std::vector<std::pair<int, int>>> face_edges;
        for (const auto& [a, b] : p.edges_) {
            std::vector<int> common =
                sorted_common(p.incidence_[static_cast<std::size_t>(a)],
                              p.incidence_[static_cast<std::size_t>(b)]);
            const int r = dim - 2;
            if (r == 0) {
                face_edges[{}].emplace_back(a, b);
            } else {
                // all (dim-2)-subsets of the dim-1 common facets
                std::vector<int> idx(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
                const int m = dim - 1;
                while (true) {
                    std::vector<int> pick(static_cast<std::size_t>(r));
                    for (int i = 0; i < r; ++i)
                        pick[static_cast<std::size_t>(i)] =
                            common[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                    face_edges[pick].emplace_back(a, b);
                    int i = r - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < r; ++j)
                        idx[static_cast<std::size_t>(j)] =
                            idx[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
        }

        for (const auto& [S, W] : face_verts) {
            auto it = face_edges.find(S);
            if (it == face_edges.end() || W.size() < 3 || it->second.size() != W.size())
                throw ValidationError("2-face tracing failed (not a simple polytope)");
            // Walk the cycle.
            std::map<int, std::vector<int>> adj;
            for (const auto& [a, b] : it->second) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            for (auto& [v, nb] : adj) {
                if (nb.size() != 2)
                    throw ValidationError("2-face boundary is not a cycle");
                std::sort(nb.begin(), nb.end());
            }
            if (adj.size() != W.size())
                throw ValidationError("2-face boundary misses vertices");
            TwoFace f;
            f.defining_facets = S;
            int start = W[0];
            int prev = -1, cur = start;
            do {
                f.boundary.push_back(cur);
                const auto& nb = adj[cur];
                int nxt = (nb[0] != prev) ? nb[0] : nb[1];
                prev = cur;
                cur = nxt;
            } while (cur != start);
            if (f.boundary.size() != W.size())
                throw ValidationError("2-face boundary is not a single cycle");
            p.two_faces_.push_back(std::move(f));
        }
    }
    return p;
}

int SimplePolytope::facet_index(const Label& l) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), l);
    if (it == facets_.end() || !(*it == l)) return -1;
    return static_cast<int>(it - facets_.begin());
}

int SimplePolytope::vertex_index(const Label& l) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), l);
    if (it == verts_.end() || !(*it == l)) return -1;
    return static_cast<int>(it - verts_.begin());
}

Simplex SimplePolytope::facet_set(int v) const {
    std::vector<Label> ls;
    for (int f : incidence_[static_cast<std::size_t>(v)])
        ls.push_back(facets_[static_cast<std::size_t>(f)]);
    return Simplex::of(std::move(ls));
}

std::vector<int> SimplePolytope::facet_vertices(int i) const {
    std::vector<int> out;
    for (std::size_t v = 0; v < verts_.size(); ++v)
        if (std::binary_search(incidence_[v].begin(), incidence_[v].end(), i))
            out.push_back(static_cast<int>(v));
    return out;
}

SimplicialComplex dualize(const SimplePolytope& p) {
    std::vector<Simplex> fs;
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        fs.push_back(p.facet_set(static_cast<int>(v)));
    return SimplicialComplex::build(std::move(fs));
}

AbstractGraph vertex_edge_graph(const SimplePolytope& p) {
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& [a, b] : p.edges())
        edges.emplace_back(p.vertex_label(a), p.vertex_label(b));
    return AbstractGraph::of(p.vertex_labels(), std::move(edges));
}

AbstractGraph facet_intersection_graph(const SimplePolytope& p) {
    std::set<std::pair<int, int>> es;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        const auto& inc = p.facets_of(static_cast<int>(v));
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                es.insert({inc[i], inc[j]});
    }
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& [i, j] : es)
        edges.emplace_back(p.facet_label(i), p.facet_label(j));
    return AbstractGraph::of(p.facet_labels(), std::move(edges));
}

VertexPerspectivity vertex_perspectivity(const SimplePolytope& p, int v, int w) {
    const auto& fv = p.facets_of(v);
    const auto& fw = p.facets_of(w);
    if (sorted_common(fv, fw).size() != static_cast<std::size_t>(p.dim() - 1))
        throw ValidationError("vertices do not span an edge");
    VertexPerspectivity out;
    for (int f : fv)
        if (!std::binary_search(fw.begin(), fw.end(), f))
            out.swapped_out = p.facet_label(f);
    for (int f : fw)
        if (!std::binary_search(fv.begin(), fv.end(), f))
            out.swapped_in = p.facet_label(f);
    for (int f : fv) {
        Label l = p.facet_label(f);
        out.map[l] = (l == out.swapped_out) ? out.swapped_in : l;
    }
    return out;
}

PiGroupResult pi_group(const SimplePolytope& p, int base_vertex) {
    SimplicialComplex d = dualize(p);
    int base = d.facet_index(p.facet_set(base_vertex));
    if (base < 0)
        throw TheoremViolation("dual facet of base vertex missing");
    return pi_group(d, base);
}

bool is_even(const SimplePolytope& p) {
    for (const auto& f : p.two_faces())
        if (!f.even()) return false;
    return true;
}

ColoringTheoremReport coloring_theorem_check(const SimplePolytope& p) {
    ColoringTheoremReport r;
    r.even = is_even(p);
    r.bipartite = is_bipartite(vertex_edge_graph(p)).bipartite;
    r.dual_balanced = is_balanced(dualize(p)).balanced;
    ChromaticResult chi = chromatic_number(facet_intersection_graph(p));
    if (!chi.exact)
        throw ValidationError("facet-intersection graph too large for exact coloring");
    r.gamma = chi.value;
    r.gamma_is_dim = chi.value == p.dim();
    r.agree = (r.even == r.bipartite) && (r.even == r.dual_balanced) &&
              (r.even == r.gamma_is_dim);
    return r;
}

SBounds s_bounds(const SimplePolytope& p) {
    ColoringTheoremReport r = coloring_theorem_check(p);
    SBounds s;
    s.lower = p.facet_count() - static_cast<std::size_t>(r.gamma);
    s.upper = p.facet_count() - static_cast<std::size_t>(p.dim());
    s.tight = r.gamma == p.dim();
    return s;
}

EdgeColoringResult induced_edge_coloring(const SimplePolytope& p,
                                         const Coloring& facet_coloring) {
    AbstractGraph fig = facet_intersection_graph(p);
    if (!fig.proper(facet_coloring))
        throw ValidationError("facet coloring is not proper");
    std::set<int> colors;
    for (const auto& [f, c] : facet_coloring) colors.insert(c);
    if (static_cast<int>(colors.size()) != p.dim())
        throw ValidationError("facet coloring must use exactly dim colors");

    EdgeColoringResult res;
    res.colors_used = static_cast<int>(colors.size());
    for (const auto& [a, b] : p.edges()) {
        VertexPerspectivity vp = vertex_perspectivity(p, a, b);
        int ca = facet_coloring.at(vp.swapped_out);
        int cb = facet_coloring.at(vp.swapped_in);
        // The d facets at a vertex are pairwise adjacent, so they exhaust all
        // d colors; both swapped facets complete the same d-1 shared facets.
        if (ca != cb)
            throw TheoremViolation("swapped facets of an edge differ in color");
        res.edge_colors[{p.vertex_label(a), p.vertex_label(b)}] = ca;
    }
    // Properness on edges: edges meeting in a vertex must differ.
    std::map<int, std::vector<int>> at_vertex;
    for (const auto& [a, b] : p.edges()) {
        int c = res.edge_colors.at({p.vertex_label(a), p.vertex_label(b)});
        at_vertex[a].push_back(c);
        at_vertex[b].push_back(c);
    }
    for (const auto& [v, cs] : at_vertex) {
        std::set<int> uniq(cs.begin(), cs.end());
        if (uniq.size() != cs.size()) res.proper = false;
    }
    return res;
}

bool disjoint_facet_check(const SimplePolytope& p) {
    std::vector<std::set<int>> fverts(p.facet_count());
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        for (int f : p.facets_of(static_cast<int>(v)))
            fverts[static_cast<std::size_t>(f)].insert(static_cast<int>(v));
    for (const auto& [a, b] : p.edges()) {
        VertexPerspectivity vp = vertex_perspectivity(p, a, b);
        const auto& fa = fverts[static_cast<std::size_t>(p.facet_index(vp.swapped_out))];
        const auto& fb = fverts[static_cast<std::size_t>(p.facet_index(vp.swapped_in))];
        for (int x : fa)
            if (fb.count(x)) return false;
    }
    return true;
}

CycleSpaceReport cycle_space_check(const SimplePolytope& p) {
    CycleSpaceReport r;
    const std::size_t ne = p.edges().size();
    std::map<std::pair<int, int>, std::size_t> eidx;
    for (std::size_t i = 0; i < ne; ++i) eidx[p.edges()[i]] = i;

    const std::size_t words = (ne + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis;
    for (const auto& f : p.two_faces()) {
        std::vector<std::uint64_t> row(words, 0);
        const auto& b = f.boundary;
        for (std::size_t i = 0; i < b.size(); ++i) {
            int a = b[i], c = b[(i + 1) % b.size()];
            auto it = eidx.find({std::min(a, c), std::max(a, c)});
            if (it == eidx.end())
                throw TheoremViolation("2-face boundary uses a non-edge");
            row[it->second / 64] ^= 1ULL << (it->second % 64);
        }
        // Gaussian elimination over GF(2).
        for (const auto& bv : basis) {
            std::size_t pivot = 0;
            for (std::size_t w = 0; w < words; ++w)
                if (bv[w]) {
                    pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bv[w]));
                    break;
                }
            if (row[pivot / 64] & (1ULL << (pivot % 64)))
                for (std::size_t w = 0; w < words; ++w) row[w] ^= bv[w];
        }
        bool nonzero = false;
        for (auto w : row) nonzero |= (w != 0);
        if (nonzero) basis.push_back(std::move(row));
    }
    r.rank = basis.size();
    r.expected = ne - p.vertex_count() + 1;
    r.equal = r.rank == r.expected;
    return r;
}

ProductResult product_polytope(const SimplePolytope& p, const SimplePolytope& q) {
    ProductResult res;
    std::set<Label> taken(p.facet_labels().begin(), p.facet_labels().end());
    for (const auto& l : q.facet_labels()) taken.insert(l);
    std::map<Label, Label> remap;
    for (const auto& l : q.facet_labels()) {
        if (std::binary_search(p.facet_labels().begin(), p.facet_labels().end(), l)) {
            std::string s = l.str();
            Label fresh;
            do {
                s += "'";
                fresh = Label(s);
            } while (taken.count(fresh));
            taken.insert(fresh);
            remap[l] = fresh;
        }
    }
    auto right_label = [&](const Label& l) {
        auto it = remap.find(l);
        return it == remap.end() ? l : it->second;
    };

    std::vector<Label> facets(p.facet_labels().begin(), p.facet_labels().end());
    for (const auto& l : q.facet_labels()) facets.push_back(right_label(l));

    std::map<Label, std::vector<Label>> verts;
    for (std::size_t a = 0; a < p.vertex_count(); ++a)
        for (std::size_t b = 0; b < q.vertex_count(); ++b) {
            Label va = p.vertex_label(static_cast<int>(a));
            Label vb = q.vertex_label(static_cast<int>(b));
            Label pv{"(" + va.str() + "," + vb.str() + ")"};
            std::vector<Label> fs;
            for (int f : p.facets_of(static_cast<int>(a)))
                fs.push_back(p.facet_label(f));
            for (int f : q.facets_of(static_cast<int>(b)))
                fs.push_back(right_label(q.facet_label(f)));
            verts[pv] = std::move(fs);
            res.vertex_pairs[pv] = {va, vb};
        }
    res.right_facet_relabel = std::move(remap);
    res.polytope = SimplePolytope::build(p.dim() + q.dim(), std::move(facets),
                                         std::move(verts));
    return res;
}

ProductGroupReport verify_product(const SimplePolytope& p, int base_v,
                                  const SimplePolytope& q, int base_w) {
    ProductResult pr = product_polytope(p, q);
    const SimplePolytope& J = pr.polytope;

    SimplicialComplex dp = dualize(p);
    SimplicialComplex dq = dualize(q);
    SimplicialComplex dj = dualize(J);

    // Reverse lookup: dual facet simplex -> polytope vertex index.
    auto vertex_of = [](const SimplePolytope& poly, const SimplicialComplex& dual,
                        int dual_facet) {
        const Simplex& s = dual.facet(dual_facet);
        for (std::size_t v = 0; v < poly.vertex_count(); ++v)
            if (poly.facet_set(static_cast<int>(v)) == s) return static_cast<int>(v);
        throw TheoremViolation("dual facet without a polytope vertex");
    };
    auto right_label = [&](const Label& l) {
        auto it = pr.right_facet_relabel.find(l);
        return it == pr.right_facet_relabel.end() ? l : it->second;
    };
    auto join_facet_set = [&](int vp_idx, int vq_idx) {
        std::vector<Label> fs;
        for (int f : p.facets_of(vp_idx)) fs.push_back(p.facet_label(f));
        for (int f : q.facets_of(vq_idx)) fs.push_back(right_label(q.facet_label(f)));
        return Simplex::of(std::move(fs));
    };

    int ip = dp.facet_index(p.facet_set(base_v));
    int iq = dq.facet_index(q.facet_set(base_w));
    int ij = dj.facet_index(join_facet_set(base_v, base_w));
    if (ip < 0 || iq < 0 || ij < 0)
        throw TheoremViolation("product base facet missing");

    PiGroupResult gp = pi_group(dp, ip);
    PiGroupResult gq = pi_group(dq, iq);
    PiGroupResult gj = pi_group(dj, ij);

    auto push = [&](const FacetPath& loop, bool from_left) {
        std::vector<int> seq;
        for (int fi : loop.facets()) {
            int v = from_left ? vertex_of(p, dp, fi) : vertex_of(q, dq, fi);
            Simplex s = from_left ? join_facet_set(v, base_w)
                                  : join_facet_set(base_v, v);
            int im = dj.facet_index(s);
            if (im < 0) throw TheoremViolation("pushed product facet missing");
            seq.push_back(im);
        }
        return projectivity(dj, FacetPath::of(dj, std::move(seq))).as_permutation();
    };

    std::vector<Permutation> gens;
    for (const auto& g : gp.gens) gens.push_back(push(g.loop, true));
    for (const auto& g : gq.gens) gens.push_back(push(g.loop, false));
    PermutationGroup prod =
        PermutationGroup::generate(dj.facet(ij).vertices(), std::move(gens));

    ProductGroupReport rep;
    rep.order_left = gp.group.order();
    rep.order_right = gq.group.order();
    rep.order_product = gj.group.order();
    rep.product = prod.same_group(gj.group) &&
                  rep.order_left * rep.order_right == rep.order_product;

    auto cp = classify_symmetric_product(gp.group);
    auto cq = classify_symmetric_product(gq.group);
    auto cj = classify_symmetric_product(gj.group);
    const bool factors_classify = cp.has_value() && cq.has_value();
    if (factors_classify && cj) {
        std::vector<std::size_t> concat = *cp;
        concat.insert(concat.end(), cq->begin(), cq->end());
        std::sort(concat.begin(), concat.end());
        rep.partitions_concatenate = concat == *cj;
    } else {
        // The product classifies exactly when both factors do.
        rep.partitions_concatenate = cj.has_value() == factors_classify;
    }
    return rep;
}

} // namespace pxk
