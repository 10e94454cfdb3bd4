#include "pxk/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

#include "pxk/errors.hpp"
#include "pxk/projectivity.hpp"

namespace pxk {

AbstractGraph AbstractGraph::of(std::vector<Label> nodes,
                                std::vector<std::pair<Label, Label>> edges) {
    AbstractGraph g;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    g.nodes_ = std::move(nodes);

    std::set<std::pair<int, int>> es;
    for (const auto& [a, b] : edges) {
        int i = g.node_index(a), j = g.node_index(b);
        if (i < 0 || j < 0)
            throw ValidationError("edge endpoint is not a node");
        if (i == j)
            throw ValidationError("loop edge at " + a.str());
        es.insert({std::min(i, j), std::max(i, j)});
    }
    g.edges_.assign(es.begin(), es.end());
    g.adj_.assign(g.nodes_.size(), {});
    for (const auto& [i, j] : g.edges_) {
        g.adj_[static_cast<std::size_t>(i)].push_back(j);
        g.adj_[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

int AbstractGraph::node_index(const Label& l) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), l);
    if (it == nodes_.end() || !(*it == l)) return -1;
    return static_cast<int>(it - nodes_.begin());
}

bool AbstractGraph::proper(const Coloring& col) const {
    for (const auto& n : nodes_)
        if (!col.count(n)) return false;
    for (const auto& [i, j] : edges_)
        if (col.at(node(i)) == col.at(node(j))) return false;
    return true;
}

AbstractGraph one_skeleton(const SimplicialComplex& c) {
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& e : c.faces_of_dim(1))
        edges.emplace_back(e[0], e[1]);
    return AbstractGraph::of(c.vertices(), std::move(edges));
}

BipartiteResult is_bipartite(const AbstractGraph& g) {
    const int n = static_cast<int>(g.node_count());
    std::vector<int> col(static_cast<std::size_t>(n), -1);
    std::vector<int> par(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);

    for (int s = 0; s < n; ++s) {
        if (col[static_cast<std::size_t>(s)] >= 0) continue;
        col[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q = {s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.adjacency()[static_cast<std::size_t>(x)]) {
                if (col[static_cast<std::size_t>(y)] < 0) {
                    col[static_cast<std::size_t>(y)] = 1 - col[static_cast<std::size_t>(x)];
                    par[static_cast<std::size_t>(y)] = x;
                    depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                    q.push_back(y);
                } else if (col[static_cast<std::size_t>(y)] == col[static_cast<std::size_t>(x)]) {
                    // Odd cycle: join the BFS-tree paths of x and y at their
                    // common ancestor and close with the offending edge.
                    std::vector<int> px = {x}, py = {y};
                    int a = x, b = y;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)])
                        px.push_back(a = par[static_cast<std::size_t>(a)]);
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)])
                        py.push_back(b = par[static_cast<std::size_t>(b)]);
                    while (a != b) {
                        px.push_back(a = par[static_cast<std::size_t>(a)]);
                        py.push_back(b = par[static_cast<std::size_t>(b)]);
                    }
                    // Walk LCA -> x along the tree, cross the offending edge
                    // to y, walk y -> LCA back up: a closed odd walk.
                    std::vector<Label> cyc;
                    for (auto it = px.rbegin(); it != px.rend(); ++it)
                        cyc.push_back(g.node(*it));
                    for (int v : py) cyc.push_back(g.node(v));

                    if (cyc.size() < 4 || cyc.size() % 2 != 0 ||
                        !(cyc.front() == cyc.back()))
                        throw TheoremViolation("malformed odd-cycle certificate");
                    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
                        int u = g.node_index(cyc[i]), v = g.node_index(cyc[i + 1]);
                        const auto& adj = g.adjacency()[static_cast<std::size_t>(u)];
                        if (!std::binary_search(adj.begin(), adj.end(), v))
                            throw TheoremViolation("odd-cycle certificate uses a non-edge");
                    }
                    BipartiteResult res;
                    res.bipartite = false;
                    res.odd_cycle = std::move(cyc);
                    return res;
                }
            }
        }
    }

    BipartiteResult res;
    res.bipartite = true;
    std::pair<std::vector<Label>, std::vector<Label>> classes;
    Coloring check;
    for (int i = 0; i < n; ++i) {
        (col[static_cast<std::size_t>(i)] == 0 ? classes.first : classes.second)
            .push_back(g.node(i));
        check[g.node(i)] = col[static_cast<std::size_t>(i)];
    }
    if (!g.proper(check))
        throw TheoremViolation("bipartition certificate is not proper");
    res.classes = std::move(classes);
    return res;
}

namespace {

struct Dsatur {
    const AbstractGraph& g;
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> color;
    std::vector<int> best_color;
    int best;      // best complete coloring size found so far
    int limit;     // hard palette cap (cap + 1)
    bool found = false;

    Dsatur(const AbstractGraph& gg, int lim)
        : g(gg), n(static_cast<int>(gg.node_count())), adj(gg.adjacency()),
          color(gg.node_count(), -1), best(lim + 1), limit(lim) {}

    int saturation(int v) const {
        std::set<int> cs;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(u)] >= 0)
                cs.insert(color[static_cast<std::size_t>(u)]);
        return static_cast<int>(cs.size());
    }

    int pick() const {
        int bestv = -1, bs = -1, bd = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            int s = saturation(v);
            int d = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
            if (s > bs || (s == bs && d > bd)) {
                bestv = v;
                bs = s;
                bd = d;
            }
        }
        return bestv;
    }

    void run(int colored, int used) {
        if (used >= best) return; // cannot improve
        if (colored == n) {
            best = used;
            best_color = color;
            found = true;
            return;
        }
        int v = pick();
        std::uint64_t neighbor_mask = 0;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(u)] >= 0)
                neighbor_mask |= 1ULL << color[static_cast<std::size_t>(u)];
        int top = std::min({used + 1, best - 1, limit});
        for (int ctry = 0; ctry < top; ++ctry) {
            if (neighbor_mask & (1ULL << ctry)) continue;
            color[static_cast<std::size_t>(v)] = ctry;
            run(colored + 1, std::max(used, ctry + 1));
            color[static_cast<std::size_t>(v)] = -1;
        }
    }
};

// Greedy saturation-order coloring; always succeeds, any number of colors.
std::pair<int, std::vector<int>> greedy_dsatur(const AbstractGraph& g) {
    const int n = static_cast<int>(g.node_count());
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int step = 0; step < n; ++step) {
        int bestv = -1, bs = -1, bd = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            std::set<int> cs;
            for (int u : g.adjacency()[static_cast<std::size_t>(v)])
                if (color[static_cast<std::size_t>(u)] >= 0)
                    cs.insert(color[static_cast<std::size_t>(u)]);
            int s = static_cast<int>(cs.size());
            int d = static_cast<int>(g.adjacency()[static_cast<std::size_t>(v)].size());
            if (s > bs || (s == bs && d > bd)) {
                bestv = v;
                bs = s;
                bd = d;
            }
        }
        std::set<int> used;
        for (int u : g.adjacency()[static_cast<std::size_t>(bestv)])
            if (color[static_cast<std::size_t>(u)] >= 0)
                used.insert(color[static_cast<std::size_t>(u)]);
        int c = 0;
        while (used.count(c)) ++c;
        color[static_cast<std::size_t>(bestv)] = c;
    }
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    return {k, color};
}

Coloring to_coloring(const AbstractGraph& g, const std::vector<int>& color) {
    Coloring col;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        col[g.node(static_cast<int>(i))] = color[i];
    return col;
}

} // namespace

ChromaticResult chromatic_number(const AbstractGraph& g, int cap) {
    ChromaticResult res;
    if (cap < 0) throw ValidationError("chromatic cap must be non-negative");
    if (g.node_count() == 0) {
        res.value = 0;
        return res;
    }

    auto [greedy_k, greedy_col] = greedy_dsatur(g);
    if (g.node_count() > 64) {
        // Upper bound only; nothing about the cap is proven here.
        res.value = greedy_k;
        res.exact = false;
        res.exceeded_cap = false;
        res.witness = to_coloring(g, greedy_col);
        return res;
    }

    const int limit = std::min<int>(cap + 1, static_cast<int>(g.node_count()));
    Dsatur search(g, limit);
    if (greedy_k <= limit) { // seed the bound with the greedy solution
        search.best = greedy_k;
        search.best_color = greedy_col;
        search.found = true;
    }
    search.run(0, 0);

    if (search.found) {
        res.value = search.best;
        res.exact = true;
        res.exceeded_cap = search.best > cap;
        res.witness = to_coloring(g, search.best_color);
        if (!g.proper(res.witness))
            throw TheoremViolation("improper chromatic witness");
    } else {
        // Exhaustive search proved that no coloring with cap+1 colors exists,
        // so the true value is larger still; cap+1 is reported as a floor.
        res.value = cap + 1;
        res.exact = false;
        res.exceeded_cap = true;
        res.witness = to_coloring(g, greedy_col);
    }
    return res;
}

ChromaticResult chromatic_number(const AbstractGraph& g) {
    return chromatic_number(g, static_cast<int>(g.node_count()));
}

BalancedResult is_balanced(const SimplicialComplex& c) {
    if (!c.pure())
        throw ValidationError("balancedness is defined for pure complexes");
    BalancedResult res;
    const int d = c.dim();
    if (d <= 0) {
        res.balanced = true;
        res.witness = Coloring{};
        for (const auto& v : c.vertices()) (*res.witness)[v] = 0;
        return res;
    }

    AbstractGraph skel = one_skeleton(c);

    if (is_locally_strongly_connected(c)) {
        res.by_propagation = true;
        // Color the base facet 0..d, push colors along a BFS spanning tree of
        // the dual graph, then demand one color per vertex globally.
        std::vector<std::pair<int, int>> tree_edges;
        {
            std::vector<char> seen(c.facet_count(), 0);
            seen[0] = 1;
            std::deque<int> q = {0};
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (const auto& [nb, eid] :
                     c.dual_graph().adj[static_cast<std::size_t>(x)])
                    if (!seen[static_cast<std::size_t>(nb)]) {
                        seen[static_cast<std::size_t>(nb)] = 1;
                        tree_edges.emplace_back(x, nb);
                        q.push_back(nb);
                    }
            }
        }
        std::vector<std::vector<int>> fcol(c.facet_count());
        fcol[0].resize(c.facet(0).size());
        for (std::size_t i = 0; i < fcol[0].size(); ++i)
            fcol[0][i] = static_cast<int>(i);
        for (const auto& [par, child] : tree_edges) {
            Projectivity p = perspectivity(c, par, child);
            fcol[static_cast<std::size_t>(child)].resize(c.facet(child).size());
            for (std::size_t i = 0; i < p.image_pos.size(); ++i)
                fcol[static_cast<std::size_t>(child)][p.image_pos[i]] =
                    fcol[static_cast<std::size_t>(par)][i];
        }
        Coloring col;
        for (std::size_t f = 0; f < c.facet_count(); ++f) {
            const Simplex& s = c.facet(static_cast<int>(f));
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto it = col.find(s[i]);
                if (it == col.end())
                    col[s[i]] = fcol[f][i];
                else if (it->second != fcol[f][i])
                    return res; // inconsistent: not balanced
            }
        }
        if (!skel.proper(col))
            throw TheoremViolation("consistent propagation yielded improper coloring");
        res.balanced = true;
        res.witness = std::move(col);
        return res;
    }

    ChromaticResult chi = chromatic_number(skel, d + 1);
    if (chi.exceeded_cap) return res; // proven: no (d+1)-coloring exists
    if (chi.value > d + 1)
        throw ValidationError("complex too large for exact balancedness search");
    res.balanced = true;
    if (!skel.proper(chi.witness))
        throw TheoremViolation("improper balancedness witness");
    res.witness = std::move(chi.witness);
    return res;
}

} // namespace pxk
