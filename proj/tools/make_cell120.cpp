// Generates the 120-cell as a vertex-facet incidence file (data/cell120.json).
//
// The 120 unit icosian quaternions are the vertices of the 600-cell; two are
// joined exactly when their dot product is cos(pi/5) ~ 0.809 (the next
// possible value is 0.5, so a 0.75 threshold is numerically safe), and the
// 4-cliques of that graph are its 600 tetrahedral cells.  Dually: the cells
// are the vertices of the 120-cell and the icosians label its dodecahedral
// facets.  The output is deterministic.

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pxk/errors.hpp"
#include "pxk/io.hpp"
#include "pxk/polytope.hpp"

namespace {

using Quat = std::array<double, 4>;

std::vector<Quat> icosians() {
    std::vector<Quat> out;
    // 8 unit axes.
    for (int i = 0; i < 4; ++i)
        for (int s = -1; s <= 1; s += 2) {
            Quat q{0, 0, 0, 0};
            q[static_cast<std::size_t>(i)] = s;
            out.push_back(q);
        }
    // 16 half-integer points.
    for (int m = 0; m < 16; ++m) {
        Quat q;
        for (int i = 0; i < 4; ++i)
            q[static_cast<std::size_t>(i)] = (m >> i & 1) ? 0.5 : -0.5;
        out.push_back(q);
    }
    // 96 even permutations of (phi, 1, 1/phi, 0)/2 with free signs.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const std::array<double, 4> base{phi / 2, 0.5, 1 / (2 * phi), 0.0};
    std::array<int, 4> perm{0, 1, 2, 3};
    // All permutations, keeping the even ones.
    std::vector<std::array<int, 4>> evens;
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        if (inv % 2 == 0) evens.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& pm : evens)
        for (int m = 0; m < 8; ++m) {
            Quat q;
            int bit = 0;
            for (int i = 0; i < 4; ++i) {
                double v = base[static_cast<std::size_t>(pm[static_cast<std::size_t>(i)])];
                if (v != 0.0 && (m >> bit++ & 1)) v = -v;
                q[static_cast<std::size_t>(i)] = v;
            }
            out.push_back(q);
        }
    return out;
}

double dot(const Quat& a, const Quat& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

} // namespace

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "data/cell120.json";

    std::vector<Quat> qs = icosians();
    if (qs.size() != 120) {
        std::fprintf(stderr, "expected 120 icosians, got %zu\n", qs.size());
        return 1;
    }

    const int n = 120;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot(qs[static_cast<std::size_t>(i)], qs[static_cast<std::size_t>(j)]) > 0.75) {
                adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
                ++edges;
            }
    if (edges != 720) {
        std::fprintf(stderr, "expected 720 edges in the 600-cell graph, got %d\n", edges);
        return 1;
    }

    std::vector<std::array<int, 4>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            for (int k = j + 1; k < n; ++k) {
                if (!adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ||
                    !adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])
                    continue;
                for (int l = k + 1; l < n; ++l)
                    if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] &&
                        adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] &&
                        adj[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)])
                        cells.push_back({i, j, k, l});
            }
        }
    if (cells.size() != 600) {
        std::fprintf(stderr, "expected 600 cells, got %zu\n", cells.size());
        return 1;
    }

    std::vector<pxk::Label> facets;
    for (int i = 0; i < n; ++i)
        facets.emplace_back("q" + std::to_string(i));
    std::map<pxk::Label, std::vector<pxk::Label>> verts;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::vector<pxk::Label> inc;
        for (int q : cells[c]) inc.emplace_back("q" + std::to_string(q));
        verts[pxk::Label("c" + std::to_string(c))] = std::move(inc);
    }

    try {
        pxk::SimplePolytope p =
            pxk::SimplePolytope::build(4, std::move(facets), std::move(verts));
        auto fv = p.f_vector();
        if (fv[0] != 600 || fv[1] != 1200 || fv[2] != 120) {
            std::fprintf(stderr, "unexpected f-vector (%zu, %zu, %zu)\n", fv[0],
                         fv[1], fv[2]);
            return 1;
        }
        std::size_t pentagons = 0;
        for (const auto& tf : p.two_faces())
            if (tf.boundary.size() == 5) ++pentagons;
        if (pentagons != 720 || p.two_faces().size() != 720) {
            std::fprintf(stderr, "expected 720 pentagonal 2-faces, got %zu\n",
                         p.two_faces().size());
            return 1;
        }
        pxk::io::write_file(out_path, pxk::io::write_polytope_json(p));
    } catch (const pxk::ValidationError& e) {
        std::fprintf(stderr, "validation failed: %s\n", e.what());
        return 1;
    }
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}
