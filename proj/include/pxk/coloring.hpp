#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pxk/complex.hpp"

namespace pxk {

using Coloring = std::map<Label, int>;

// Simple undirected graph over labeled nodes.
class AbstractGraph {
public:
    AbstractGraph() = default;
    static AbstractGraph of(std::vector<Label> nodes,
                            std::vector<std::pair<Label, Label>> edges);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Label>& nodes() const { return nodes_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const Label& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    int node_index(const Label& l) const;

    bool proper(const Coloring& col) const;

private:
    std::vector<Label> nodes_; // sorted
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// 1-skeleton of a complex: its vertices and edges.
AbstractGraph one_skeleton(const SimplicialComplex& c);

// BFS 2-coloring: exactly one of the two certificates is returned, and both
// are checked before being handed out (the partition is a proper 2-coloring,
// the cycle is a closed odd walk in the graph).
struct BipartiteResult {
    bool bipartite = false;
    std::optional<std::pair<std::vector<Label>, std::vector<Label>>> classes;
    std::optional<std::vector<Label>> odd_cycle; // closed: first == last
};
BipartiteResult is_bipartite(const AbstractGraph& g);

// Exact chromatic number by branch and bound with saturation-degree ordering.
// Exact for up to 64 nodes; beyond that the greedy saturation bound is
// returned with exact == false.  The search palette is capped at cap+1
// colors, so it fails fast on dense graphs: when even cap+1 colors do not
// suffice, value == cap+1 is reported as a proven floor.  exceeded_cap is
// only ever set when value > cap has actually been proven.
struct ChromaticResult {
    int value = 0;
    bool exact = true;
    bool exceeded_cap = false;
    Coloring witness;
};
ChromaticResult chromatic_number(const AbstractGraph& g, int cap);
ChromaticResult chromatic_number(const AbstractGraph& g);

// Balancedness of a pure d-complex: does a proper vertex coloring with d+1
// colors exist?  For locally strongly connected complexes the decision is by
// color propagation along a spanning tree of the dual graph followed by a
// global consistency check; otherwise by exact search on the 1-skeleton.
// Any witness returned has been verified proper by an edge scan.
struct BalancedResult {
    bool balanced = false;
    std::optional<Coloring> witness;
    bool by_propagation = false;
};
BalancedResult is_balanced(const SimplicialComplex& c);

} // namespace pxk
