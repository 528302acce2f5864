#pragma once

#include "berge/bipartite_graph.hpp"

#include <vector>

namespace berge {

/// Multihypergraph on vertex set {0..n-1}. Edges are vertex subsets of size
/// >= 1, kept in insertion order; repeated subsets stay distinct edges, so
/// edge identity is the list index.
class Hypergraph {
public:
    // Validates: members in range, no repeated vertex inside an edge,
    // edge size >= 1. Each edge is stored sorted.
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int n() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<int>& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    bool edge_contains(int e, int v) const;

    int degree(int v) const;
    int min_degree() const;
    std::vector<int> degrees() const;

    // Number of edges containing all of s; s must be nonempty.
    int codegree(const std::vector<int>& s) const;

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

// Incidence graph: X = vertices of H (n rows), Y = edges of H (columns);
// row v has bit e set iff v is in edge e.
BipartiteGraph incidence_graph(const Hypergraph& h);

// Transposed roles: X = edges of H, Y = vertices of H.
BipartiteGraph dual_incidence_graph(const Hypergraph& h);

}  // namespace berge
