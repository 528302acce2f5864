#pragma once

#include "berge/bitset.hpp"

#include <cstdint>
#include <vector>

namespace berge {

/// Bipartite graph with distinguished parts X (rows) and Y (columns).
/// Immutable after construction; neighborhoods of X-vertices are stored as
/// bit vectors over {0..m-1}.
///
/// Membership in the class G(n,m,delta) is the derived predicate
/// `in_gnmd(delta)`: n >= 2 and every X-degree >= delta.
class BipartiteGraph {
public:
    // Validates: y indices in range, no repeats within a row.
    BipartiteGraph(int n, int m, const std::vector<std::vector<int>>& adj_lists);

    int n() const { return n_; }
    int m() const { return m_; }

    const Bitset& row(int x) const { return adj_.at(static_cast<std::size_t>(x)); }
    bool has_edge(int x, int y) const { return row(x).test(y); }

    int x_degree(int x) const { return row(x).count(); }
    int y_degree(int y) const;
    int min_x_degree() const;
    std::vector<int> x_degrees() const;
    std::vector<int> y_degrees() const;

    // Set of X-vertices adjacent to y, as a Bitset of width n.
    Bitset column(int y) const;

    bool in_gnmd(int delta) const { return n_ >= 2 && min_x_degree() >= delta; }

    std::vector<std::vector<int>> adjacency_lists() const;

    bool operator==(const BipartiteGraph& o) const {
        return n_ == o.n_ && m_ == o.m_ && adj_ == o.adj_;
    }

private:
    int n_ = 0, m_ = 0;
    std::vector<Bitset> adj_;
};

}  // namespace berge
