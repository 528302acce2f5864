#include "berge/bipartite_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge {

BipartiteGraph::BipartiteGraph(int n, int m, const std::vector<std::vector<int>>& adj_lists)
    : n_(n), m_(m) {
    if (n < 1) throw std::invalid_argument("BipartiteGraph: n must be >= 1");
    if (m < 0) throw std::invalid_argument("BipartiteGraph: m must be >= 0");
    if (int(adj_lists.size()) != n)
        throw std::invalid_argument("BipartiteGraph: expected " + std::to_string(n) +
                                    " adjacency rows, got " + std::to_string(adj_lists.size()));
    adj_.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        Bitset b(m);
        for (int y : adj_lists[std::size_t(x)]) {
            if (y < 0 || y >= m)
                throw std::invalid_argument("BipartiteGraph: Y index " + std::to_string(y) +
                                            " out of range in row " + std::to_string(x));
            if (b.test(y))
                throw std::invalid_argument("BipartiteGraph: duplicate Y index " +
                                            std::to_string(y) + " in row " + std::to_string(x));
            b.set(y);
        }
        adj_.push_back(std::move(b));
    }
}

int BipartiteGraph::y_degree(int y) const {
    if (y < 0 || y >= m_) throw std::out_of_range("y_degree: index out of range");
    int d = 0;
    for (const auto& r : adj_) d += r.test(y) ? 1 : 0;
    return d;
}

int BipartiteGraph::min_x_degree() const {
    int best = m_ + 1;
    for (const auto& r : adj_) best = std::min(best, r.count());
    return best;
}

std::vector<int> BipartiteGraph::x_degrees() const {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(n_));
    for (const auto& r : adj_) d.push_back(r.count());
    return d;
}

std::vector<int> BipartiteGraph::y_degrees() const {
    std::vector<int> d(static_cast<std::size_t>(m_), 0);
    for (const auto& r : adj_) r.for_each([&](int y) { ++d[std::size_t(y)]; });
    return d;
}

Bitset BipartiteGraph::column(int y) const {
    if (y < 0 || y >= m_) throw std::out_of_range("column: index out of range");
    Bitset c(n_);
    for (int x = 0; x < n_; ++x)
        if (adj_[std::size_t(x)].test(y)) c.set(x);
    return c;
}

std::vector<std::vector<int>> BipartiteGraph::adjacency_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (const auto& r : adj_) out.push_back(r.indices());
    return out;
}

}  // namespace berge
