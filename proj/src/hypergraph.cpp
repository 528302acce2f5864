#include "berge/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("Hypergraph: n must be >= 1");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto& ed = edges_[e];
        if (ed.empty())
            throw std::invalid_argument("Hypergraph: edge " + std::to_string(e) + " is empty");
        std::sort(ed.begin(), ed.end());
        for (std::size_t i = 0; i < ed.size(); ++i) {
            if (ed[i] < 0 || ed[i] >= n)
                throw std::invalid_argument("Hypergraph: vertex " + std::to_string(ed[i]) +
                                            " out of range in edge " + std::to_string(e));
            if (i > 0 && ed[i] == ed[i - 1])
                throw std::invalid_argument("Hypergraph: repeated vertex " +
                                            std::to_string(ed[i]) + " in edge " +
                                            std::to_string(e));
        }
    }
}

bool Hypergraph::edge_contains(int e, int v) const {
    const auto& ed = edge(e);
    return std::binary_search(ed.begin(), ed.end(), v);
}

int Hypergraph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("degree: vertex out of range");
    int d = 0;
    for (int e = 0; e < edge_count(); ++e) d += edge_contains(e, v) ? 1 : 0;
    return d;
}

int Hypergraph::min_degree() const {
    auto d = degrees();
    return *std::min_element(d.begin(), d.end());
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& ed : edges_)
        for (int v : ed) ++d[std::size_t(v)];
    return d;
}

int Hypergraph::codegree(const std::vector<int>& s) const {
    if (s.empty()) throw std::invalid_argument("codegree: vertex set must be nonempty");
    for (int v : s)
        if (v < 0 || v >= n_) throw std::invalid_argument("codegree: vertex out of range");
    int c = 0;
    for (int e = 0; e < edge_count(); ++e) {
        bool all = true;
        for (int v : s)
            if (!edge_contains(e, v)) {
                all = false;
                break;
            }
        c += all ? 1 : 0;
    }
    return c;
}

BipartiteGraph incidence_graph(const Hypergraph& h) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.n()));
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edge(e)) adj[std::size_t(v)].push_back(e);
    return BipartiteGraph(h.n(), h.edge_count(), adj);
}

BipartiteGraph dual_incidence_graph(const Hypergraph& h) {
    if (h.edge_count() < 1)
        throw std::invalid_argument("dual_incidence_graph: hypergraph has no edges");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.edge_count()));
    for (int e = 0; e < h.edge_count(); ++e) adj[std::size_t(e)] = h.edge(e);
    return BipartiteGraph(h.edge_count(), h.n(), adj);
}

}  // namespace berge
