#include "berge/witness.hpp"

#include <set>
#include <stdexcept>

namespace berge {

namespace {

bool all_distinct(const std::vector<int>& v) {
    std::set<int> s(v.begin(), v.end());
    return s.size() == v.size();
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

}  // namespace

bool cycle_witness_valid(const BipartiteGraph& g, const CycleWitness& w, std::string* why) {
    const int l = w.l();
    if (l < 2) return fail(why, "cycle has fewer than 2 X-vertices");
    if (int(w.ys.size()) != l) return fail(why, "xs/ys length mismatch");
    for (int x : w.xs)
        if (x < 0 || x >= g.n()) return fail(why, "X index out of range");
    for (int y : w.ys)
        if (y < 0 || y >= g.m()) return fail(why, "Y index out of range");
    if (!all_distinct(w.xs)) return fail(why, "repeated X vertex");
    if (!all_distinct(w.ys)) return fail(why, "repeated Y vertex");
    for (int i = 0; i < l; ++i) {
        int prev = w.xs[std::size_t((i + l - 1) % l)];
        if (!g.has_edge(w.xs[std::size_t(i)], w.ys[std::size_t(i)]))
            return fail(why, "missing edge x" + std::to_string(w.xs[std::size_t(i)]) + "-y" +
                                 std::to_string(w.ys[std::size_t(i)]));
        if (!g.has_edge(prev, w.ys[std::size_t(i)]))
            return fail(why, "missing edge x" + std::to_string(prev) + "-y" +
                                 std::to_string(w.ys[std::size_t(i)]));
    }
    return true;
}

CycleWitness make_cycle_witness(const BipartiteGraph& g, std::vector<int> xs,
                                std::vector<int> ys) {
    CycleWitness w{std::move(xs), std::move(ys)};
    std::string why;
    if (!cycle_witness_valid(g, w, &why))
        throw std::invalid_argument("invalid cycle witness: " + why);
    return w;
}

bool berge_witness_valid(const Hypergraph& h, const BergeCycleWitness& w, std::string* why) {
    const int l = w.l();
    if (l < 2) return fail(why, "Berge cycle has fewer than 2 base vertices");
    if (int(w.edge_indices.size()) != l) return fail(why, "base/edge length mismatch");
    for (int v : w.base_vertices)
        if (v < 0 || v >= h.n()) return fail(why, "base vertex out of range");
    for (int e : w.edge_indices)
        if (e < 0 || e >= h.edge_count()) return fail(why, "edge index out of range");
    if (!all_distinct(w.base_vertices)) return fail(why, "repeated base vertex");
    if (!all_distinct(w.edge_indices)) return fail(why, "repeated edge");
    for (int i = 0; i < l; ++i) {
        int vi = w.base_vertices[std::size_t(i)];
        int vnext = w.base_vertices[std::size_t((i + 1) % l)];
        int e = w.edge_indices[std::size_t(i)];
        if (!h.edge_contains(e, vi) || !h.edge_contains(e, vnext))
            return fail(why, "edge " + std::to_string(e) + " does not contain both v" +
                                 std::to_string(vi) + " and v" + std::to_string(vnext));
    }
    return true;
}

BergeCycleWitness make_berge_witness(const Hypergraph& h, std::vector<int> base,
                                     std::vector<int> edges) {
    BergeCycleWitness w{std::move(base), std::move(edges)};
    std::string why;
    if (!berge_witness_valid(h, w, &why))
        throw std::invalid_argument("invalid Berge cycle witness: " + why);
    return w;
}

BergeCycleWitness berge_from_incidence_cycle(const Hypergraph& h, const CycleWitness& w) {
    // ys[i] joins xs[i-1] and xs[i], so the edge between v_i = xs[i] and
    // v_{i+1} = xs[i+1] is ys[i+1].
    const int l = w.l();
    std::vector<int> edges(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) edges[std::size_t(i)] = w.ys[std::size_t((i + 1) % l)];
    return make_berge_witness(h, w.xs, edges);
}

CycleWitness incidence_cycle_from_berge(const Hypergraph& h, const BergeCycleWitness& w) {
    const int l = w.l();
    std::vector<int> ys(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) ys[std::size_t(i)] = w.edge_indices[std::size_t((i + l - 1) % l)];
    return make_cycle_witness(incidence_graph(h), w.base_vertices, ys);
}

BergeCycleWitness berge_from_dual_cycle(const Hypergraph& h, const CycleWitness& w) {
    // In the dual graph xs are edge indices and ys are vertices; ys[i] lies
    // in both edges xs[i-1] and xs[i], so base v_i = ys[i], edge e_i = xs[i].
    return make_berge_witness(h, w.ys, w.xs);
}

}  // namespace berge
