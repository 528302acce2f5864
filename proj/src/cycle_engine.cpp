#include "berge/cycle_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace berge {

namespace {

// Backtracking search over cyclic orders of xset with distinct Y connectors.
struct CycleSearch {
    const BipartiteGraph& g;
    std::vector<int> verts;  // xset ordered by (degree asc, index asc)
    int k;

    std::vector<int> path;   // placed X-vertices
    std::vector<int> conn;   // conn[i] joins path[i] and path[i+1]
    std::vector<char> used;  // by position in verts
    Bitset used_y;

    bool collect_all = false;
    const std::function<void(const CycleWitness&)>* sink = nullptr;
    std::optional<CycleWitness> first;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    bool done = false;

    // matching scratch
    std::vector<int> match_of_y;
    std::vector<char> visited_y;

    CycleSearch(const BipartiteGraph& graph, const std::vector<int>& xset)
        : g(graph), verts(xset), k(int(xset.size())), used_y(graph.m()) {
        std::sort(verts.begin(), verts.end(), [&](int a, int b) {
            int da = g.x_degree(a), db = g.x_degree(b);
            return da != db ? da < db : a < b;
        });
        used.assign(static_cast<std::size_t>(k), 0);
        path.reserve(static_cast<std::size_t>(k));
        conn.reserve(static_cast<std::size_t>(k));
        match_of_y.assign(static_cast<std::size_t>(g.m()), -1);
        visited_y.assign(static_cast<std::size_t>(g.m()), 0);
    }

    bool try_match(int v, const Bitset& pool) {
        bool found = false;
        (g.row(v) & pool).for_each([&](int y) {
            if (found || visited_y[std::size_t(y)]) return;
            visited_y[std::size_t(y)] = 1;
            if (match_of_y[std::size_t(y)] < 0 || try_match(match_of_y[std::size_t(y)], pool)) {
                match_of_y[std::size_t(y)] = v;
                found = true;
            }
        });
        return found;
    }

    // Necessary feasibility test after hypothetically extending the path:
    // every still-unplaced vertex will consume two distinct unused
    // connectors and the vertex after it one; a matching of
    // {unplaced} + {endpoint} into the unused pool must exist, and the
    // anchor still needs a free closing connector.
    bool feasible(int endpoint, const Bitset& pool) {
        if (!(g.row(path[0]) & pool).any()) return false;
        std::vector<int> need;
        for (int i = 0; i < k; ++i)
            if (!used[std::size_t(i)]) need.push_back(verts[std::size_t(i)]);
        for (int v : need)
            if ((g.row(v) & pool).count() < 2) return false;
        need.push_back(endpoint);
        std::fill(match_of_y.begin(), match_of_y.end(), -1);
        for (int v : need) {
            std::fill(visited_y.begin(), visited_y.end(), 0);
            if (!try_match(v, pool)) return false;
        }
        return true;
    }

    void emit(int closing_y) {
        CycleWitness w;
        w.xs = path;
        w.ys.reserve(static_cast<std::size_t>(k));
        w.ys.push_back(closing_y);
        for (int i = 0; i + 1 < k; ++i) w.ys.push_back(conn[std::size_t(i)]);
        if (!collect_all) {
            first = std::move(w);
            done = true;
            return;
        }
        // Dedup as a subgraph: the anchor is fixed, so each cycle shows up
        // in at most two traversal directions.
        auto key = std::make_pair(w.xs, w.ys);
        std::vector<int> rx(static_cast<std::size_t>(k)), ry(static_cast<std::size_t>(k));
        rx[0] = w.xs[0];
        for (int i = 1; i < k; ++i) rx[std::size_t(i)] = w.xs[std::size_t(k - i)];
        ry[0] = w.ys[std::size_t(1 % k)];
        for (int i = 1; i < k; ++i) ry[std::size_t(i)] = w.ys[std::size_t((k - i + 1) % k)];
        auto rkey = std::make_pair(rx, ry);
        if (rkey < key) key = rkey;
        if (seen.insert(key).second) (*sink)(w);
    }

    void dfs() {
        if (done) return;
        if (int(path.size()) == k) {
            auto closing = g.row(path.back()) & g.row(path[0]);
            closing = closing.and_not(used_y);
            for (int y = closing.next_set_bit(0); y >= 0 && !done; y = closing.next_set_bit(y + 1))
                emit(y);
            return;
        }
        for (int i = 0; i < k && !done; ++i) {
            if (used[std::size_t(i)]) continue;
            int next = verts[std::size_t(i)];
            auto common = (g.row(path.back()) & g.row(next)).and_not(used_y);
            for (int y = common.next_set_bit(0); y >= 0 && !done; y = common.next_set_bit(y + 1)) {
                used[std::size_t(i)] = 1;
                used_y.set(y);
                path.push_back(next);
                conn.push_back(y);
                if (int(path.size()) == k || feasible(next, used_y.complement())) dfs();
                conn.pop_back();
                path.pop_back();
                used_y.reset(y);
                used[std::size_t(i)] = 0;
            }
        }
    }

    void run() {
        // Anchoring the first search-order vertex kills cyclic rotations.
        path.push_back(verts[0]);
        used[0] = 1;
        if (int(path.size()) == k || feasible(verts[0], used_y.complement())) dfs();
    }
};

std::vector<int> checked_xset(const BipartiteGraph& g, const std::vector<int>& xset,
                              int min_size, const char* what) {
    if (int(xset.size()) < min_size)
        throw std::invalid_argument(std::string(what) + ": needs at least " +
                                    std::to_string(min_size) + " vertices");
    std::vector<int> v(xset);
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= g.n())
            throw std::invalid_argument(std::string(what) + ": index out of range");
        if (i > 0 && v[i] == v[i - 1])
            throw std::invalid_argument(std::string(what) + ": repeated index");
    }
    return v;
}

// Ascending-mask enumeration of fixed-popcount subsets (Gosper).
template <typename F>
void for_each_subset_of_size(int n, int size, F&& f) {
    if (size > n || size <= 0) return;
    std::uint64_t v = (std::uint64_t{1} << size) - 1;
    std::uint64_t limit = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (true) {
        f(v);
        if (v == (limit & ~((std::uint64_t{1} << (n - size)) - 1))) break;
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

std::optional<CycleWitness> find_cycle_covering_exactly(const BipartiteGraph& g,
                                                        const std::vector<int>& xset) {
    auto v = checked_xset(g, xset, 2, "find_cycle_covering_exactly");
    CycleSearch s(g, v);
    s.run();
    if (s.first) return make_cycle_witness(g, s.first->xs, s.first->ys);
    return std::nullopt;
}

void enumerate_cycles_covering_exactly(const BipartiteGraph& g, const std::vector<int>& xset,
                                       const std::function<void(const CycleWitness&)>& fn) {
    auto v = checked_xset(g, xset, 2, "enumerate_cycles_covering_exactly");
    CycleSearch s(g, v);
    s.collect_all = true;
    s.sink = &fn;
    s.run();
}

std::optional<CycleWitness> longest_cycle(const BipartiteGraph& g) {
    if (g.n() > 64) throw std::runtime_error("longest_cycle: n > 64 unsupported");
    int top = std::min(g.n(), g.m());
    for (int l = top; l >= 2; --l) {
        std::optional<CycleWitness> found;
        for_each_subset_of_size(g.n(), l, [&](std::uint64_t mask) {
            if (found) return;
            if (auto w = find_cycle_covering_exactly(g, mask_to_indices(mask))) found = w;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool has_spanning_x_cycle(const BipartiteGraph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) all[std::size_t(i)] = i;
    return find_cycle_covering_exactly(g, all).has_value();
}

std::optional<BergeCycleWitness> find_berge_cycle(const Hypergraph& h,
                                                  const std::vector<int>& base_set) {
    if (base_set.size() < 3)
        throw std::invalid_argument("find_berge_cycle: base set needs at least 3 vertices");
    auto inc = incidence_graph(h);
    auto w = find_cycle_covering_exactly(inc, base_set);
    if (!w) return std::nullopt;
    return berge_from_incidence_cycle(h, *w);
}

bool has_hamiltonian_berge_cycle(const Hypergraph& h) {
    if (h.n() < 3)
        throw std::invalid_argument("has_hamiltonian_berge_cycle: needs at least 3 vertices");
    std::vector<int> all(static_cast<std::size_t>(h.n()));
    for (int i = 0; i < h.n(); ++i) all[std::size_t(i)] = i;
    return find_berge_cycle(h, all).has_value();
}

std::optional<BergeCycleWitness> find_berge_cycle_with_edges(const Hypergraph& h,
                                                             const std::vector<int>& edge_set) {
    if (edge_set.size() < 3)
        throw std::invalid_argument("find_berge_cycle_with_edges: needs at least 3 edges");
    auto dual = dual_incidence_graph(h);
    auto w = find_cycle_covering_exactly(dual, edge_set);
    if (!w) return std::nullopt;
    return berge_from_dual_cycle(h, *w);
}

SubsetSweepResult x_super_pancyclic_report(const BipartiteGraph& g) {
    if (g.n() < 3)
        throw std::invalid_argument("x_super_pancyclic: requires |X| >= 3");
    if (g.n() > 30) throw std::runtime_error("x_super_pancyclic: n too large for subset sweep");
    SubsetSweepResult r;
    std::uint64_t full = (std::uint64_t{1} << g.n()) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) < 3) continue;
        auto sub = mask_to_indices(mask);
        if (!find_cycle_covering_exactly(g, sub)) {
            r.ok = false;
            r.first_failing = sub;
            return r;
        }
    }
    return r;
}

bool is_x_super_pancyclic(const BipartiteGraph& g) { return x_super_pancyclic_report(g).ok; }

SubsetSweepResult super_pancyclic_report(const Hypergraph& h) {
    if (h.n() < 3) throw std::invalid_argument("super_pancyclic: requires n >= 3");
    return x_super_pancyclic_report(incidence_graph(h));
}

bool is_super_pancyclic(const Hypergraph& h) { return super_pancyclic_report(h).ok; }

std::vector<CycleWitness> all_longest_cycles(const BipartiteGraph& g) {
    std::vector<CycleWitness> out;
    auto best = longest_cycle(g);
    if (!best) return out;
    int l = best->l();
    for_each_subset_of_size(g.n(), l, [&](std::uint64_t mask) {
        enumerate_cycles_covering_exactly(g, mask_to_indices(mask),
                                          [&](const CycleWitness& w) { out.push_back(w); });
    });
    return out;
}

}  // namespace berge
