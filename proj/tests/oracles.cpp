#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace berge::oracles {

namespace {

// All cyclic arrangements: permutations of xset with the first element
// pinned (rotations), both directions kept (harmless for existence).
bool try_orders(const BipartiteGraph& g, std::vector<int>& order, std::size_t fixed) {
    if (fixed == order.size()) {
        std::vector<char> used(static_cast<std::size_t>(g.m()), 0);
        std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
            if (pos == order.size()) return true;
            int from = order[pos];
            int to = order[(pos + 1) % order.size()];
            for (int y = 0; y < g.m(); ++y) {
                if (used[static_cast<std::size_t>(y)]) continue;
                if (!g.has_edge(from, y) || !g.has_edge(to, y)) continue;
                used[static_cast<std::size_t>(y)] = 1;
                if (assign(pos + 1)) return true;
                used[static_cast<std::size_t>(y)] = 0;
            }
            return false;
        };
        return assign(0);
    }
    for (std::size_t i = fixed; i < order.size(); ++i) {
        std::swap(order[fixed], order[i]);
        bool hit = try_orders(g, order, fixed + 1);
        std::swap(order[fixed], order[i]);
        if (hit) return true;
    }
    return false;
}

}  // namespace

bool brute_cycle_exists(const BipartiteGraph& g, const std::vector<int>& xset) {
    if (xset.size() < 2 || int(xset.size()) > g.m()) return false;
    std::vector<int> order(xset);
    return try_orders(g, order, 1);
}

int brute_longest_l(const BipartiteGraph& g) {
    int best = 0;
    std::uint64_t full = (std::uint64_t{1} << g.n()) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        int pc = std::popcount(mask);
        if (pc < 2 || pc <= best) continue;
        std::vector<int> xs;
        for (int i = 0; i < g.n(); ++i)
            if ((mask >> i) & 1) xs.push_back(i);
        if (brute_cycle_exists(g, xs)) best = pc;
    }
    return best;
}

bool brute_berge_with_edges_exists(const Hypergraph& h, const std::vector<int>& edge_set) {
    // Cyclic orders of the edges (first pinned) times all injective base
    // vertex choices with v_i in e_{i-1} and e_i.
    std::vector<int> order(edge_set);
    std::sort(order.begin(), order.end());
    const std::size_t l = order.size();
    std::function<bool(std::size_t)> perms = [&](std::size_t fixed) -> bool {
        if (fixed == l) {
            std::vector<char> used(static_cast<std::size_t>(h.n()), 0);
            std::function<bool(std::size_t)> pick = [&](std::size_t pos) -> bool {
                if (pos == l) return true;
                int eprev = order[(pos + l - 1) % l];
                int ecur = order[pos];
                for (int v = 0; v < h.n(); ++v) {
                    if (used[static_cast<std::size_t>(v)]) continue;
                    if (!h.edge_contains(eprev, v) || !h.edge_contains(ecur, v)) continue;
                    used[static_cast<std::size_t>(v)] = 1;
                    if (pick(pos + 1)) return true;
                    used[static_cast<std::size_t>(v)] = 0;
                }
                return false;
            };
            return pick(0);
        }
        for (std::size_t i = fixed; i < l; ++i) {
            std::swap(order[fixed], order[i]);
            bool hit = perms(fixed + 1);
            std::swap(order[fixed], order[i]);
            if (hit) return true;
        }
        return false;
    };
    return perms(1);
}

namespace {

bool connected_skipping(const std::vector<std::vector<int>>& adj, int skip) {
    int n = int(adj.size());
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (v != skip) {
            start = v;
            break;
        }
    if (start < 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == skip || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++count;
            stack.push_back(w);
        }
    }
    return count == n - (skip >= 0 ? 1 : 0);
}

}  // namespace

bool oracle_two_connected_bigraph(const BipartiteGraph& g) {
    int total = g.n() + g.m();
    if (total < 3) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (int x = 0; x < g.n(); ++x)
        g.row(x).for_each([&](int y) {
            adj[static_cast<std::size_t>(x)].push_back(g.n() + y);
            adj[static_cast<std::size_t>(g.n() + y)].push_back(x);
        });
    if (!connected_skipping(adj, -1)) return false;
    for (int v = 0; v < total; ++v)
        if (!connected_skipping(adj, v)) return false;
    return true;
}

bool brute_condition_lll(const BipartiteGraph& g, const std::vector<int>& a) {
    int need = int(a.size());
    for (std::uint32_t bmask = 0; bmask < (1u << g.m()); ++bmask) {
        if (std::popcount(bmask) < need) continue;
        std::vector<int> bs;
        for (int y = 0; y < g.m(); ++y)
            if ((bmask >> y) & 1) bs.push_back(y);
        int total = need + int(bs.size());
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
        for (std::size_t xi = 0; xi < a.size(); ++xi)
            for (std::size_t yi = 0; yi < bs.size(); ++yi)
                if (g.has_edge(a[xi], bs[yi])) {
                    adj[xi].push_back(int(a.size() + yi));
                    adj[a.size() + yi].push_back(int(xi));
                }
        bool ok = connected_skipping(adj, -1);
        for (int v = 0; ok && v < total; ++v) ok = connected_skipping(adj, v);
        if (ok) return true;
    }
    return false;
}

BipartiteGraph random_bigraph(std::mt19937& rng, int n, int m, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y)
            if (coin(rng)) adj[static_cast<std::size_t>(x)].push_back(y);
    return BipartiteGraph(n, m, adj);
}

BipartiteGraph relabeled(std::mt19937& rng, const BipartiteGraph& g) {
    std::vector<int> xp(static_cast<std::size_t>(g.n())), yp(static_cast<std::size_t>(g.m()));
    std::iota(xp.begin(), xp.end(), 0);
    std::iota(yp.begin(), yp.end(), 0);
    std::shuffle(xp.begin(), xp.end(), rng);
    std::shuffle(yp.begin(), yp.end(), rng);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
    for (int x = 0; x < g.n(); ++x)
        g.row(x).for_each([&](int y) {
            adj[static_cast<std::size_t>(xp[static_cast<std::size_t>(x)])].push_back(
                yp[static_cast<std::size_t>(y)]);
        });
    return BipartiteGraph(g.n(), g.m(), adj);
}

Hypergraph random_hypergraph(std::mt19937& rng, int n, int max_edges) {
    std::uniform_int_distribution<int> edge_count(1, max_edges);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    int k = edge_count(rng);
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < k; ++e) {
        std::uniform_int_distribution<int> size(1, n);
        int s = size(rng);
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        std::vector<int> edge;
        while (int(edge.size()) < s) {
            int v = vertex(rng);
            if (in[static_cast<std::size_t>(v)]) continue;
            in[static_cast<std::size_t>(v)] = 1;
            edge.push_back(v);
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace berge::oracles
