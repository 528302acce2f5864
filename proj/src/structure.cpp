#include "berge/structure.hpp"

#include "berge/constructions.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace berge {

namespace {

// Combined-vertex adjacency: X-vertex x is node x, Y-vertex y is node n+y.
struct CombinedGraph {
    int total;
    std::vector<std::vector<int>> adj;

    explicit CombinedGraph(const BipartiteGraph& g) : total(g.n() + g.m()), adj(static_cast<std::size_t>(total)) {
        for (int x = 0; x < g.n(); ++x)
            g.row(x).for_each([&](int y) {
                adj[std::size_t(x)].push_back(g.n() + y);
                adj[std::size_t(g.n() + y)].push_back(x);
            });
    }
};

bool two_connected_adj(const std::vector<std::vector<int>>& adj) {
    int n = int(adj.size());
    if (n < 3) throw std::invalid_argument("2-connectivity undefined on fewer than 3 vertices");
    std::vector<int> depth(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    bool has_cut = false;
    int visited = 0;
    // Iterative lowpoint DFS from vertex 0.
    struct Frame {
        int v, parent;
        std::size_t next = 0;
        int children = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1});
    depth[0] = 0;
    low[0] = 0;
    ++visited;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < adj[std::size_t(f.v)].size()) {
            int w = adj[std::size_t(f.v)][f.next++];
            if (depth[std::size_t(w)] < 0) {
                depth[std::size_t(w)] = depth[std::size_t(f.v)] + 1;
                low[std::size_t(w)] = depth[std::size_t(w)];
                ++visited;
                ++f.children;
                stack.push_back({w, f.v});
            } else if (w != f.parent) {
                low[std::size_t(f.v)] = std::min(low[std::size_t(f.v)], depth[std::size_t(w)]);
            }
        } else {
            int v = f.v, parent = f.parent, children = f.children;
            stack.pop_back();
            if (parent >= 0) {
                low[std::size_t(parent)] = std::min(low[std::size_t(parent)], low[std::size_t(v)]);
                if (parent != 0 && low[std::size_t(v)] >= depth[std::size_t(parent)])
                    has_cut = true;
            } else if (children > 1) {
                has_cut = true;  // root with several DFS children
            }
        }
    }
    return visited == n && !has_cut;
}

std::uint64_t indices_to_mask(const std::vector<int>& v) {
    std::uint64_t m = 0;
    for (int i : v) m |= std::uint64_t{1} << i;
    return m;
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::vector<int> checked_a(const BipartiteGraph& g, const std::vector<int>& a, const char* what) {
    if (a.size() < 3)
        throw std::invalid_argument(std::string(what) + ": A must have at least 3 vertices");
    std::vector<int> v(a);
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= g.n())
            throw std::invalid_argument(std::string(what) + ": index out of range");
        if (i > 0 && v[i] == v[i - 1])
            throw std::invalid_argument(std::string(what) + ": repeated index");
    }
    return v;
}

}  // namespace

bool is_2connected(const BipartiteGraph& g) {
    if (g.n() + g.m() < 3)
        throw std::invalid_argument("is_2connected: graph has fewer than 3 vertices");
    return two_connected_adj(CombinedGraph(g).adj);
}

bool is_2connected_hypergraph(const Hypergraph& h) {
    return is_2connected(incidence_graph(h));
}

bool induced_two_connected(const BipartiteGraph& g, const std::vector<int>& xs,
                           const std::vector<int>& ys) {
    int total = int(xs.size() + ys.size());
    if (total < 3)
        throw std::invalid_argument("induced_two_connected: fewer than 3 vertices");
    std::vector<int> xpos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < xs.size(); ++i) xpos[std::size_t(xs[i])] = int(i);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (std::size_t j = 0; j < ys.size(); ++j) {
        int ynode = int(xs.size() + j);
        g.column(ys[j]).for_each([&](int x) {
            int xi = xpos[std::size_t(x)];
            if (xi < 0) return;
            adj[std::size_t(xi)].push_back(ynode);
            adj[std::size_t(ynode)].push_back(xi);
        });
    }
    return two_connected_adj(adj);
}

std::optional<std::vector<int>> check_condition_lll_for(const BipartiteGraph& g,
                                                        const std::vector<int>& a) {
    auto av = checked_a(g, a, "check_condition_lll_for");
    std::uint64_t amask = indices_to_mask(av);
    std::vector<int> bmax;
    for (int y = 0; y < g.m(); ++y) {
        int within = 0;
        g.column(y).for_each([&](int x) {
            if ((amask >> x) & 1) ++within;
        });
        if (within >= 2) bmax.push_back(y);
    }
    if (int(bmax.size()) < int(av.size())) return std::nullopt;
    if (!induced_two_connected(g, av, bmax)) return std::nullopt;
    return bmax;
}

LllReport satisfies_lll_report(const BipartiteGraph& g) {
    if (g.n() < 3) throw std::invalid_argument("satisfies_lll: requires |X| >= 3");
    if (g.n() > 30) throw std::runtime_error("satisfies_lll: n too large for subset sweep");
    LllReport r;
    std::uint64_t full = (std::uint64_t{1} << g.n()) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) < 3) continue;
        auto a = mask_to_indices(mask);
        if (!check_condition_lll_for(g, a)) {
            r.ok = false;
            r.first_failing_a = a;
            return r;
        }
    }
    return r;
}

bool satisfies_lll(const BipartiteGraph& g) { return satisfies_lll_report(g).ok; }

std::vector<TightPair> all_tight_pairs(const BipartiteGraph& g, int guard_n) {
    if (g.n() > guard_n)
        throw std::runtime_error("tight pairs: n=" + std::to_string(g.n()) +
                                 " exceeds guard n<=" + std::to_string(guard_n));
    std::vector<TightPair> best;
    int best_t = -1;
    auto cycles = all_longest_cycles(g);
    if (cycles.empty()) return best;
    if (cycles.front().l() == g.n()) return best;  // every longest cycle covers X
    for (const auto& c : cycles) {
        Bitset ymask(g.m());
        for (int y : c.ys) ymask.set(y);
        std::uint64_t covered = indices_to_mask(c.xs);
        for (int x = 0; x < g.n(); ++x) {
            if ((covered >> x) & 1) continue;
            int t = (g.row(x) & ymask).count();
            if (t > best_t) {
                best_t = t;
                best.clear();
            }
            if (t == best_t) best.push_back({c, x, t});
        }
    }
    return best;
}

std::optional<TightPair> find_tight_pair(const BipartiteGraph& g, int guard_n) {
    auto all = all_tight_pairs(g, guard_n);
    if (all.empty()) return std::nullopt;
    return all.front();
}

CrossingQuery are_crossing(const BipartiteGraph& g, const CycleWitness& cycle, int i, int j) {
    std::string why;
    if (!cycle_witness_valid(g, cycle, &why))
        throw std::invalid_argument("are_crossing: invalid cycle: " + why);
    const int l = cycle.l();
    if (!(1 <= i && i < j && j <= l))
        throw std::invalid_argument("are_crossing: need 1 <= i < j <= l");

    CrossingQuery q;
    q.i = i;
    q.j = j;
    const Bitset& nxi = g.row(cycle.xs[std::size_t(i - 1)]);
    const Bitset& nxj = g.row(cycle.xs[std::size_t(j - 1)]);
    auto ypos = [&](int p) { return cycle.ys[std::size_t(p - 1)]; };  // 1-based
    auto excluded = [&](int ip, int jp) {
        auto same = [l](int a, int b, int c, int d) {
            auto norm = [l](int v) { return (v - 1) % l + 1; };
            int na = norm(a), nb = norm(b), nc = norm(c), nd = norm(d);
            return (na == nc && nb == nd) || (na == nd && nb == nc);
        };
        return same(ip, jp, i, i + 1) || same(ip, jp, j, j + 1);
    };

    // First bullet: i' = j' + 1 with i+1 <= j' <= j-1 (both connectors
    // inside the segment from y_{i+1} to y_j).
    for (int jp = i + 1; jp <= j - 1; ++jp) {
        int ip = jp + 1;
        if (excluded(ip, jp)) continue;
        if (nxi.test(ypos(ip)) && nxj.test(ypos(jp))) {
            q.crossing = true;
            q.i_prime = ip;
            q.j_prime = jp;
            return q;
        }
    }
    // Second bullet: j' = i' + 1 mod l with both connectors inside the
    // segment from y_{j+1} around to y_i.
    auto try_second = [&](int ip) {
        int jp = ip % l + 1;
        if (excluded(ip, jp)) return false;
        if (nxi.test(ypos(ip)) && nxj.test(ypos(jp))) {
            q.crossing = true;
            q.i_prime = ip;
            q.j_prime = jp;
            return true;
        }
        return false;
    };
    for (int ip = j + 1; ip <= l; ++ip)
        if (try_second(ip)) return q;
    for (int ip = 1; ip <= i - 1; ++ip)
        if (try_second(ip)) return q;
    return q;
}

AuditReport audit_noncrossing_bound(const BipartiteGraph& g, const CycleWitness& cycle) {
    std::string why;
    if (!cycle_witness_valid(g, cycle, &why))
        throw std::invalid_argument("audit_noncrossing_bound: invalid cycle: " + why);
    auto best = longest_cycle(g);
    if (!best || best->l() != cycle.l())
        throw std::invalid_argument("audit_noncrossing_bound: cycle is not a longest cycle");

    AuditReport rep;
    const int l = cycle.l();
    Bitset ymask(g.m());
    for (int y : cycle.ys) ymask.set(y);
    for (int i = 1; i < l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
            auto q = are_crossing(g, cycle, i, j);
            if (q.crossing) continue;
            ++rep.checked;
            int di = (g.row(cycle.xs[std::size_t(i - 1)]) & ymask).count();
            int dj = (g.row(cycle.xs[std::size_t(j - 1)]) & ymask).count();
            if (di + dj > l + 2)
                rep.violations.push_back({"degree-sum bound exceeded: " + std::to_string(di) +
                                              "+" + std::to_string(dj) + " > " +
                                              std::to_string(l + 2),
                                          {i, j}});
        }
    }
    return rep;
}

AuditReport audit_separation_property(const BipartiteGraph& g, const CycleWitness& cycle,
                                      int x) {
    AuditReport rep;
    std::string why;
    if (!cycle_witness_valid(g, cycle, &why))
        throw std::invalid_argument("audit_separation_property: invalid cycle: " + why);
    if (x < 0 || x >= g.n())
        throw std::invalid_argument("audit_separation_property: x out of range");

    auto fail_hyp = [&](const std::string& note) {
        rep.hypotheses_met = false;
        rep.hypothesis_note = note;
        return rep;
    };
    for (int cx : cycle.xs)
        if (cx == x) return fail_hyp("x lies on the cycle");
    auto best = longest_cycle(g);
    if (!best || best->l() != cycle.l()) return fail_hyp("cycle is not a longest cycle");
    Bitset ymask(g.m());
    for (int y : cycle.ys) ymask.set(y);
    if (!ymask.is_subset_of(g.row(x)))
        return fail_hyp("Y vertices of the cycle are not all neighbors of x");
    int delta = g.min_x_degree();
    if (g.n() > delta)
        return fail_hyp("n > minimum X-degree");

    // BFS in G - x_i from y; reaching any other cycle vertex is a violation.
    CombinedGraph cg(g);
    std::vector<char> on_cycle(static_cast<std::size_t>(cg.total), 0);
    for (int cx : cycle.xs) on_cycle[std::size_t(cx)] = 1;
    for (int cy : cycle.ys) on_cycle[std::size_t(g.n() + cy)] = 1;

    for (int p = 0; p < cycle.l(); ++p) {
        int xi = cycle.xs[std::size_t(p)];
        auto outside = g.row(xi).and_not(ymask);
        outside.for_each([&](int y) {
            ++rep.checked;
            std::vector<char> seen(static_cast<std::size_t>(cg.total), 0);
            std::vector<int> queue{g.n() + y};
            seen[std::size_t(g.n() + y)] = 1;
            seen[std::size_t(xi)] = 1;  // removed vertex
            bool reached = false;
            while (!queue.empty() && !reached) {
                int v = queue.back();
                queue.pop_back();
                for (int w : cg.adj[std::size_t(v)]) {
                    if (seen[std::size_t(w)]) continue;
                    if (on_cycle[std::size_t(w)] && w != xi) {
                        reached = true;
                        break;
                    }
                    seen[std::size_t(w)] = 1;
                    queue.push_back(w);
                }
            }
            if (reached)
                rep.violations.push_back(
                    {"x" + std::to_string(xi) + " does not separate y" + std::to_string(y) +
                         " from the rest of the cycle",
                     {xi, y}});
        });
    }
    return rep;
}

AuditReport audit_neighbor_claims(const BipartiteGraph& g, const TightPair& tp) {
    AuditReport rep;
    std::string why;
    if (!cycle_witness_valid(g, tp.cycle, &why))
        throw std::invalid_argument("audit_neighbor_claims: invalid cycle: " + why);
    const auto& c = tp.cycle;
    Bitset ymask(g.m());
    for (int y : c.ys) ymask.set(y);

    std::vector<int> hits;  // positions p with y_p in N(x)
    for (int p = 0; p < c.l(); ++p)
        if (g.row(tp.x).test(c.ys[std::size_t(p)])) hits.push_back(p);

    auto outside = [&](int xv) { return g.row(xv).and_not(ymask); };
    Bitset x_out = outside(tp.x);
    for (int p : hits) {
        ++rep.checked;
        if (outside(c.xs[std::size_t(p)]).intersects(x_out))
            rep.violations.push_back({"N(x_i)-V(C) meets N(x)-V(C) at i=" + std::to_string(p + 1),
                                      {c.xs[std::size_t(p)], tp.x}});
    }
    for (std::size_t a = 0; a < hits.size(); ++a) {
        for (std::size_t b = a + 1; b < hits.size(); ++b) {
            ++rep.checked;
            if (outside(c.xs[std::size_t(hits[a])]).intersects(outside(c.xs[std::size_t(hits[b])])))
                rep.violations.push_back(
                    {"N(x_i)-V(C) meets N(x_j)-V(C) at i=" + std::to_string(hits[a] + 1) +
                         ", j=" + std::to_string(hits[b] + 1),
                     {c.xs[std::size_t(hits[a])], c.xs[std::size_t(hits[b])]}});
        }
    }
    return rep;
}

std::string to_json_string(const AuditReport& rep) {
    nlohmann::ordered_json j;
    j["hypotheses_met"] = rep.hypotheses_met;
    if (!rep.hypothesis_note.empty()) j["hypothesis_note"] = rep.hypothesis_note;
    j["checked"] = rep.checked;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : rep.violations) arr.push_back({{"what", v.what}, {"where", v.where}});
    j["violations"] = arr;
    j["ok"] = rep.ok();
    return j.dump(2);
}

std::string ExceptionClassification::label() const {
    switch (kind) {
        case IsoG1: return "iso-G1";
        case IsoG2: return "iso-G2(" + std::to_string(a) + "," + std::to_string(b) + ")";
        default: return "other";
    }
}

ExceptionClassification classify_exception(const BipartiteGraph& g, const CanonLimits& limits) {
    ExceptionClassification out;
    const int n = g.n(), m = g.m();
    auto form = canonical_form(g, limits);
    if (m == 2 * n - 1 && n >= 2) {
        if (canonical_form(gen_g1(n), limits) == form) {
            out.kind = ExceptionClassification::IsoG1;
            return out;
        }
    }
    if (m % 2 == 1) {
        int delta = (m + 1) / 2;
        if (delta >= 2 && n >= 2) {
            for (int b = 1; 2 * b <= n; ++b) {
                int a = n - b;
                if (canonical_form(gen_g2(a, b, delta), limits) == form) {
                    out.kind = ExceptionClassification::IsoG2;
                    out.a = a;
                    out.b = b;
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace berge
