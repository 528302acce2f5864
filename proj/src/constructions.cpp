#include "berge/constructions.hpp"

#include "berge/cycle_engine.hpp"
#include "berge/structure.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace berge {

ConstructionSpec ConstructionSpec::g1(int delta) {
    ConstructionSpec s;
    s.family = G1;
    s.delta = delta;
    s.n = delta;
    return s;
}

ConstructionSpec ConstructionSpec::g2(int a, int b, int delta) {
    ConstructionSpec s;
    s.family = G2;
    s.a = a;
    s.b = b;
    s.delta = delta;
    s.n = a + b;
    return s;
}

ConstructionSpec ConstructionSpec::g3(int n1, int n2, int n3, int delta) {
    ConstructionSpec s;
    s.family = G3;
    s.n1 = n1;
    s.n2 = n2;
    s.n3 = n3;
    s.delta = delta;
    s.n = n1 + n2 + n3;
    return s;
}

ConstructionSpec ConstructionSpec::h3(int n) {
    ConstructionSpec s;
    s.family = H3;
    s.n = n;
    return s;
}

ConstructionSpec ConstructionSpec::h4(int n) {
    ConstructionSpec s;
    s.family = H4;
    s.n = n;
    return s;
}

std::string ConstructionSpec::name() const {
    std::ostringstream os;
    switch (family) {
        case G1: os << "G1(delta=" << delta << ")"; break;
        case G2: os << "G2(a=" << a << ",b=" << b << ",delta=" << delta << ")"; break;
        case G3:
            os << "G3(n1=" << n1 << ",n2=" << n2 << ",n3=" << n3 << ",delta=" << delta << ")";
            break;
        case H3: os << "C3(n=" << n << ")"; break;
        case H4: os << "C4(n=" << n << ")"; break;
    }
    return os.str();
}

BipartiteGraph gen_g1(int delta) {
    if (delta < 2) throw std::invalid_argument("gen_g1: delta must be >= 2");
    int n = delta, m = 2 * delta - 1;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < delta - 1; ++y) adj[std::size_t(x)].push_back(y);
        adj[std::size_t(x)].push_back(delta - 1 + x);
    }
    return BipartiteGraph(n, m, adj);
}

BipartiteGraph gen_g2(int a, int b, int delta) {
    if (b < 1) throw std::invalid_argument("gen_g2: b must be >= 1");
    if (a < b) throw std::invalid_argument("gen_g2: a must be >= b");
    if (delta < 2) throw std::invalid_argument("gen_g2: delta must be >= 2");
    int n = a + b, m = 2 * delta - 1;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < a; ++x) {
        adj[std::size_t(x)].push_back(0);
        for (int y = 1; y <= delta - 1; ++y) adj[std::size_t(x)].push_back(y);
    }
    for (int x = a; x < n; ++x) {
        adj[std::size_t(x)].push_back(0);
        for (int y = delta; y <= 2 * delta - 2; ++y) adj[std::size_t(x)].push_back(y);
    }
    return BipartiteGraph(n, m, adj);
}

BipartiteGraph gen_g3(int n1, int n2, int n3, int delta) {
    if (n3 < 1 || n2 < n3 || n1 < n2)
        throw std::invalid_argument("gen_g3: need n1 >= n2 >= n3 >= 1");
    if (delta < 3) throw std::invalid_argument("gen_g3: delta must be >= 3");
    int n = n1 + n2 + n3, m = 3 * delta - 4;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    int sizes[3] = {n1, n2, n3};
    int x = 0;
    for (int blk = 0; blk < 3; ++blk) {
        int ybase = 2 + blk * (delta - 2);
        for (int i = 0; i < sizes[blk]; ++i, ++x) {
            adj[std::size_t(x)].push_back(0);  // hub a
            adj[std::size_t(x)].push_back(1);  // hub b
            for (int y = 0; y < delta - 2; ++y) adj[std::size_t(x)].push_back(ybase + y);
        }
    }
    return BipartiteGraph(n, m, adj);
}

namespace {

// All subsets of `pool` of size >= 2, in ascending order of the bit mask
// over the pool positions.
void append_subsets(const std::vector<int>& pool, std::vector<std::vector<int>>& out) {
    int k = int(pool.size());
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<int> edge;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) edge.push_back(pool[std::size_t(i)]);
        out.push_back(std::move(edge));
    }
}

}  // namespace

Hypergraph gen_construction3(int n) {
    if (n < 4) throw std::invalid_argument("gen_construction3: n must be >= 4");
    int s1 = (n + 1) / 2;      // floor((n+1)/2)
    int s2 = n + 1 - s1;       // ceil((n+1)/2)
    // V1 = {0..s1-1}, V2 = {s1-1..n-1}; they share vertex s1-1.
    std::vector<int> v1, v2;
    for (int i = 0; i < s1; ++i) v1.push_back(i);
    for (int i = s1 - 1; i < n; ++i) v2.push_back(i);
    if (int(v2.size()) != s2) throw std::logic_error("gen_construction3: size bookkeeping");
    std::vector<std::vector<int>> edges;
    append_subsets(v1, edges);
    append_subsets(v2, edges);
    return Hypergraph(n, std::move(edges));
}

Hypergraph gen_construction4(int n) {
    if (n < 8) throw std::invalid_argument("gen_construction4: n must be >= 8");
    int s1 = (n + 2 + 1) / 2;  // ceil((n+2)/2)
    int s2 = (n - 2) / 2;      // floor((n-2)/2)
    int k = (n + 3) / 4;       // ceil(n/4)
    if (k - 1 > s2)
        throw std::invalid_argument("gen_construction4: ceil(n/4)-1 exceeds |V2|");
    // V1 = {0..s1-1}, V2 = {s1..n-1}.
    std::vector<std::vector<int>> edges;
    // E1: one V1 vertex plus k-1 V2 vertices, V2 part in ascending mask order.
    for (int v = 0; v < s1; ++v) {
        for (std::uint32_t mask = 0; mask < (1u << s2); ++mask) {
            if (std::popcount(mask) != k - 1) continue;
            std::vector<int> edge{v};
            for (int i = 0; i < s2; ++i)
                if ((mask >> i) & 1) edge.push_back(s1 + i);
            edges.push_back(std::move(edge));
        }
    }
    // E2 = {V1}.
    std::vector<int> v1;
    for (int i = 0; i < s1; ++i) v1.push_back(i);
    edges.push_back(std::move(v1));
    return Hypergraph(n, std::move(edges));
}

namespace {

void add_check(Certification& c, const std::string& name, const std::string& expected,
               const std::string& actual) {
    c.checks.push_back({name, expected, actual, expected == actual});
}

void add_check(Certification& c, const std::string& name, long long expected, long long actual) {
    add_check(c, name, std::to_string(expected), std::to_string(actual));
}

void add_check_bool(Certification& c, const std::string& name, bool expected, bool actual) {
    add_check(c, name, std::string(expected ? "true" : "false"),
              std::string(actual ? "true" : "false"));
}

void certify_longest(Certification& c, const BipartiteGraph& g, int expected_length) {
    auto w = longest_cycle(g);
    if (expected_length < 4) {
        c.degenerate = true;
        add_check(c, "no cycle with l>=2 (degenerate box)", std::string("none"),
                  w ? "l=" + std::to_string(w->l()) : "none");
        return;
    }
    add_check(c, "longest cycle length", expected_length, w ? w->length() : 0);
}

void certify_bigraph_box(Certification& c, const BipartiteGraph& g, int n, int m, int delta) {
    add_check(c, "n", n, g.n());
    add_check(c, "m", m, g.m());
    add_check(c, "min X-degree", delta, g.min_x_degree());
    add_check_bool(c, "member of G(n,m,delta)", true, g.in_gnmd(delta));
}

}  // namespace

Certification certify(const ConstructionSpec& spec) {
    Certification c;
    c.spec = spec;
    switch (spec.family) {
        case ConstructionSpec::G1: {
            auto g = gen_g1(spec.delta);
            certify_bigraph_box(c, g, spec.delta, 2 * spec.delta - 1, spec.delta);
            certify_longest(c, g, 2 * (spec.delta - 1));
            add_check_bool(c, "2-connected", false, is_2connected(g));
            break;
        }
        case ConstructionSpec::G2: {
            auto g = gen_g2(spec.a, spec.b, spec.delta);
            certify_bigraph_box(c, g, spec.a + spec.b, 2 * spec.delta - 1, spec.delta);
            certify_longest(c, g, 2 * spec.a);
            add_check_bool(c, "2-connected", false, is_2connected(g));
            break;
        }
        case ConstructionSpec::G3: {
            auto g = gen_g3(spec.n1, spec.n2, spec.n3, spec.delta);
            certify_bigraph_box(c, g, spec.n1 + spec.n2 + spec.n3, 3 * spec.delta - 4, spec.delta);
            certify_longest(c, g, 2 * (spec.n1 + spec.n2));
            // The block side of K_{delta-2,n_i} has degree n_i, so a block
            // with n_i = 1 leaves degree-1 Y-vertices and a cut vertex.
            add_check_bool(c, "2-connected", spec.n3 >= 2, is_2connected(g));
            break;
        }
        case ConstructionSpec::H3: {
            auto h = gen_construction3(spec.n);
            int s1 = (spec.n + 1) / 2, s2 = spec.n + 1 - s1;
            long long expect_edges = (1LL << s1) - s1 - 1 + (1LL << s2) - s2 - 1;
            add_check(c, "n", spec.n, h.n());
            add_check(c, "edge count", expect_edges, h.edge_count());
            add_check(c, "minimum degree", (1LL << (s1 - 1)) - 1, h.min_degree());
            add_check(c, "shared-vertex degree", (1LL << (s1 - 1)) - 1 + (1LL << (s2 - 1)) - 1,
                      h.degree(s1 - 1));
            add_check_bool(c, "2-connected (incidence)", false, is_2connected_hypergraph(h));
            add_check_bool(c, "hamiltonian Berge cycle", false, has_hamiltonian_berge_cycle(h));
            break;
        }
        case ConstructionSpec::H4: {
            auto h = gen_construction4(spec.n);
            int s1 = (spec.n + 3) / 2, s2 = (spec.n - 2) / 2, k = (spec.n + 3) / 4;
            long long choose = 1;
            for (int i = 0; i < k - 1; ++i) choose = choose * (s2 - i) / (i + 1);
            long long deg_v1 = choose + 1;
            long long choose2 = 1;
            for (int i = 0; i < k - 2; ++i) choose2 = choose2 * (s2 - 1 - i) / (i + 1);
            long long deg_v2 = s1 * choose2;
            add_check(c, "n", spec.n, h.n());
            add_check(c, "edge count", s1 * choose + 1, h.edge_count());
            add_check(c, "minimum degree", std::min(deg_v1, deg_v2), h.min_degree());
            add_check_bool(c, "2-connected (incidence)", true, is_2connected_hypergraph(h));
            add_check_bool(c, "hamiltonian Berge cycle", false, has_hamiltonian_berge_cycle(h));
            break;
        }
    }
    return c;
}

std::string to_text(const Certification& c) {
    std::ostringstream os;
    os << "certification " << c.spec.name() << (c.degenerate ? " [degenerate]" : "") << '\n';
    for (const auto& ch : c.checks)
        os << "  " << (ch.pass ? "ok  " : "FAIL") << ' ' << ch.name << ": expected " << ch.expected
           << ", actual " << ch.actual << '\n';
    os << (c.ok() ? "  all checks passed\n" : "  CERTIFICATION FAILED\n");
    return os.str();
}

std::string to_json_string(const Certification& c) {
    nlohmann::ordered_json j;
    j["construction"] = c.spec.name();
    j["degenerate"] = c.degenerate;
    j["ok"] = c.ok();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& ch : c.checks)
        arr.push_back({{"name", ch.name},
                       {"expected", ch.expected},
                       {"actual", ch.actual},
                       {"pass", ch.pass}});
    j["checks"] = arr;
    return j.dump(2);
}

}  // namespace berge
