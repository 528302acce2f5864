#include <doctest.h>

#include "berge/bipartite_graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/io.hpp"
#include "berge/constructions.hpp"

#include "oracles.hpp"

#include <random>

using namespace berge;

namespace {

BipartiteGraph k_complete(int n, int m) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y) adj[static_cast<std::size_t>(x)].push_back(y);
    return BipartiteGraph(n, m, adj);
}

Hypergraph triangle_hypergraph() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("bitset basics across the word boundary") {
    for (int width : {5, 64, 70, 130}) {
        Bitset b(width);
        CHECK(b.none());
        b.set(0);
        b.set(width - 1);
        if (width > 64) b.set(65);
        CHECK(b.test(0));
        CHECK(b.test(width - 1));
        CHECK(b.count() == (width > 64 ? 3 : 2));
        CHECK(b.next_set_bit(1) == (width > 64 ? 65 : width - 1));
        auto c = b.complement();
        CHECK(c.count() == width - b.count());
        CHECK_FALSE(c.intersects(b));
        CHECK((c | b).count() == width);
    }
}

TEST_CASE("bipartite graph validation") {
    CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 2}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(0, 2, {}), std::invalid_argument);
    auto g = BipartiteGraph(2, 3, {{0, 1}, {1, 2}});
    CHECK(g.x_degree(0) == 2);
    CHECK(g.y_degree(1) == 2);
    CHECK(g.min_x_degree() == 2);
    CHECK(g.in_gnmd(2));
    CHECK_FALSE(g.in_gnmd(3));
    CHECK(g.column(1).indices() == std::vector<int>{0, 1});
}

TEST_CASE("hypergraph validation and degrees") {
    CHECK_THROWS_AS(Hypergraph(3, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), std::invalid_argument);
    // duplicate edges stay distinct
    Hypergraph h(3, {{0, 1}, {0, 1}, {2}});
    CHECK(h.edge_count() == 3);
    CHECK(h.degree(0) == 2);
    CHECK(h.min_degree() == 1);
    CHECK(h.codegree({0, 1}) == 2);
    CHECK(h.codegree({2}) == 1);
    CHECK_THROWS_AS(h.codegree({}), std::invalid_argument);
}

TEST_CASE("incidence graph of the triangle hypergraph is a 6-cycle") {
    auto g = incidence_graph(triangle_hypergraph());
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    for (int x = 0; x < 3; ++x) CHECK(g.x_degree(x) == 2);
    for (int y = 0; y < 3; ++y) CHECK(g.y_degree(y) == 2);
}

TEST_CASE("single full edge gives a star") {
    Hypergraph h(5, {{0, 1, 2, 3, 4}});
    auto g = incidence_graph(h);
    CHECK(g.m() == 1);
    CHECK(g.y_degree(0) == 5);
    auto d = dual_incidence_graph(h);
    CHECK(d.n() == 1);
    CHECK(d.x_degree(0) == 5);
}

TEST_CASE("dual incidence graph is the exact transpose") {
    std::mt19937 rng(20240701);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> nd(1, 6);
        int n = nd(rng);
        auto h = oracles::random_hypergraph(rng, n, 7);
        auto inc = incidence_graph(h);
        auto dual = dual_incidence_graph(h);
        REQUIRE(inc.n() == dual.m());
        REQUIRE(inc.m() == dual.n());
        for (int v = 0; v < inc.n(); ++v)
            for (int e = 0; e < inc.m(); ++e)
                CHECK(inc.has_edge(v, e) == dual.has_edge(e, v));
        // degree bookkeeping transposes too
        CHECK(h.min_degree() == inc.min_x_degree());
    }
}

TEST_CASE("construction 3 counting examples") {
    auto h5 = gen_construction3(5);
    CHECK(h5.edge_count() == 8);
    CHECK(h5.min_degree() == 3);
    // shared vertex: 3 edges inside each side
    CHECK(h5.degree(2) == 6);
    // no edge meets both sides off the shared vertex
    CHECK(h5.codegree({0, 3}) == 0);

    auto h6 = gen_construction3(6);
    CHECK(h6.edge_count() == 15);
    CHECK(h6.min_degree() == 3);

    auto inc = incidence_graph(h5);
    CHECK(inc.m() == 8);
    CHECK(h5.min_degree() == inc.min_x_degree());
}

TEST_CASE("construction 4 degree examples") {
    auto h = gen_construction4(8);
    CHECK(h.edge_count() == 16);
    CHECK(h.min_degree() == 4);
    for (int v = 0; v < 5; ++v) CHECK(h.degree(v) == 4);   // V1
    for (int v = 5; v < 8; ++v) CHECK(h.degree(v) == 5);   // V2
    // cross pairs and V1 pairs are covered; V2 pairs are not at n=8
    CHECK(h.codegree({0, 5}) == 1);
    CHECK(h.codegree({0, 1}) == 1);
    CHECK(h.codegree({5, 6}) == 0);
    // from n=9 on, every pair has positive codegree
    auto h12 = gen_construction4(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) CHECK(h12.codegree({u, v}) >= 1);
}

TEST_CASE("text parsing round trips and reports line numbers") {
    auto in = parse_text("bigraph 2 2\n0: 0 1\n1: 0 1\n");
    auto* g = std::get_if<BipartiteGraph>(&in);
    REQUIRE(g != nullptr);
    CHECK(*g == k_complete(2, 2));

    auto in2 = parse_text("# triangle\nhypergraph 3\ne: 0 1\ne: 1 2\ne: 0 2\n");
    auto* h = std::get_if<Hypergraph>(&in2);
    REQUIRE(h != nullptr);
    CHECK(*h == triangle_hypergraph());

    try {
        parse_text("bigraph 2 2\n0: 0 3\n1: 0 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("Y index 3 out of range") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_text("bigraph 2 2\n0: 0 0\n1: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_text("bigraph 2 2\n0: 0\n"), ParseError);
    CHECK_THROWS_AS(parse_text("graph 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_text("hypergraph 3\ne:\n"), ParseError);
}

TEST_CASE("serialization round trip is the identity on canonical output") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_bigraph(rng, 1 + trial % 6, 1 + (trial * 3) % 7);
        auto text = to_text(g);
        auto back = std::get<BipartiteGraph>(parse_text(text));
        CHECK(back == g);
        CHECK(to_text(back) == text);
        auto j = to_json_string(g);
        CHECK(std::get<BipartiteGraph>(parse_json(j)) == g);
        CHECK(std::get<BipartiteGraph>(parse_any(j)) == g);
    }
    auto h = gen_construction3(6);
    CHECK(std::get<Hypergraph>(parse_any(to_text(h))) == h);
    CHECK(std::get<Hypergraph>(parse_json(to_json_string(h))) == h);
}
