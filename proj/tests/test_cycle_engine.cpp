#include <doctest.h>

#include "berge/constructions.hpp"
#include "berge/cycle_engine.hpp"
#include "berge/io.hpp"

#include "oracles.hpp"

#include <random>
#include <set>

using namespace berge;

namespace {

BipartiteGraph k_complete(int n, int m) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y) adj[static_cast<std::size_t>(x)].push_back(y);
    return BipartiteGraph(n, m, adj);
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

}  // namespace

TEST_CASE("complete bipartite graphs have spanning cycles") {
    auto k33 = k_complete(3, 3);
    auto w = find_cycle_covering_exactly(k33, {0, 1, 2});
    REQUIRE(w.has_value());
    CHECK(w->l() == 3);
    CHECK(std::set<int>(w->ys.begin(), w->ys.end()).size() == 3);
    CHECK(has_spanning_x_cycle(k33));
    CHECK(has_spanning_x_cycle(k_complete(4, 4)));
}

TEST_CASE("G1 has no spanning cycle but pairs cycle through the hubs") {
    auto g1 = gen_g1(3);
    CHECK_FALSE(find_cycle_covering_exactly(g1, {0, 1, 2}).has_value());
    CHECK_FALSE(has_spanning_x_cycle(g1));
    for (auto pair : {std::vector<int>{0, 1}, {0, 2}, {1, 2}}) {
        auto w = find_cycle_covering_exactly(g1, pair);
        REQUIRE(w.has_value());
        // connectors must be the two hub Y-vertices
        CHECK(std::set<int>(w->ys.begin(), w->ys.end()) == std::set<int>{0, 1});
    }
    CHECK_FALSE(has_spanning_x_cycle(gen_g1(4)));
}

TEST_CASE("engine rejects undersized X-sets") {
    auto k = k_complete(3, 3);
    CHECK_THROWS_AS(find_cycle_covering_exactly(k, {0}), std::invalid_argument);
    CHECK_THROWS_AS(find_cycle_covering_exactly(k, {}), std::invalid_argument);
    CHECK_THROWS_AS(find_cycle_covering_exactly(k, {0, 0}), std::invalid_argument);
}

TEST_CASE("longest cycles of the extremal families") {
    auto w = longest_cycle(gen_g1(4));
    REQUIRE(w.has_value());
    CHECK(w->length() == 6);

    w = longest_cycle(gen_g2(2, 1, 3));
    REQUIRE(w.has_value());
    CHECK(w->length() == 4);

    w = longest_cycle(gen_g3(1, 1, 1, 3));
    REQUIRE(w.has_value());
    CHECK(w->length() == 4);

    CHECK_FALSE(has_spanning_x_cycle(gen_g3(1, 1, 1, 3)));
    CHECK_FALSE(longest_cycle(gen_g1(2)).has_value());  // degenerate: acyclic
}

TEST_CASE("berge cycles on small hypergraphs") {
    Hypergraph pairs3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto w = find_berge_cycle(pairs3, {0, 1, 2});
    REQUIRE(w.has_value());
    CHECK(w->l() == 3);

    // all 2-subsets of [4] contain a graph 4-cycle
    Hypergraph pairs4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(has_hamiltonian_berge_cycle(pairs4));

    CHECK_FALSE(has_hamiltonian_berge_cycle(gen_construction3(5)));
    CHECK_FALSE(has_hamiltonian_berge_cycle(gen_construction3(6)));
    CHECK_FALSE(has_hamiltonian_berge_cycle(gen_construction4(8)));

    CHECK_THROWS_AS(find_berge_cycle(pairs3, {0, 1}), std::invalid_argument);
}

TEST_CASE("berge cycle inside one side of construction 3") {
    auto h = gen_construction3(5);  // V1 = {0,1,2}, shared vertex 2
    auto w = find_berge_cycle(h, {0, 1, 2});
    REQUIRE(w.has_value());
    // consecutive base vertices both lie in V1, so every edge used is a V1 edge
    for (int e : w->edge_indices)
        for (int v : h.edge(e)) CHECK(v <= 2);
}

TEST_CASE("berge cycle with prescribed edges") {
    Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    auto w = find_berge_cycle_with_edges(tri, {0, 1, 2});
    REQUIRE(w.has_value());
    CHECK(std::set<int>(w->base_vertices.begin(), w->base_vertices.end()) ==
          std::set<int>{0, 1, 2});

    // pigeonhole: three copies of {0,1} cannot host 3 distinct base vertices
    Hypergraph multi(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK_FALSE(find_berge_cycle_with_edges(multi, {0, 1, 2}).has_value());

    CHECK_THROWS_AS(find_berge_cycle_with_edges(tri, {0, 1}), std::invalid_argument);
}

TEST_CASE("berge-with-edges agrees with the factorial oracle on random inputs") {
    std::mt19937 rng(20240704);
    int trials = 0;
    while (trials < 60) {
        auto h = oracles::random_hypergraph(rng, 5, 6);
        if (h.edge_count() < 4) continue;
        ++trials;
        std::vector<int> edge_set{0, 1, 2, 3};
        bool engine = find_berge_cycle_with_edges(h, edge_set).has_value();
        bool oracle = oracles::brute_berge_with_edges_exists(h, edge_set);
        CHECK(engine == oracle);
    }
}

TEST_CASE("super-pancyclicity") {
    CHECK(is_x_super_pancyclic(k_complete(4, 4)));
    auto rep = x_super_pancyclic_report(gen_g1(3));
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_failing == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(x_super_pancyclic_report(k_complete(2, 2)), std::invalid_argument);

    Hypergraph pairs4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(is_super_pancyclic(pairs4));
    CHECK_FALSE(is_super_pancyclic(gen_construction3(5)));
}

TEST_CASE("adding a dominating Y-vertex never destroys a spanning cycle") {
    std::mt19937 rng(20240705);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 3);
        int m = 2 + int(rng() % 4);
        auto g = oracles::random_bigraph(rng, n, m);
        if (!has_spanning_x_cycle(g)) continue;
        auto adj = g.adjacency_lists();
        for (auto& row : adj) row.push_back(m);
        BipartiteGraph extended(n, m + 1, adj);
        CHECK(has_spanning_x_cycle(extended));
    }
}

TEST_CASE("incidence correspondence: berge cycles translate to cycles and back") {
    std::mt19937 rng(20240706);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + int(rng() % 3);
        auto h = oracles::random_hypergraph(rng, n, 6);
        auto inc = incidence_graph(h);
        std::vector<int> base = iota_vec(n);
        auto cyc = find_cycle_covering_exactly(inc, base);
        auto berge = find_berge_cycle(h, base);
        CHECK(cyc.has_value() == berge.has_value());
        if (berge) {
            // translated witnesses validate on both sides
            std::string why;
            CHECK(berge_witness_valid(h, *berge, &why));
            auto back = incidence_cycle_from_berge(h, *berge);
            CHECK(cycle_witness_valid(inc, back, &why));
            CHECK(back.length() == 2 * berge->l());
        }
    }
}

TEST_CASE("engine agrees with the brute-force sequence enumerator") {
    std::mt19937 rng(20240707);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + int(rng() % 3);
        int m = 2 + int(rng() % 5);
        auto g = oracles::random_bigraph(rng, n, m);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<int> xs;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) xs.push_back(i);
            auto w = find_cycle_covering_exactly(g, xs);
            CHECK(w.has_value() == oracles::brute_cycle_exists(g, xs));
            if (w) {
                std::string why;
                CHECK(cycle_witness_valid(g, *w, &why));
                CHECK(std::set<int>(w->xs.begin(), w->xs.end()) ==
                      std::set<int>(xs.begin(), xs.end()));
            }
        }
        auto lw = longest_cycle(g);
        CHECK((lw ? lw->l() : 0) == oracles::brute_longest_l(g));
    }
}

TEST_CASE("engine matches the oracle on larger random instances") {
    std::mt19937 rng(20240711);
    for (int trial = 0; trial < 120; ++trial) {
        int m = 4 + int(rng() % 4);
        auto g = oracles::random_bigraph(rng, 5, m, 0.4 + 0.1 * (trial % 4));
        for (int pick = 0; pick < 3; ++pick) {
            std::uint32_t mask = rng() & 31u;
            if (std::popcount(mask) < 2) continue;
            std::vector<int> xs;
            for (int i = 0; i < 5; ++i)
                if ((mask >> i) & 1) xs.push_back(i);
            CHECK(find_cycle_covering_exactly(g, xs).has_value() ==
                  oracles::brute_cycle_exists(g, xs));
        }
        auto lw = longest_cycle(g);
        CHECK((lw ? lw->l() : 0) == oracles::brute_longest_l(g));
    }
}

TEST_CASE("all_longest_cycles enumerates distinct subgraphs") {
    // hamiltonian cycle counts of K_{n,n}: n! (n-1)! / 2
    CHECK(all_longest_cycles(k_complete(2, 2)).size() == 1);
    CHECK(all_longest_cycles(k_complete(4, 4)).size() == 72);

    auto k33 = k_complete(3, 3);
    auto cycles = all_longest_cycles(k33);
    CHECK(cycles.size() == 6);
    std::set<std::set<std::pair<int, int>>> edge_sets;
    for (const auto& c : cycles) {
        std::set<std::pair<int, int>> es;
        for (int i = 0; i < c.l(); ++i) {
            es.insert({c.xs[static_cast<std::size_t>(i)], c.ys[static_cast<std::size_t>(i)]});
            es.insert({c.xs[static_cast<std::size_t>((i + c.l() - 1) % c.l())],
                       c.ys[static_cast<std::size_t>(i)]});
        }
        edge_sets.insert(es);
    }
    CHECK(edge_sets.size() == cycles.size());
}
