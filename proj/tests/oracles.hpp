#pragma once

// Independent brute-force oracles used by the test and acceptance suites.
// These deliberately avoid the library's search/canonicalization code paths
// so that agreement between the two is meaningful.

#include "berge/bipartite_graph.hpp"
#include "berge/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace berge::oracles {

// Exhaustive enumeration of alternating vertex sequences: does any cycle
// cover exactly xset? No pruning, no search-order tricks.
bool brute_cycle_exists(const BipartiteGraph& g, const std::vector<int>& xset);

// Largest l such that some cycle covers exactly some l-subset of X; 0 if acyclic.
int brute_longest_l(const BipartiteGraph& g);

// Berge cycle through every vertex/edge sequence, factorial-scale.
bool brute_berge_with_edges_exists(const Hypergraph& h, const std::vector<int>& edge_set);

// Connectivity after deleting each vertex in turn.
bool oracle_two_connected_bigraph(const BipartiteGraph& g);

// Exists B within Y, |B| >= |A|, induced subgraph 2-connected; all B tried.
bool brute_condition_lll(const BipartiteGraph& g, const std::vector<int>& a);

BipartiteGraph random_bigraph(std::mt19937& rng, int n, int m, double p = 0.5);
BipartiteGraph relabeled(std::mt19937& rng, const BipartiteGraph& g);
Hypergraph random_hypergraph(std::mt19937& rng, int n, int max_edges);

}  // namespace berge::oracles
