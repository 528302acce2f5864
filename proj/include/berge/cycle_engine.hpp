#pragma once

#include "berge/bipartite_graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/witness.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace berge {

/// Exact search for a cycle C with V(C) and X matching xset exactly (Y
/// vertices free, all distinct). xset needs at least 2 vertices.
///
/// Search order: X-vertices by ascending degree (index breaks ties),
/// connector Y-vertices ascending; the first completed cycle is returned,
/// so results are deterministic. A bipartite-matching feasibility prune
/// runs at every node; it only discards dead branches.
std::optional<CycleWitness> find_cycle_covering_exactly(const BipartiteGraph& g,
                                                        const std::vector<int>& xset);

/// Invokes fn for every distinct cycle subgraph covering exactly xset.
/// Distinct means distinct as a subgraph; each is reported once, in
/// deterministic discovery order.
void enumerate_cycles_covering_exactly(const BipartiteGraph& g, const std::vector<int>& xset,
                                       const std::function<void(const CycleWitness&)>& fn);

/// Cycle maximizing the number of covered X-vertices; nullopt when the
/// graph has no cycle. Ties resolve to the first cycle found when X-sets
/// are scanned in ascending bit-mask order.
std::optional<CycleWitness> longest_cycle(const BipartiteGraph& g);

// True iff some cycle covers every X-vertex (a cycle of length 2n).
bool has_spanning_x_cycle(const BipartiteGraph& g);

/// Berge cycle with base vertex set exactly base_set (>= 3 vertices),
/// searched through the incidence graph.
std::optional<BergeCycleWitness> find_berge_cycle(const Hypergraph& h,
                                                  const std::vector<int>& base_set);

// Berge cycle whose base set is all of V(H); requires n >= 3.
bool has_hamiltonian_berge_cycle(const Hypergraph& h);

/// Berge cycle using exactly the edges indexed by edge_set (>= 3 edges),
/// base vertices free; searched through the dual incidence graph.
std::optional<BergeCycleWitness> find_berge_cycle_with_edges(const Hypergraph& h,
                                                             const std::vector<int>& edge_set);

struct SubsetSweepResult {
    bool ok = true;
    std::vector<int> first_failing;  // empty when ok
};

/// Checks every X' with |X'| >= 3 for a cycle covering exactly X'.
/// Subsets are scanned in ascending bit-mask order; the first failure is
/// reported. Requires |X| >= 3.
SubsetSweepResult x_super_pancyclic_report(const BipartiteGraph& g);
bool is_x_super_pancyclic(const BipartiteGraph& g);

// Hypergraph analogue over base vertex sets A with |A| >= 3; requires n >= 3.
SubsetSweepResult super_pancyclic_report(const Hypergraph& h);
bool is_super_pancyclic(const Hypergraph& h);

// All distinct longest cycles (deterministic order). Used by the tight-pair
// machinery and the structural audits.
std::vector<CycleWitness> all_longest_cycles(const BipartiteGraph& g);

}  // namespace berge
