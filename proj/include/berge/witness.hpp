#pragma once

#include "berge/bipartite_graph.hpp"
#include "berge/hypergraph.hpp"

#include <string>
#include <vector>

namespace berge {

/// Alternating cycle y0 x0 y1 x1 ... y_{l-1} x_{l-1} (back to y0):
/// ys[i] is adjacent to xs[i-1] and xs[i], indices mod l.
struct CycleWitness {
    std::vector<int> xs;
    std::vector<int> ys;

    int length() const { return int(xs.size()) * 2; }
    int l() const { return int(xs.size()); }
};

bool cycle_witness_valid(const BipartiteGraph& g, const CycleWitness& w,
                         std::string* why = nullptr);

// Validates against g; throws std::invalid_argument on a bad witness.
CycleWitness make_cycle_witness(const BipartiteGraph& g, std::vector<int> xs,
                                std::vector<int> ys);

/// Berge cycle: distinct base vertices v0..v_{l-1} and distinct edges
/// e0..e_{l-1} with {v_i, v_{i+1 mod l}} contained in e_i.
struct BergeCycleWitness {
    std::vector<int> base_vertices;
    std::vector<int> edge_indices;

    int l() const { return int(base_vertices.size()); }
};

bool berge_witness_valid(const Hypergraph& h, const BergeCycleWitness& w,
                         std::string* why = nullptr);

BergeCycleWitness make_berge_witness(const Hypergraph& h, std::vector<int> base,
                                     std::vector<int> edges);

// Witness translations along the incidence correspondence. A cycle of
// length 2l in incidence_graph(h) covering base vertices A is exactly a
// Berge cycle with base set A, and vice versa.
BergeCycleWitness berge_from_incidence_cycle(const Hypergraph& h, const CycleWitness& w);
CycleWitness incidence_cycle_from_berge(const Hypergraph& h, const BergeCycleWitness& w);

// A cycle in dual_incidence_graph(h) covering an edge set B yields a Berge
// cycle using exactly the edges of B (base vertices free).
BergeCycleWitness berge_from_dual_cycle(const Hypergraph& h, const CycleWitness& w);

}  // namespace berge
