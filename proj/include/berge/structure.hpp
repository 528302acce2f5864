#pragma once

#include "berge/bipartite_graph.hpp"
#include "berge/canonical.hpp"
#include "berge/cycle_engine.hpp"
#include "berge/hypergraph.hpp"
#include "berge/witness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace berge {

// Standard 2-connectivity (connected, no cut vertex) on the whole bipartite
// graph; rejects graphs with fewer than 3 vertices in total.
bool is_2connected(const BipartiteGraph& g);

// A hypergraph is 2-connected iff its incidence graph is.
bool is_2connected_hypergraph(const Hypergraph& h);

// 2-connectivity of the induced subgraph on xs u ys.
bool induced_two_connected(const BipartiteGraph& g, const std::vector<int>& xs,
                           const std::vector<int>& ys);

/// Certificate search for condition (lll) at a fixed A (|A| >= 3): is there
/// B in Y with |B| >= |A| such that G[A u B] is 2-connected?
///
/// Uses the closure B_max(A) = {y : |N(y) n A| >= 2}: every valid B sits
/// inside B_max (2-connectivity forces Y-degrees >= 2 into A), and growing
/// a valid B to B_max keeps 2-connectivity, so some valid B exists iff
/// B_max itself is valid. Returns B_max as the certificate, or nullopt.
std::optional<std::vector<int>> check_condition_lll_for(const BipartiteGraph& g,
                                                        const std::vector<int>& a);

struct LllReport {
    bool ok = true;
    std::vector<int> first_failing_a;  // empty when ok
};

// Condition (lll) over every A with |A| >= 3, ascending bit-mask order.
LllReport satisfies_lll_report(const BipartiteGraph& g);
bool satisfies_lll(const BipartiteGraph& g);

/// A longest cycle C together with an uncovered X-vertex x maximizing
/// t = |N(x) n V(C)| over all (longest cycle, uncovered vertex) pairs.
struct TightPair {
    CycleWitness cycle;
    int x = -1;
    int t = 0;
};

// First tight pair in deterministic order, or nullopt when the graph is
// acyclic or every longest cycle covers X. Guard: n <= guard_n.
std::optional<TightPair> find_tight_pair(const BipartiteGraph& g, int guard_n = 8);

// Every (C, x) attaining the maximum t.
std::vector<TightPair> all_tight_pairs(const BipartiteGraph& g, int guard_n = 8);

/// Crossing test for on-cycle vertices x_i, x_j (1-based positions,
/// 1 <= i < j <= l) on a cycle written y_1 x_1 ... y_l x_l. Either bullet
/// of the definition may fire; pairs {i', j'} = {i, i+1} or {j, j+1} are
/// never considered.
struct CrossingQuery {
    int i = 0, j = 0;
    bool crossing = false;
    int i_prime = -1, j_prime = -1;  // 1-based witness positions when crossing
};

CrossingQuery are_crossing(const BipartiteGraph& g, const CycleWitness& cycle, int i, int j);

struct AuditViolation {
    std::string what;
    std::vector<int> where;
};

struct AuditReport {
    bool hypotheses_met = true;
    std::string hypothesis_note;
    long long checked = 0;
    std::vector<AuditViolation> violations;
    bool ok() const { return violations.empty(); }
};

std::string to_json_string(const AuditReport& rep);

/// For every non-crossing pair (i, j) on a longest cycle, checks
/// d_C(x_i) + d_C(x_j) <= |V(C) n Y| + 2. Rejects non-longest cycles.
AuditReport audit_noncrossing_bound(const BipartiteGraph& g, const CycleWitness& cycle);

/// Separation audit: hypotheses are that cycle is longest, x is uncovered,
/// Y n V(C) is contained in N(x), and n <= min X-degree. When they hold,
/// each on-cycle x_i must separate each y in N(x_i) - V(C) from V(C) - x_i.
AuditReport audit_separation_property(const BipartiteGraph& g, const CycleWitness& cycle, int x);

/// Neighborhood-disjointness claims for a tight pair (C, x): whenever
/// y_i in N(x) lies on C, N(x_i) - V(C) misses N(x) - V(C); whenever
/// y_i, y_j in N(x) lie on C, N(x_i) - V(C) misses N(x_j) - V(C).
AuditReport audit_neighbor_claims(const BipartiteGraph& g, const TightPair& tp);

struct ExceptionClassification {
    enum Kind { IsoG1, IsoG2, Other } kind = Other;
    int a = 0, b = 0;  // G2 parameters when kind == IsoG2
    std::string label() const;
};

// Matches g against the generated extremal families for its (n, m) box.
ExceptionClassification classify_exception(const BipartiteGraph& g,
                                           const CanonLimits& limits = {});

}  // namespace berge
