#pragma once

#include "berge/bipartite_graph.hpp"
#include "berge/hypergraph.hpp"

#include <string>
#include <vector>

namespace berge {

/// Parameters for the five extremal families.
///
/// alpha is carried along for the even-delta variant of the density bound
/// it belongs to, but no generator consumes it.
struct ConstructionSpec {
    enum Family { G1, G2, G3, H3, H4 } family = G1;
    int delta = 0;
    int a = 0, b = 0;
    int n1 = 0, n2 = 0, n3 = 0;
    int n = 0;
    int alpha = 0;

    static ConstructionSpec g1(int delta);
    static ConstructionSpec g2(int a, int b, int delta);
    static ConstructionSpec g3(int n1, int n2, int n3, int delta);
    static ConstructionSpec h3(int n);
    static ConstructionSpec h4(int n);

    std::string name() const;
};

/// K_{delta,delta-1} plus a private degree-1 neighbor for every X-vertex.
/// In G(delta, 2delta-1, delta); longest cycle 2(delta-1).
/// Numbering: X = 0..delta-1; hub Y = 0..delta-2; the pendant of x_i is
/// Y-vertex delta-1+i.
BipartiteGraph gen_g1(int delta);

/// K_{a,delta} and K_{b,delta} glued at one Y-vertex of each. Requires
/// a >= b >= 1. In G(a+b, 2delta-1, delta); longest cycle 2a; the glue
/// vertex is a cut vertex.
/// Numbering: X = first block then second; Y = glue vertex 0, then the
/// remaining delta-1 Y's of each block.
BipartiteGraph gen_g2(int a, int b, int delta);

/// Three blocks K_{delta-2,n_i} plus two Y-vertices adjacent to all of X.
/// Requires n1 >= n2 >= n3 >= 1 and delta >= 3. In G(n1+n2+n3, 3delta-4,
/// delta); longest cycle 2(n1+n2).
/// Numbering: X by block; Y = the two hubs first, then block Y's.
BipartiteGraph gen_g3(int n1, int n2, int n3, int delta);

/// Vertex set V1 u V2 sharing exactly one vertex; edges are all subsets of
/// size >= 2 inside V1 plus those inside V2. Requires n >= 4. Minimum
/// degree 2^(floor((n+1)/2)-1) - 1; no Hamiltonian Berge cycle (the shared
/// vertex is a cut vertex of the incidence graph).
Hypergraph gen_construction3(int n);

/// Disjoint V1, V2 with |V1| = ceil((n+2)/2); edges are all size-ceil(n/4)
/// sets with exactly one V1-vertex, plus the single edge V1. Requires
/// n >= 8 and ceil(n/4)-1 <= |V2|. No Hamiltonian Berge cycle.
Hypergraph gen_construction4(int n);

struct CertCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Certification {
    ConstructionSpec spec;
    bool degenerate = false;  // nominal longest cycle below the l >= 2 floor
    std::vector<CertCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Generates the family member and machine-checks its claimed properties
// (parameter box, minimum degree, longest cycle, connectivity status).
Certification certify(const ConstructionSpec& spec);

std::string to_text(const Certification& c);
std::string to_json_string(const Certification& c);

}  // namespace berge
