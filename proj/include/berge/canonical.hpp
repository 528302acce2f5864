#pragma once

#include "berge/bipartite_graph.hpp"

#include <cstdint>
#include <string>

namespace berge {

/// Size guard for exact canonicalization. Defaults cover desk-scale work;
/// raising the limits is allowed up to a hard feasibility cap (n <= 10,
/// m <= 32), beyond which canonical_form refuses.
struct CanonLimits {
    int max_n = 8;
    int max_m = 16;
};

/// Exact canonical byte string, invariant under independent permutations of
/// X and of Y (parts are never swapped). Two graphs are isomorphic as
/// bipartite graphs with fixed parts iff their forms are equal.
///
/// The form is the minimum, over all relabelings of X, of the sorted list
/// of column bit vectors; layout is [n][m][columns...], columns one byte
/// each for n <= 8, two bytes little-endian otherwise.
std::string canonical_form(const BipartiteGraph& g, const CanonLimits& limits = {});

bool is_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b,
                   const CanonLimits& limits = {});

// Rebuilds the representative graph encoded by a canonical form.
BipartiteGraph graph_from_canonical(const std::string& form);

std::string canonical_hex(const std::string& form);

// Fast path used by the enumerator: rows given as bit masks (m <= 16, n <= 8).
std::string canonical_form_rows(int n, int m, const std::uint32_t* rows);

}  // namespace berge
