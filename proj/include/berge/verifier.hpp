#pragma once

#include "berge/bipartite_graph.hpp"
#include "berge/canonical.hpp"

#include <string>
#include <vector>

namespace berge {

enum class TheoremId { Jackson, MainJ, Jackson2, MainPan, MainJ2, Jackson22 };

TheoremId theorem_from_string(const std::string& s);
std::string to_string(TheoremId id);

struct ParameterBox {
    TheoremId id = TheoremId::Jackson;
    int n = 0, m = 0, delta = 0;
};

// Throws when the box violates the theorem's hypothesis inequalities.
void check_box_constraints(const ParameterBox& box);

struct EnumLimits {
    int max_n = 8;
    int max_m = 16;
};

struct CanonicalClass {
    std::string canon;
    BipartiteGraph graph;
};

/// One representative per isomorphism class of graphs with |X| = n,
/// |Y| = m and min X-degree >= delta. Non-decreasing row-mask tuples kill
/// X-permutations, canonical-form dedup kills Y-permutations. Output is
/// sorted by canonical form, so it is identical for any worker count.
std::vector<CanonicalClass> enumerate_gnmd(int n, int m, int delta, int workers = 1,
                                           const EnumLimits& limits = {});

/// Independent oracle for the enumerator: enumerates every labeled graph
/// and collapses by brute-force isomorphism (all row and column
/// permutations). Feasible only for tiny boxes.
long long count_labeled_classes(int n, int m, int delta);

struct ExceptionRecord {
    std::string canon_hex;
    std::string classification;
    std::string graph_text;
};

struct VerificationReport {
    ParameterBox box;
    long long total_classes = 0;
    long long hypothesis_count = 0;
    long long pass_count = 0;
    std::vector<ExceptionRecord> exceptions;
    std::string mode = "canonical";
    std::vector<std::string> notes;
    bool conforms = true;  // exceptions match what the theorem allows
    double wall_seconds = 0;  // informational only; never serialized
};

VerificationReport verify_theorem(const ParameterBox& box, int workers = 1,
                                  const EnumLimits& limits = {});

std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);

/// Conjunction of optionally negated predicate names over canonical
/// classes. Vocabulary: true, false, 2-connected, spanning-x-cycle, lll,
/// x-super-pancyclic. Negation prefix '!' or unicode not-sign; terms
/// joined by '&', '&&' or a unicode conjunction sign.
bool eval_predicate(const std::string& predicate, const BipartiteGraph& g);

std::vector<CanonicalClass> scan_box(const std::string& predicate, int n, int m, int delta,
                                     int workers = 1, const EnumLimits& limits = {});

/// Structural-lemma audit over one enumerated box: neighborhood
/// disjointness around tight pairs, the non-crossing degree-sum bound on
/// every longest cycle, the m >= 3*delta-4 consequence for mid-range t,
/// and the separation property when x sees all of the cycle's Y-side.
struct Section2Audit {
    int n = 0, m = 0, delta = 0;
    long long classes = 0;
    long long tight_pairs = 0;
    long long neighbor_checks = 0;
    long long noncrossing_checks = 0;
    long long lemma_t_checks = 0;
    long long separation_checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

Section2Audit audit_section2_box(int n, int m, int delta, int workers = 1,
                                 const EnumLimits& limits = {});

std::string to_json_string(const Section2Audit& a);

}  // namespace berge
