#include "berge/verifier.hpp"

#include "berge/cycle_engine.hpp"
#include "berge/io.hpp"
#include "berge/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace berge {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::uint32_t> row_candidates(int m, int delta) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) >= delta) out.push_back(mask);
    return out;
}

void check_enum_guard(int n, int m, int delta, const EnumLimits& limits) {
    if (n < 2 || n > limits.max_n || m < 0 || m > limits.max_m)
        throw std::runtime_error("enumeration guard exceeded (n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m) + ", guard n<=" +
                                 std::to_string(limits.max_n) + ", m<=" +
                                 std::to_string(limits.max_m) + ")");
    if (delta < 0) throw std::invalid_argument("enumerate_gnmd: delta must be >= 0");
}

// Non-decreasing tuples rows[pos..n-1] drawn from cand[from..], first row
// already fixed by the caller.
template <typename F>
void complete_tuples(const std::vector<std::uint32_t>& cand, std::uint32_t* rows, int n, int pos,
                     std::size_t from, F&& f) {
    if (pos == n) {
        f();
        return;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
        rows[pos] = cand[i];
        complete_tuples(cand, rows, n, pos + 1, i, f);
    }
}

}  // namespace

std::vector<CanonicalClass> enumerate_gnmd(int n, int m, int delta, int workers,
                                           const EnumLimits& limits) {
    check_enum_guard(n, m, delta, limits);
    auto cand = row_candidates(m, delta);
    std::set<std::string> forms;
    if (!cand.empty()) {
        if (workers < 1) workers = 1;
        workers = std::min<int>(workers, int(cand.size()));
        if (workers <= 1) {
            std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < cand.size(); ++i) {
                rows[0] = cand[i];
                complete_tuples(cand, rows.data(), n, 1, i, [&] {
                    forms.insert(canonical_form_rows(n, m, rows.data()));
                });
            }
        } else {
            // Work items are first-row choices; each worker dedups locally,
            // results merge into one ordered set afterwards.
            std::atomic<std::size_t> next{0};
            std::vector<std::unordered_set<std::string>> local(static_cast<std::size_t>(workers));
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) {
                threads.emplace_back([&, w] {
                    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
                    while (true) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= cand.size()) break;
                        rows[0] = cand[i];
                        complete_tuples(cand, rows.data(), n, 1, i, [&] {
                            local[std::size_t(w)].insert(canonical_form_rows(n, m, rows.data()));
                        });
                    }
                });
            }
            for (auto& t : threads) t.join();
            for (auto& s : local) forms.insert(s.begin(), s.end());
        }
    }
    std::vector<CanonicalClass> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back({f, graph_from_canonical(f)});
    return out;
}

long long count_labeled_classes(int n, int m, int delta) {
    if (n < 1 || n > 4 || m < 0 || m > 5)
        throw std::runtime_error("count_labeled_classes: box too large for the labeled oracle");
    auto cand = row_candidates(m, delta);
    // Minimum of the row-major byte string over all row and column
    // permutations; intentionally independent of canonical_form.
    std::vector<int> rperm(static_cast<std::size_t>(n)), cperm(static_cast<std::size_t>(m));
    auto brute_min = [&](const std::vector<std::uint32_t>& rows) {
        std::string best;
        std::iota(rperm.begin(), rperm.end(), 0);
        do {
            std::iota(cperm.begin(), cperm.end(), 0);
            do {
                std::string s(static_cast<std::size_t>(n), '\0');
                for (int r = 0; r < n; ++r) {
                    unsigned char v = 0;
                    for (int c = 0; c < m; ++c)
                        if ((rows[std::size_t(rperm[std::size_t(r)])] >>
                             cperm[std::size_t(c)]) & 1u)
                            v |= (unsigned char)(1u << c);
                    s[std::size_t(r)] = char(v);
                }
                if (best.empty() || s < best) best = s;
            } while (std::next_permutation(cperm.begin(), cperm.end()));
        } while (std::next_permutation(rperm.begin(), rperm.end()));
        return best;
    };

    std::set<std::string> classes;
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        if (!cand.empty()) {
            for (int r = 0; r < n; ++r) rows[std::size_t(r)] = cand[idx[std::size_t(r)]];
            classes.insert(brute_min(rows));
        }
        int pos = n - 1;
        while (pos >= 0 && (cand.empty() || ++idx[std::size_t(pos)] == cand.size())) {
            idx[std::size_t(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return (long long)classes.size();
}

TheoremId theorem_from_string(const std::string& s) {
    if (s == "jackson") return TheoremId::Jackson;
    if (s == "mainj") return TheoremId::MainJ;
    if (s == "jackson2") return TheoremId::Jackson2;
    if (s == "mainpan") return TheoremId::MainPan;
    if (s == "mainj2") return TheoremId::MainJ2;
    if (s == "jackson22") return TheoremId::Jackson22;
    throw std::invalid_argument("unknown theorem id: " + s);
}

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::Jackson: return "jackson";
        case TheoremId::MainJ: return "mainj";
        case TheoremId::Jackson2: return "jackson2";
        case TheoremId::MainPan: return "mainpan";
        case TheoremId::MainJ2: return "mainj2";
        case TheoremId::Jackson22: return "jackson22";
    }
    return "?";
}

void check_box_constraints(const ParameterBox& box) {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("box outside theorem hypotheses (" + to_string(box.id) +
                                    "): " + what);
    };
    if (box.n < 2) fail("n must be >= 2");
    if (box.delta > box.m) fail("delta must be <= m");
    switch (box.id) {
        case TheoremId::Jackson:
            if (box.n > box.delta) fail("requires n <= delta");
            if (box.m > 2 * box.delta - 2) fail("requires m <= 2*delta-2");
            break;
        case TheoremId::MainJ:
            if (box.n > box.delta) fail("requires n <= delta");
            if (box.m > 3 * box.delta - 5) fail("requires m <= 3*delta-5");
            break;
        case TheoremId::Jackson2:
            if (box.delta < box.n) fail("requires delta >= n");
            if (box.m > 2 * box.delta - 1) fail("requires m <= 2*delta-1");
            break;
        case TheoremId::MainPan:
            if (box.delta < box.n) fail("requires delta >= n");
            if (box.m > 3 * box.delta - 5) fail("requires m <= 3*delta-5");
            if (box.n < 3) fail("requires n >= 3");
            break;
        case TheoremId::MainJ2:
            if (box.delta < box.n) fail("requires delta >= n");
            if (3 * box.delta < box.m + 5) fail("requires delta >= (m+5)/3");
            break;
        case TheoremId::Jackson22:
            if (box.delta < box.n) fail("requires delta >= n");
            if (2 * box.delta < box.m + 1) fail("requires delta >= (m+1)/2");
            break;
    }
}

VerificationReport verify_theorem(const ParameterBox& box, int workers,
                                  const EnumLimits& limits) {
    check_box_constraints(box);
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.box = box;

    bool needs_2connected = box.id == TheoremId::MainJ || box.id == TheoremId::MainJ2;
    bool needs_lll = box.id == TheoremId::MainPan;
    bool exceptions_allowed =
        box.id == TheoremId::Jackson2 || box.id == TheoremId::Jackson22;

    auto classes = enumerate_gnmd(box.n, box.m, box.delta, workers, limits);
    rep.total_classes = (long long)classes.size();
    for (const auto& cls : classes) {
        const auto& g = cls.graph;
        bool hyp = true;
        if (needs_2connected) hyp = is_2connected(g);
        if (needs_lll) hyp = satisfies_lll(g);
        if (!hyp) continue;
        ++rep.hypothesis_count;
        bool concl = box.id == TheoremId::MainPan ? is_x_super_pancyclic(g)
                                                  : has_spanning_x_cycle(g);
        if (concl) {
            ++rep.pass_count;
        } else {
            auto classification = classify_exception(g);
            rep.exceptions.push_back(
                {canonical_hex(cls.canon), classification.label(), to_text(g)});
            if (!exceptions_allowed ||
                classification.kind == ExceptionClassification::Other)
                rep.conforms = false;
        }
    }
    if (box.n == 2 && exceptions_allowed)
        rep.notes.push_back("boundary case (n=2): acyclic members reported separately from the "
                            "n>=3 classification");
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "theorem: " << to_string(r.box.id) << '\n';
    os << "box: n=" << r.box.n << " m=" << r.box.m << " delta=" << r.box.delta << '\n';
    os << "mode: " << r.mode << '\n';
    os << "classes: " << r.total_classes << '\n';
    os << "hypothesis-satisfying: " << r.hypothesis_count << '\n';
    os << "pass: " << r.pass_count << '\n';
    os << "exceptions: " << r.exceptions.size() << '\n';
    for (std::size_t i = 0; i < r.exceptions.size(); ++i)
        os << "  [" << (i + 1) << "] classification=" << r.exceptions[i].classification
           << " canon=" << r.exceptions[i].canon_hex << '\n';
    for (const auto& n : r.notes) os << "note: " << n << '\n';
    os << "conforms: " << (r.conforms ? "yes" : "NO") << '\n';
    return os.str();
}

std::string report_json(const VerificationReport& r) {
    ordered_json j;
    j["theorem"] = to_string(r.box.id);
    j["box"] = {{"n", r.box.n}, {"m", r.box.m}, {"delta", r.box.delta}};
    j["mode"] = r.mode;
    j["classes"] = r.total_classes;
    j["hypothesis_satisfying"] = r.hypothesis_count;
    j["pass"] = r.pass_count;
    auto arr = ordered_json::array();
    for (const auto& e : r.exceptions)
        arr.push_back({{"canon", e.canon_hex}, {"classification", e.classification}});
    j["exceptions"] = arr;
    j["notes"] = r.notes;
    j["conforms"] = r.conforms;
    return j.dump(2);
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

bool eval_predicate(const std::string& predicate, const BipartiteGraph& g) {
    // Split on '&' / '&&' / unicode conjunction, then evaluate each literal.
    std::string pred = predicate;
    const std::string wedge = "∧";
    for (std::size_t pos; (pos = pred.find(wedge)) != std::string::npos;)
        pred.replace(pos, wedge.size(), "&");
    std::vector<std::string> terms;
    std::size_t start = 0;
    while (start <= pred.size()) {
        std::size_t amp = pred.find('&', start);
        std::string term = pred.substr(start, amp == std::string::npos ? std::string::npos
                                                                       : amp - start);
        term = strip(term);
        if (!term.empty()) terms.push_back(term);
        if (amp == std::string::npos) break;
        start = amp + 1;
        if (start < pred.size() && pred[start] == '&') ++start;
    }
    if (terms.empty()) throw std::invalid_argument("empty predicate");

    for (auto term : terms) {
        bool neg = false;
        const std::string notsign = "¬";
        while (!term.empty()) {
            if (term[0] == '!') {
                neg = !neg;
                term = strip(term.substr(1));
            } else if (term.rfind(notsign, 0) == 0) {
                neg = !neg;
                term = strip(term.substr(notsign.size()));
            } else {
                break;
            }
        }
        std::transform(term.begin(), term.end(), term.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        bool value;
        if (term == "true") value = true;
        else if (term == "false") value = false;
        else if (term == "2-connected" || term == "2connected") value = is_2connected(g);
        else if (term == "spanning-x-cycle") value = has_spanning_x_cycle(g);
        else if (term == "lll") value = satisfies_lll(g);
        else if (term == "x-super-pancyclic") value = is_x_super_pancyclic(g);
        else throw std::invalid_argument("unknown predicate name: '" + term + "'");
        if (neg) value = !value;
        if (!value) return false;
    }
    return true;
}

std::vector<CanonicalClass> scan_box(const std::string& predicate, int n, int m, int delta,
                                     int workers, const EnumLimits& limits) {
    // Validate the predicate before the enumeration spends any time.
    eval_predicate(predicate, BipartiteGraph(3, 3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
    auto classes = enumerate_gnmd(n, m, delta, workers, limits);
    std::vector<CanonicalClass> out;
    for (auto& cls : classes)
        if (eval_predicate(predicate, cls.graph)) out.push_back(std::move(cls));
    return out;
}

Section2Audit audit_section2_box(int n, int m, int delta, int workers,
                                 const EnumLimits& limits) {
    Section2Audit a;
    a.n = n;
    a.m = m;
    a.delta = delta;
    auto classes = enumerate_gnmd(n, m, delta, workers, limits);
    a.classes = (long long)classes.size();
    for (const auto& cls : classes) {
        const auto& g = cls.graph;
        auto note = [&](const std::string& what, const AuditReport& rep) {
            for (const auto& v : rep.violations)
                a.violations.push_back(what + " [" + canonical_hex(cls.canon) + "]: " + v.what);
        };

        for (const auto& c : all_longest_cycles(g)) {
            auto rep = audit_noncrossing_bound(g, c);
            a.noncrossing_checks += rep.checked;
            note("noncrossing-bound", rep);
        }

        auto tps = all_tight_pairs(g, limits.max_n);
        a.tight_pairs += (long long)tps.size();
        int deg = g.min_x_degree();
        for (const auto& tp : tps) {
            auto rep = audit_neighbor_claims(g, tp);
            a.neighbor_checks += rep.checked;
            note("neighbor-claims", rep);

            // m >= 3*delta - 4 whenever 2 <= t < l and n <= delta, taking
            // delta as the actual minimum X-degree.
            if (n <= deg && tp.t >= 2 && tp.t < tp.cycle.l()) {
                ++a.lemma_t_checks;
                if (m < 3 * deg - 4)
                    a.violations.push_back("lemma-t [" + canonical_hex(cls.canon) +
                                           "]: m=" + std::to_string(m) + " < 3*" +
                                           std::to_string(deg) + "-4 with t=" +
                                           std::to_string(tp.t));
            }

            Bitset ymask(g.m());
            for (int y : tp.cycle.ys) ymask.set(y);
            if (n <= deg && ymask.is_subset_of(g.row(tp.x))) {
                auto sep = audit_separation_property(g, tp.cycle, tp.x);
                if (sep.hypotheses_met) {
                    a.separation_checks += sep.checked;
                    note("separation", sep);
                }
            }
        }
    }
    return a;
}

std::string to_json_string(const Section2Audit& a) {
    ordered_json j;
    j["box"] = {{"n", a.n}, {"m", a.m}, {"delta", a.delta}};
    j["classes"] = a.classes;
    j["tight_pairs"] = a.tight_pairs;
    j["checks"] = {{"neighbor", a.neighbor_checks},
                   {"noncrossing", a.noncrossing_checks},
                   {"lemma_t", a.lemma_t_checks},
                   {"separation", a.separation_checks}};
    j["violations"] = a.violations;
    j["ok"] = a.ok();
    return j.dump(2);
}

}  // namespace berge
