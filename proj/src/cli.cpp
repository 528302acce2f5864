#include "berge/cli.hpp"

#include "berge/canonical.hpp"
#include "berge/constructions.hpp"
#include "berge/cycle_engine.hpp"
#include "berge/io.hpp"
#include "berge/structure.hpp"
#include "berge/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <thread>

namespace berge {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) {
                try {
                    out.push_back(std::stoi(cur));
                } catch (const std::exception&) {
                    throw CliError(std::string(what) + ": bad integer '" + cur + "'");
                }
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (out.empty()) throw CliError(std::string(what) + ": empty list");
    return out;
}

// "4" or "4..7"
std::pair<int, int> parse_range(const std::string& s, const char* what) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        if (hi < lo) throw CliError(std::string(what) + ": empty range " + s);
        return {lo, hi};
    } catch (const CliError&) {
        throw;
    } catch (const std::exception&) {
        throw CliError(std::string(what) + ": bad value '" + s + "'");
    }
}

void emit_graph_file(const std::string& path, const std::string& format,
                     const GraphInput& g) {
    std::string payload;
    if (format == "text")
        payload = std::visit([](const auto& v) { return to_text(v); }, g);
    else if (format == "json")
        payload = std::visit([](const auto& v) { return to_json_string(v); }, g) + "\n";
    else
        throw CliError("unknown format '" + format + "' (expected text or json)");
    write_file(path, payload);
}

struct GenOptions {
    int delta = 0, a = 0, b = 0, n1 = 0, n2 = 0, n3 = 0, n = 0;
    std::string out_path;
    std::string format = "text";
    bool json = false;
};

int run_gen(const ConstructionSpec& spec, const GenOptions& opt, std::ostream& out) {
    auto cert = certify(spec);
    GraphInput g = [&]() -> GraphInput {
        switch (spec.family) {
            case ConstructionSpec::G1: return gen_g1(spec.delta);
            case ConstructionSpec::G2: return gen_g2(spec.a, spec.b, spec.delta);
            case ConstructionSpec::G3: return gen_g3(spec.n1, spec.n2, spec.n3, spec.delta);
            case ConstructionSpec::H3: return gen_construction3(spec.n);
            default: return gen_construction4(spec.n);
        }
    }();
    if (!opt.out_path.empty()) emit_graph_file(opt.out_path, opt.format, g);
    out << (opt.json ? to_json_string(cert) + "\n" : to_text(cert));
    return cert.ok() ? 0 : 1;
}

struct WitnessPrinter {
    std::ostream& out;
    bool json;

    void kv(const std::string& human, const ordered_json& machine) {
        if (json)
            out << machine.dump() << '\n';
        else
            out << human << '\n';
    }
};

std::string list_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + "]";
}

int run_check(const std::string& in_path, const std::string& prop, int iarg, int jarg,
              const std::string& edges_arg, const std::string& set_arg, bool json,
              std::ostream& out) {
    GraphInput input = parse_any(read_file(in_path));
    const BipartiteGraph* bg = std::get_if<BipartiteGraph>(&input);
    const Hypergraph* hg = std::get_if<Hypergraph>(&input);
    WitnessPrinter p{out, json};

    // Graph-level properties run on the incidence graph when the input is
    // a hypergraph.
    auto as_bigraph = [&]() -> BipartiteGraph {
        return bg ? *bg : incidence_graph(*hg);
    };
    auto need_hypergraph = [&]() -> const Hypergraph& {
        if (!hg) throw CliError("property '" + prop + "' requires a hypergraph input");
        return *hg;
    };

    if (prop == "2connected") {
        bool v = bg ? is_2connected(*bg) : is_2connected_hypergraph(*hg);
        p.kv("2connected: " + std::string(v ? "true" : "false"),
             {{"prop", prop}, {"value", v}});
    } else if (prop == "lll") {
        auto r = satisfies_lll_report(as_bigraph());
        p.kv("lll: " + std::string(r.ok ? "true" : "false (first failing A: " +
                                              list_str(r.first_failing_a) + ")"),
             {{"prop", prop}, {"value", r.ok}, {"first_failing_a", r.first_failing_a}});
    } else if (prop == "longest-cycle") {
        auto g = as_bigraph();
        auto w = longest_cycle(g);
        if (w)
            p.kv("longest-cycle: l=" + std::to_string(w->l()) + " (length " +
                     std::to_string(w->length()) + ")\nwitness: xs=" + list_str(w->xs) +
                     " ys=" + list_str(w->ys),
                 {{"prop", prop}, {"l", w->l()}, {"length", w->length()}, {"xs", w->xs},
                  {"ys", w->ys}});
        else
            p.kv("longest-cycle: none (acyclic)", {{"prop", prop}, {"l", 0}});
    } else if (prop == "spanning-x-cycle") {
        auto g = as_bigraph();
        std::vector<int> all(static_cast<std::size_t>(g.n()));
        for (int i = 0; i < g.n(); ++i) all[std::size_t(i)] = i;
        auto w = find_cycle_covering_exactly(g, all);
        if (w)
            p.kv("spanning-x-cycle: true\nwitness: xs=" + list_str(w->xs) +
                     " ys=" + list_str(w->ys),
                 {{"prop", prop}, {"value", true}, {"xs", w->xs}, {"ys", w->ys}});
        else
            p.kv("spanning-x-cycle: false", {{"prop", prop}, {"value", false}});
    } else if (prop == "super-pancyclic") {
        auto r = bg ? x_super_pancyclic_report(*bg) : super_pancyclic_report(*hg);
        p.kv("super-pancyclic: " +
                 std::string(r.ok ? "true" : "false (first failing subset: " +
                                                 list_str(r.first_failing) + ")"),
             {{"prop", prop}, {"value", r.ok}, {"first_failing", r.first_failing}});
    } else if (prop == "tight-pair") {
        auto g = as_bigraph();
        auto tp = find_tight_pair(g);
        if (tp)
            p.kv("tight-pair: t=" + std::to_string(tp->t) + " x=" + std::to_string(tp->x) +
                     " cycle: xs=" + list_str(tp->cycle.xs) + " ys=" + list_str(tp->cycle.ys),
                 {{"prop", prop}, {"t", tp->t}, {"x", tp->x}, {"xs", tp->cycle.xs},
                  {"ys", tp->cycle.ys}});
        else
            p.kv("tight-pair: none", {{"prop", prop}, {"t", nullptr}});
    } else if (prop == "crossing") {
        if (iarg <= 0 || jarg <= 0) throw CliError("crossing requires --i and --j");
        auto g = as_bigraph();
        auto w = longest_cycle(g);
        if (!w) throw CliError("crossing: graph has no cycle");
        auto q = are_crossing(g, *w, iarg, jarg);
        p.kv("crossing(i=" + std::to_string(q.i) + ", j=" + std::to_string(q.j) + "): " +
                 (q.crossing ? "true (i'=" + std::to_string(q.i_prime) +
                                   ", j'=" + std::to_string(q.j_prime) + ")"
                             : std::string("false")) +
                 "\ncycle: xs=" + list_str(w->xs) + " ys=" + list_str(w->ys),
             {{"prop", prop}, {"i", q.i}, {"j", q.j}, {"crossing", q.crossing},
              {"i_prime", q.i_prime}, {"j_prime", q.j_prime}});
    } else if (prop == "hamiltonian-berge") {
        const auto& h = need_hypergraph();
        std::vector<int> all(static_cast<std::size_t>(h.n()));
        for (int i = 0; i < h.n(); ++i) all[std::size_t(i)] = i;
        auto w = find_berge_cycle(h, all);
        if (w)
            p.kv("hamiltonian-berge: true\nwitness: base=" + list_str(w->base_vertices) +
                     " edges=" + list_str(w->edge_indices),
                 {{"prop", prop}, {"value", true}, {"base", w->base_vertices},
                  {"edges", w->edge_indices}});
        else
            p.kv("hamiltonian-berge: false", {{"prop", prop}, {"value", false}});
    } else if (prop == "berge-with-edges") {
        if (edges_arg.empty()) throw CliError("berge-with-edges requires --edges");
        const auto& h = need_hypergraph();
        auto edges = parse_int_list(edges_arg, "--edges");
        auto w = find_berge_cycle_with_edges(h, edges);
        if (w)
            p.kv("berge-with-edges: true\nwitness: base=" + list_str(w->base_vertices) +
                     " edges=" + list_str(w->edge_indices),
                 {{"prop", prop}, {"value", true}, {"base", w->base_vertices},
                  {"edges", w->edge_indices}});
        else
            p.kv("berge-with-edges: false", {{"prop", prop}, {"value", false}});
    } else if (prop == "codegree") {
        if (set_arg.empty()) throw CliError("codegree requires --set");
        const auto& h = need_hypergraph();
        auto set = parse_int_list(set_arg, "--set");
        int c = h.codegree(set);
        p.kv("codegree(" + list_str(set) + ") = " + std::to_string(c),
             {{"prop", prop}, {"set", set}, {"value", c}});
    } else {
        throw CliError("unknown property '" + prop + "'");
    }
    return 0;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cycle structure in bipartite graphs and hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized support paths (current commands are deterministic)");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate an extremal construction");
    gen->require_subcommand(1);
    auto add_gen_common = [&](CLI::App* sub) {
        sub->add_option("-o,--out", gen_opt.out_path, "output file");
        sub->add_option("--format", gen_opt.format, "text|json")->default_str("text");
        sub->add_flag("--json", gen_opt.json, "machine-readable certification");
    };
    auto* g1 = gen->add_subcommand("g1", "K_{d,d-1} plus pendant Y-vertices");
    g1->add_option("--delta", gen_opt.delta)->required();
    add_gen_common(g1);
    auto* g2 = gen->add_subcommand("g2", "two complete blocks glued at a Y-vertex");
    g2->add_option("--a", gen_opt.a)->required();
    g2->add_option("--b", gen_opt.b)->required();
    g2->add_option("--delta", gen_opt.delta)->required();
    add_gen_common(g2);
    auto* g3 = gen->add_subcommand("g3", "three blocks plus two dominating Y-vertices");
    g3->add_option("--n1", gen_opt.n1)->required();
    g3->add_option("--n2", gen_opt.n2)->required();
    g3->add_option("--n3", gen_opt.n3)->required();
    g3->add_option("--delta", gen_opt.delta)->required();
    add_gen_common(g3);
    auto* c3 = gen->add_subcommand("c3", "two overlapping power-set blocks");
    c3->add_option("--n", gen_opt.n)->required();
    add_gen_common(c3);
    auto* c4 = gen->add_subcommand("c4", "cross pairs plus one big edge");
    c4->add_option("--n", gen_opt.n)->required();
    add_gen_common(c4);

    std::string in_path, prop, edges_arg, set_arg;
    int iarg = 0, jarg = 0;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "evaluate a property of a graph file");
    check->add_option("--in", in_path, "input file")->required();
    check->add_option("--prop", prop,
                      "2connected|lll|longest-cycle|spanning-x-cycle|super-pancyclic|"
                      "tight-pair|crossing|hamiltonian-berge|berge-with-edges|codegree")
        ->required();
    check->add_option("--i", iarg, "first cycle position (crossing)");
    check->add_option("--j", jarg, "second cycle position (crossing)");
    check->add_option("--edges", edges_arg, "comma-separated edge indices");
    check->add_option("--set", set_arg, "comma-separated vertex set");
    check->add_flag("--json", check_json, "machine-readable output");

    std::string theorem, verify_out, dump_dir;
    int vn = 0, vdelta = 0;
    std::string vm;
    int workers = int(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    bool verify_json = false, guard_override = false;
    auto* verify = app.add_subcommand("verify", "exhaustively verify a theorem on a box");
    verify->add_option("theorem", theorem, "jackson|mainj|jackson2|mainpan|mainj2|jackson22")
        ->required();
    verify->add_option("--n", vn)->required();
    verify->add_option("--m", vm, "m or range a..b")->required();
    verify->add_option("--delta", vdelta)->required();
    verify->add_option("--workers", workers, "parallel workers");
    verify->add_option("-o,--out", verify_out, "write the report to a file");
    verify->add_option("--dump-exceptions", dump_dir, "write exception graphs to a directory");
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_flag("--guard-override", guard_override, "allow boxes beyond the default guard");

    std::string pred, scan_out;
    int sn = 0, sdelta = 0;
    std::string sm;
    bool scan_json = false, scan_guard_override = false;
    int scan_workers = workers;
    auto* scan = app.add_subcommand("scan", "list canonical classes matching a predicate");
    scan->add_option("--pred", pred, "e.g. \"2-connected & !spanning-x-cycle\"")->required();
    scan->add_option("--n", sn)->required();
    scan->add_option("--m", sm, "m or range a..b")->required();
    scan->add_option("--delta", sdelta)->required();
    scan->add_option("--workers", scan_workers, "parallel workers");
    scan->add_option("-o,--out", scan_out, "write the result to a file");
    scan->add_flag("--json", scan_json, "machine-readable output");
    scan->add_flag("--guard-override", scan_guard_override, "allow boxes beyond the default guard");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            ConstructionSpec spec;
            if (g1->parsed()) spec = ConstructionSpec::g1(gen_opt.delta);
            else if (g2->parsed()) spec = ConstructionSpec::g2(gen_opt.a, gen_opt.b, gen_opt.delta);
            else if (g3->parsed())
                spec = ConstructionSpec::g3(gen_opt.n1, gen_opt.n2, gen_opt.n3, gen_opt.delta);
            else if (c3->parsed()) spec = ConstructionSpec::h3(gen_opt.n);
            else spec = ConstructionSpec::h4(gen_opt.n);
            return run_gen(spec, gen_opt, out);
        }
        if (check->parsed())
            return run_check(in_path, prop, iarg, jarg, edges_arg, set_arg, check_json, out);
        if (verify->parsed()) {
            EnumLimits limits;
            if (guard_override) limits = {10, 24};
            auto [mlo, mhi] = parse_range(vm, "--m");
            int status = 0;
            std::string all_reports;
            for (int m = mlo; m <= mhi; ++m) {
                ParameterBox box{theorem_from_string(theorem), vn, m, vdelta};
                auto rep = verify_theorem(box, workers, limits);
                err << "verify " << to_string(box.id) << " n=" << box.n << " m=" << box.m
                    << " delta=" << box.delta << ": " << rep.wall_seconds << "s\n";
                all_reports += verify_json ? report_json(rep) + "\n" : report_text(rep);
                if (!rep.conforms) status = 1;
                if (!dump_dir.empty()) {
                    std::filesystem::create_directories(dump_dir);
                    for (std::size_t i = 0; i < rep.exceptions.size(); ++i)
                        write_file(dump_dir + "/exception_m" + std::to_string(m) + "_" +
                                       std::to_string(i + 1) + ".bg",
                                   rep.exceptions[i].graph_text);
                }
            }
            out << all_reports;
            if (!verify_out.empty()) write_file(verify_out, all_reports);
            return status;
        }
        if (scan->parsed()) {
            EnumLimits limits;
            if (scan_guard_override) limits = {10, 24};
            auto [mlo, mhi] = parse_range(sm, "--m");
            std::string payload;
            auto arr = ordered_json::array();
            for (int m = mlo; m <= mhi; ++m) {
                auto hits = scan_box(pred, sn, m, sdelta, scan_workers, limits);
                if (scan_json) {
                    for (const auto& h : hits)
                        arr.push_back({{"canon", canonical_hex(h.canon)},
                                       {"n", h.graph.n()},
                                       {"m", h.graph.m()},
                                       {"adj", h.graph.adjacency_lists()}});
                } else {
                    payload += "box n=" + std::to_string(sn) + " m=" + std::to_string(m) +
                               " delta=" + std::to_string(sdelta) + ": " +
                               std::to_string(hits.size()) + " classes\n";
                    for (const auto& h : hits) {
                        payload += "class " + canonical_hex(h.canon) + "\n";
                        std::istringstream is(to_text(h.graph));
                        std::string line;
                        while (std::getline(is, line)) payload += "  " + line + "\n";
                    }
                }
            }
            if (scan_json) payload = arr.dump(2) + "\n";
            out << payload;
            if (!scan_out.empty()) write_file(scan_out, payload);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace berge
