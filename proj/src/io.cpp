#include "berge/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace berge {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++lineno;
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream iss{std::string(raw)};
        std::vector<std::string> toks;
        std::string t;
        while (iss >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back({lineno, std::move(toks)});
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    return v;
}

GraphInput parse_bigraph_lines(const std::vector<Line>& lines) {
    const auto& head = lines.front();
    if (head.tokens.size() != 3)
        throw ParseError(head.number, "expected 'bigraph <n> <m>'");
    int n = parse_int(head.tokens[1], head.number, "n");
    int m = parse_int(head.tokens[2], head.number, "m");
    if (n < 1) throw ParseError(head.number, "n must be >= 1");
    if (m < 0) throw ParseError(head.number, "m must be >= 0");
    if (int(lines.size()) - 1 != n)
        throw ParseError(head.number, "expected " + std::to_string(n) + " adjacency lines, got " +
                                          std::to_string(lines.size() - 1));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& ln = lines[li];
        if (ln.tokens[0].empty() || ln.tokens[0].back() != ':')
            throw ParseError(ln.number, "expected '<x-index>:' at start of adjacency line");
        int x = parse_int(ln.tokens[0].substr(0, ln.tokens[0].size() - 1), ln.number, "x index");
        if (x < 0 || x >= n)
            throw ParseError(ln.number, "X index " + std::to_string(x) + " out of range");
        if (seen[std::size_t(x)])
            throw ParseError(ln.number, "duplicate adjacency line for X index " + std::to_string(x));
        seen[std::size_t(x)] = 1;
        Bitset row(m);
        for (std::size_t k = 1; k < ln.tokens.size(); ++k) {
            int y = parse_int(ln.tokens[k], ln.number, "y index");
            if (y < 0 || y >= m)
                throw ParseError(ln.number, "Y index " + std::to_string(y) + " out of range");
            if (row.test(y))
                throw ParseError(ln.number, "duplicate Y index " + std::to_string(y) +
                                                " in adjacency line for X " + std::to_string(x));
            row.set(y);
            adj[std::size_t(x)].push_back(y);
        }
    }
    return BipartiteGraph(n, m, adj);
}

GraphInput parse_hypergraph_lines(const std::vector<Line>& lines) {
    const auto& head = lines.front();
    if (head.tokens.size() != 2)
        throw ParseError(head.number, "expected 'hypergraph <n>'");
    int n = parse_int(head.tokens[1], head.number, "n");
    if (n < 1) throw ParseError(head.number, "n must be >= 1");
    std::vector<std::vector<int>> edges;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& ln = lines[li];
        if (ln.tokens[0] != "e:")
            throw ParseError(ln.number, "expected 'e:' at start of edge line");
        if (ln.tokens.size() == 1)
            throw ParseError(ln.number, "empty edge (edges must have size >= 1)");
        std::vector<int> edge;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (std::size_t k = 1; k < ln.tokens.size(); ++k) {
            int v = parse_int(ln.tokens[k], ln.number, "vertex index");
            if (v < 0 || v >= n)
                throw ParseError(ln.number, "vertex index " + std::to_string(v) + " out of range");
            if (seen[std::size_t(v)])
                throw ParseError(ln.number, "repeated vertex " + std::to_string(v) + " in edge");
            seen[std::size_t(v)] = 1;
            edge.push_back(v);
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

std::vector<int> int_array(const ordered_json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(1, what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(1, what + " must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

GraphInput parse_text(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    const auto& head = lines.front();
    if (head.tokens[0] == "bigraph") return parse_bigraph_lines(lines);
    if (head.tokens[0] == "hypergraph") return parse_hypergraph_lines(lines);
    throw ParseError(head.number, "unknown header '" + head.tokens[0] +
                                      "' (expected 'bigraph' or 'hypergraph')");
}

GraphInput parse_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError(1, "JSON input must be an object with a 'kind' field");
    std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "bigraph") {
            int n = j.at("n").get<int>();
            int m = j.at("m").get<int>();
            std::vector<std::vector<int>> adj;
            for (const auto& row : j.at("adj")) adj.push_back(int_array(row, "adj row"));
            return BipartiteGraph(n, m, adj);
        }
        if (kind == "hypergraph") {
            int n = j.at("n").get<int>();
            std::vector<std::vector<int>> edges;
            for (const auto& e : j.at("edges")) edges.push_back(int_array(e, "edge"));
            return Hypergraph(n, std::move(edges));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(1, e.what());
    }
    throw ParseError(1, "unknown kind '" + kind + "'");
}

GraphInput parse_any(std::string_view text) {
    for (char c : text) {
        if (c == '#') {
            // skip the rest of the line
            auto nl = text.find('\n');
            if (nl == std::string_view::npos) break;
            text = text.substr(nl + 1);
            return parse_any(text);
        }
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json(text);
        return parse_text(text);
    }
    throw ParseError(1, "empty input");
}

std::string to_text(const BipartiteGraph& g) {
    std::ostringstream os;
    os << "bigraph " << g.n() << ' ' << g.m() << '\n';
    for (int x = 0; x < g.n(); ++x) {
        os << x << ':';
        g.row(x).for_each([&](int y) { os << ' ' << y; });
        os << '\n';
    }
    return os.str();
}

std::string to_text(const Hypergraph& h) {
    std::ostringstream os;
    os << "hypergraph " << h.n() << '\n';
    for (int e = 0; e < h.edge_count(); ++e) {
        os << "e:";
        for (int v : h.edge(e)) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::string to_json_string(const BipartiteGraph& g) {
    ordered_json j;
    j["kind"] = "bigraph";
    j["n"] = g.n();
    j["m"] = g.m();
    j["adj"] = g.adjacency_lists();
    return j.dump(2);
}

std::string to_json_string(const Hypergraph& h) {
    ordered_json j;
    j["kind"] = "hypergraph";
    j["n"] = h.n();
    j["edges"] = h.edges();
    return j.dump(2);
}

std::string to_json_string(const CycleWitness& w) {
    ordered_json j;
    j["xs"] = w.xs;
    j["ys"] = w.ys;
    return j.dump();
}

std::string to_json_string(const BergeCycleWitness& w) {
    ordered_json j;
    j["base"] = w.base_vertices;
    j["edges"] = w.edge_indices;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
    if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace berge
