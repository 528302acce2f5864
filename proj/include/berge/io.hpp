#pragma once

#include "berge/bipartite_graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/witness.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace berge {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + msg),
          line(line) {}
    int line;
};

using GraphInput = std::variant<BipartiteGraph, Hypergraph>;

// Line-oriented text format ('#' starts a comment):
//   bigraph <n> <m>        followed by n lines "<x>: <y>..."
//   hypergraph <n>         followed by one line per edge "e: <v>..."
GraphInput parse_text(std::string_view text);

// Single object {kind, n, m?, adj|edges} with 0-based integer indices.
GraphInput parse_json(std::string_view text);

// Dispatches on the first non-comment token ('{' selects JSON).
GraphInput parse_any(std::string_view text);

std::string to_text(const BipartiteGraph& g);
std::string to_text(const Hypergraph& h);

std::string to_json_string(const BipartiteGraph& g);
std::string to_json_string(const Hypergraph& h);
std::string to_json_string(const CycleWitness& w);
std::string to_json_string(const BergeCycleWitness& w);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace berge
