#pragma once

// Graph file formats.
//
// DIMACS .col: "c" comments, one "p edge <n> <m>" header, "e <u> <v>" lines
// with 1-based endpoints.  The writer emits the header plus edges sorted
// lexicographically.
//
// Edge list: "<u> <v>" lines with 0-based endpoints, "#" comments.  The
// writer always puts "# n <count>" on the first line so graphs with isolated
// vertices survive a round trip; the reader falls back to 1 + max index when
// the header is absent.
//
// read_graph_auto treats input whose first meaningful line starts with
// "p edge" as DIMACS, anything else as an edge list.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "graph.hpp"

namespace chibind {

struct ParseError : Error {
    using Error::Error;
};

inline Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m_declared = -1, edges_seen = 0;
    EdgeList edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("dimacs line " + std::to_string(lineno) + ": " + why);
        };
        if (kind == "c") continue;
        if (kind == "p") {
            std::string fmt;
            if (n >= 0) fail("duplicate problem line");
            if (!(ls >> fmt >> n >> m_declared) || fmt != "edge" || n < 0 || m_declared < 0)
                fail("malformed problem line, expected 'p edge <n> <m>'");
            continue;
        }
        if (kind == "e") {
            int u, v;
            if (n < 0) fail("edge before problem line");
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range");
            if (u == v) fail("self-loop");
            edges.emplace_back(u - 1, v - 1);
            ++edges_seen;
            continue;
        }
        fail("unknown line type '" + kind + "'");
    }
    if (n < 0) throw ParseError("dimacs: missing problem line");
    return Graph::from_edges(n, edges);
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int n_declared = -1, max_seen = -1;
    EdgeList edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto fail = [&](const std::string& why) {
            throw ParseError("edge list line " + std::to_string(lineno) + ": " + why);
        };
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "#") {
            std::string key;
            long long val;
            if (n_declared < 0 && ls >> key >> val && key == "n") {
                if (val < 0) fail("negative vertex count");
                n_declared = static_cast<int>(val);
            }
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            fail("expected integer endpoint");
            return {};  // unreachable
        }
        if (!(ls >> v)) fail("missing second endpoint");
        if (u < 0 || v < 0) fail("negative endpoint");
        if (u == v) fail("self-loop");
        edges.emplace_back(u, v);
        max_seen = std::max({max_seen, u, v});
    }
    int n = n_declared >= 0 ? n_declared : max_seen + 1;
    if (max_seen >= n) throw ParseError("edge list: endpoint exceeds declared vertex count");
    return Graph::from_edges(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n " << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph read_graph_auto(const std::string& text) {
    std::istringstream scan(text);
    std::string line;
    while (std::getline(scan, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c" || first == "#") continue;
        std::istringstream in(text);
        if (first == "p") return read_dimacs(in);
        return read_edge_list(in);
    }
    throw ParseError("empty graph input");
}

}  // namespace chibind
