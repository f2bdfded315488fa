#pragma once

// Simple undirected graphs on vertices 0..n-1 with bit-row adjacency.
// Graphs are immutable once built: construction goes through the factory
// functions or GraphBuilder, which reject self-loops and out-of-range
// endpoints and collapse duplicate edges.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace chibind {

using VertexList = std::vector<int>;
using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph;

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        rows_.assign(n, Bitset(n));
    }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop rejected");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    inline Graph build() &&;

private:
    int n_;
    std::vector<Bitset> rows_;
    friend class Graph;
};

class Graph {
public:
    Graph() = default;

    static Graph edgeless(int n) { return Graph(GraphBuilder(n)); }

    static Graph from_edges(int n, const EdgeList& edges) {
        GraphBuilder b(n);
        for (auto [u, v] : edges) b.add_edge(u, v);
        return Graph(std::move(b));
    }

    int n() const { return n_; }

    long long m() const {
        long long deg_sum = 0;
        for (const auto& r : rows_) deg_sum += r.count();
        return deg_sum / 2;
    }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }

    const Bitset& row(int u) const {
        if (u < 0 || u >= n_) throw std::out_of_range("graph: vertex out of range");
        return rows_[u];
    }

    int degree(int u) const { return row(u).count(); }

    // Edges as (u,v) with u < v, lexicographically sorted.
    EdgeList edges() const {
        EdgeList out;
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    explicit Graph(GraphBuilder b) : n_(b.n_), rows_(std::move(b.rows_)) {}

    int n_ = 0;
    std::vector<Bitset> rows_;
    friend class GraphBuilder;
};

inline Graph GraphBuilder::build() && { return Graph(std::move(*this)); }

// ---- operators ----

inline Graph complement(const Graph& g) {
    GraphBuilder b(g.n());
    for (int u = 0; u < g.n(); ++u) {
        Bitset r = g.row(u);
        r.flip_all();
        r.reset(u);
        for (int v = r.next(u + 1); v >= 0; v = r.next(v + 1)) b.add_edge(u, v);
    }
    return std::move(b).build();
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder out(a.n() + b.n());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
    return std::move(out).build();
}

// join = disjoint union plus all edges between the two sides; the left
// operand keeps its vertex ids, the right is shifted by a.n().
inline Graph join(const Graph& a, const Graph& b) {
    GraphBuilder out(a.n() + b.n());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) out.add_edge(u, a.n() + v);
    return std::move(out).build();
}

// Induced subgraph plus the relabelling map: vertices[new_id] = old_id.
// Input vertices are deduplicated and sorted, so new ids keep the old order.
struct Subgraph {
    Graph graph;
    VertexList vertices;
};

inline Subgraph induced_subgraph(const Graph& g, VertexList verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    GraphBuilder b(static_cast<int>(verts.size()));
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
            if (g.adjacent(verts[i], verts[j])) b.add_edge(i, j);
    return {std::move(b).build(), std::move(verts)};
}

// Mycielskian: vertices 0..n-1 (originals), n..2n-1 (shadows, shadow of v is
// n+v), 2n (hub).  Edges: originals keep theirs, shadow n+v sees N(v), hub
// sees every shadow.
inline Graph mycielskian(const Graph& g) {
    int n = g.n();
    GraphBuilder b(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
        b.add_edge(u, n + v);
        b.add_edge(v, n + u);
    }
    for (int v = 0; v < n; ++v) b.add_edge(n + v, 2 * n);
    return std::move(b).build();
}

// Connected components, each sorted ascending, ordered by smallest member.
inline std::vector<VertexList> components(const Graph& g) {
    std::vector<VertexList> out;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexList comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            const Bitset& r = g.row(u);
            for (int v = r.next(0); v >= 0; v = r.next(v + 1))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// ---- named graphs ----

inline Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    b.add_edge(n - 1, 0);
    return std::move(b).build();
}

inline Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

// p disjoint edges: vertices 0..2p-1, edges (2i, 2i+1).
inline Graph matching_graph(int p) {
    if (p < 0) throw std::invalid_argument("matching_graph: negative p");
    GraphBuilder b(2 * p);
    for (int i = 0; i < p; ++i) b.add_edge(2 * i, 2 * i + 1);
    return std::move(b).build();
}

// Apex 0 joined to the path 1-2-3-4.
inline Graph gem_graph() { return join(complete_graph(1), path_graph(4)); }

// K4 minus an edge; apex 0 joined to the path 1-2-3.
inline Graph diamond_graph() { return join(complete_graph(1), path_graph(3)); }

// (K1 u K2) + K2: 0 isolated-side, {1,2} edge, {3,4} join side.
inline Graph hvn_graph() {
    return join(disjoint_union(complete_graph(1), complete_graph(2)), complete_graph(2));
}

// K5 minus an edge = 2K1 + K3: {0,1} the non-edge, {2,3,4} the triangle.
inline Graph k5_minus_e_graph() { return join(Graph::edgeless(2), complete_graph(3)); }

// Two triangles sharing the centre 0.
inline Graph butterfly_graph() { return join(complete_graph(1), matching_graph(2)); }

// Gem with a pendant 5 attached at the apex 0.
inline Graph gem_plus_graph() {
    GraphBuilder b(6);
    for (auto [u, v] : gem_graph().edges()) b.add_edge(u, v);
    b.add_edge(0, 5);
    return std::move(b).build();
}

// Diamond with a pendant 4 attached at the degree-3 vertex 0.
inline Graph dart_graph() {
    GraphBuilder b(5);
    for (auto [u, v] : diamond_graph().edges()) b.add_edge(u, v);
    b.add_edge(0, 4);
    return std::move(b).build();
}

// Apex 0 joined to the cycle 1-2-3-4-1.
inline Graph k1_c4_graph() { return join(complete_graph(1), cycle_graph(4)); }

// Complement of P5: a 4-cycle with a triangle roof.
inline Graph house_graph() { return complement(path_graph(5)); }

// Join of an edge {0,1} and the path 2-3-4-5.
inline Graph k2_p4_graph() { return join(complete_graph(2), path_graph(4)); }

// Parses pattern tokens: fixed names (gem, diamond, hvn, k5e, butterfly,
// gemplus, dart, k1c4, house, k2p4) and parametric forms p<n>, c<n>, k<n>,
// <p>k2.
inline Graph parse_named_graph(const std::string& tok) {
    if (tok == "gem") return gem_graph();
    if (tok == "diamond") return diamond_graph();
    if (tok == "hvn") return hvn_graph();
    if (tok == "k5e") return k5_minus_e_graph();
    if (tok == "butterfly") return butterfly_graph();
    if (tok == "gemplus") return gem_plus_graph();
    if (tok == "dart") return dart_graph();
    if (tok == "k1c4") return k1_c4_graph();
    if (tok == "house") return house_graph();
    if (tok == "k2p4") return k2_p4_graph();
    auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (tok.size() >= 2 && (tok[0] == 'p' || tok[0] == 'c' || tok[0] == 'k') &&
        all_digits(tok.substr(1))) {
        int n = std::stoi(tok.substr(1));
        if (tok[0] == 'p') return path_graph(n);
        if (tok[0] == 'c') return cycle_graph(n);
        return complete_graph(n);
    }
    if (tok.size() >= 3 && tok.substr(tok.size() - 2) == "k2" &&
        all_digits(tok.substr(0, tok.size() - 2)))
        return matching_graph(std::stoi(tok.substr(0, tok.size() - 2)));
    throw std::invalid_argument("unknown graph name: " + tok);
}

}  // namespace chibind
