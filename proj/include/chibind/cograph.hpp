#pragma once

// Optimal coloring of P4-free graphs by cotree recursion: a disconnected
// graph reuses one palette across components, a co-disconnected graph stacks
// the palettes of its join parts.  Uses exactly as many colors as the
// largest clique.  Inputs with an induced P4 raise NotCograph carrying the
// path.

#include "graph.hpp"
#include "coloring.hpp"
#include "recognition.hpp"

namespace chibind {

struct NotCograph : Error {
    VertexList p4;  // induced path a-b-c-d in the input graph

    explicit NotCograph(VertexList w)
        : Error("not a cograph: induced P4 present"), p4(std::move(w)) {}
};

namespace detail {

inline int cograph_rec(const Graph& host, const VertexList& verts, std::vector<int>& col,
                       int base) {
    if (verts.empty()) return 0;
    if (verts.size() == 1) {
        col[verts[0]] = base + 1;
        return 1;
    }
    Subgraph sub = induced_subgraph(host, verts);
    auto lift = [&](const VertexList& local) {
        VertexList orig;
        for (int x : local) orig.push_back(sub.vertices[x]);
        return orig;
    };
    auto comps = components(sub.graph);
    if (comps.size() > 1) {
        int k = 0;
        for (const auto& cp : comps) k = std::max(k, cograph_rec(host, lift(cp), col, base));
        return k;
    }
    auto cocomps = components(complement(sub.graph));
    if (cocomps.size() == 1) {
        auto w = contains_induced(sub.graph, path_graph(4));
        throw NotCograph(w ? lift(w->map) : VertexList{});
    }
    int used = 0;
    for (const auto& cp : cocomps) used += cograph_rec(host, lift(cp), col, base + used);
    return used;
}

}  // namespace detail

inline Coloring color_cograph(const Graph& g) {
    Coloring c{std::vector<int>(g.n(), 0), 0};
    VertexList all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    c.colors_used = detail::cograph_rec(g, all, c.color, 0);
    return c;
}

}  // namespace chibind
