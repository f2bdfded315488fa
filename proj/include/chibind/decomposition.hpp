#pragma once

// Maximum clique and the clique-anchored partition.
//
// max_clique is exact branch-and-bound with a greedy-coloring bound.  The
// returned clique is deterministic: among all maximum cliques it is the one
// whose ascending vertex list is lexicographically least, extracted by
// repeatedly taking the smallest vertex that still extends to a clique of
// the required size.
//
// wagon_partition splits V against A = {v_1 < ... < v_w} (the clique above):
//   I_i     = vertices adjacent to all of A except v_i (and not to v_i),
//   C_{i,j} = remaining vertices, claimed by the pair (i,j) of their two
//             smallest non-neighbor indices in A.
// Members of C_{i,j} are adjacent to every v_k with k < j, k not in {i,j},
// and the clique number of <C_{i,j}> is at most w-j+2.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace chibind {

namespace detail {

// Greedy-colors P (in place), reorders it class by class so color bounds are
// nondecreasing, and returns bounds[k] = color of P[k].
inline std::vector<int> color_order(const Graph& g, VertexList& P) {
    std::vector<VertexList> classes;
    std::vector<Bitset> members;
    for (int v : P) {
        std::size_t c = 0;
        while (c < classes.size() && members[c].intersects(g.row(v))) ++c;
        if (c == classes.size()) {
            classes.emplace_back();
            members.emplace_back(g.n());
        }
        classes[c].push_back(v);
        members[c].set(v);
    }
    P.clear();
    std::vector<int> bounds;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) {
            P.push_back(v);
            bounds.push_back(static_cast<int>(c) + 1);
        }
    return bounds;
}

inline void mc_expand(const Graph& g, VertexList P, int rsize, int& best) {
    if (P.empty()) {
        best = std::max(best, rsize);
        return;
    }
    std::vector<int> bounds = color_order(g, P);
    for (int k = static_cast<int>(P.size()) - 1; k >= 0; --k) {
        if (rsize + bounds[k] <= best) return;
        int v = P[k];
        VertexList next;
        for (int t = 0; t < k; ++t)
            if (g.adjacent(P[t], v)) next.push_back(P[t]);
        mc_expand(g, std::move(next), rsize + 1, best);
    }
}

// True iff the candidate set contains a clique of the given size.
inline bool exists_clique(const Graph& g, VertexList P, int need) {
    if (need <= 0) return true;
    if (static_cast<int>(P.size()) < need) return false;
    std::vector<int> bounds = color_order(g, P);
    if (bounds.back() < need) return false;
    for (int k = static_cast<int>(P.size()) - 1; k >= 0; --k) {
        if (bounds[k] < need) return false;
        int v = P[k];
        VertexList next;
        for (int t = 0; t < k; ++t)
            if (g.adjacent(P[t], v)) next.push_back(P[t]);
        if (exists_clique(g, std::move(next), need - 1)) return true;
    }
    return false;
}

}  // namespace detail

inline int max_clique_size(const Graph& g) {
    if (g.n() == 0) return 0;
    VertexList P(g.n());
    for (int v = 0; v < g.n(); ++v) P[v] = v;
    std::sort(P.begin(), P.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    int best = 0;
    detail::mc_expand(g, std::move(P), 0, best);
    return best;
}

inline VertexList max_clique(const Graph& g) {
    int w = max_clique_size(g);
    VertexList result;
    VertexList cand(g.n());
    for (int v = 0; v < g.n(); ++v) cand[v] = v;
    for (int need = w; need >= 1; --need) {
        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
            int v = cand[idx];
            VertexList rest;
            for (int u : cand)
                if (u > v && g.adjacent(u, v)) rest.push_back(u);
            if (detail::exists_clique(g, rest, need - 1)) {
                result.push_back(v);
                cand = std::move(rest);
                break;
            }
        }
    }
    return result;
}

struct WagonPartition {
    VertexList clique;                            // v_1..v_w, ascending
    std::vector<VertexList> I;                    // I[i-1] = I_i, ascending
    std::map<std::pair<int, int>, VertexList> C;  // 1-based (i,j), i<j; nonempty cells only

    const VertexList& c_set(int i, int j) const {
        static const VertexList none;
        auto it = C.find({i, j});
        return it == C.end() ? none : it->second;
    }
};

// Partition against a caller-supplied clique (must be maximal for the cell
// rules to apply; the one-argument overload always passes a maximum clique).
inline WagonPartition wagon_partition(const Graph& g, VertexList clique) {
    std::sort(clique.begin(), clique.end());
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            if (!g.adjacent(clique[a], clique[b]))
                throw std::invalid_argument("wagon_partition: vertex set is not a clique");
    WagonPartition part;
    part.clique = clique;
    int w = static_cast<int>(clique.size());
    part.I.assign(w, {});
    Bitset in_a = Bitset::of(g.n(), clique);
    for (int x = 0; x < g.n(); ++x) {
        if (in_a.test(x)) continue;
        VertexList misses;
        for (int i = 1; i <= w; ++i)
            if (!g.adjacent(x, clique[i - 1])) misses.push_back(i);
        if (misses.empty())
            throw std::invalid_argument("wagon_partition: clique is not maximal");
        if (misses.size() == 1)
            part.I[misses[0] - 1].push_back(x);
        else
            part.C[{misses[0], misses[1]}].push_back(x);
    }
    return part;
}

inline WagonPartition wagon_partition(const Graph& g) {
    return wagon_partition(g, max_clique(g));
}

struct PartitionDefect {
    std::string code;
    std::string detail;
};

// Re-derives every structural promise of the partition; empty result = ok.
inline std::vector<PartitionDefect> verify_partition(const Graph& g, const WagonPartition& part) {
    std::vector<PartitionDefect> out;
    auto defect = [&](const std::string& code, const std::string& detail) {
        out.push_back({code, detail});
    };
    int w = static_cast<int>(part.clique.size());
    for (int v : part.clique)
        if (v < 0 || v >= g.n()) {
            defect("clique-range", "clique vertex " + std::to_string(v) + " out of range");
            return out;
        }
    for (int k = 0; k + 1 < w; ++k)
        if (part.clique[k] >= part.clique[k + 1])
            defect("clique-order", "clique list not strictly ascending");
    for (int a = 0; a < w; ++a)
        for (int b = a + 1; b < w; ++b)
            if (!g.adjacent(part.clique[a], part.clique[b]))
                defect("clique-edges", "clique vertices " + std::to_string(part.clique[a]) + "," +
                                           std::to_string(part.clique[b]) + " not adjacent");
    if (max_clique_size(g) != w)
        defect("clique-maximum", "anchor clique is not a maximum clique");

    std::vector<int> owner(g.n(), 0);
    auto claim = [&](int v, const std::string& cell) {
        if (v < 0 || v >= g.n()) {
            defect("cell-range", cell + " holds out-of-range vertex " + std::to_string(v));
            return;
        }
        if (++owner[v] > 1)
            defect("cover-overlap", "vertex " + std::to_string(v) + " in more than one cell");
    };
    for (int v : part.clique) claim(v, "clique");
    if (static_cast<int>(part.I.size()) != w)
        defect("i-count", "expected " + std::to_string(w) + " I-cells");
    for (std::size_t i = 0; i < part.I.size(); ++i)
        for (int v : part.I[i]) claim(v, "I" + std::to_string(i + 1));
    for (const auto& [key, cell] : part.C) {
        auto [i, j] = key;
        if (i < 1 || j <= i || j > w) defect("c-key", "bad cell key");
        for (int v : cell) claim(v, "C");
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] == 0) defect("cover-missing", "vertex " + std::to_string(v) + " in no cell");
    if (!out.empty()) return out;  // membership checks below assume a clean cover

    for (int i = 1; i <= w; ++i) {
        const VertexList& cell = part.I[i - 1];
        for (std::size_t a = 0; a < cell.size(); ++a)
            for (std::size_t b = a + 1; b < cell.size(); ++b)
                if (g.adjacent(cell[a], cell[b]))
                    defect("i-independent", "I" + std::to_string(i) + " contains an edge");
        for (int x : cell)
            for (int k = 1; k <= w; ++k) {
                bool adj = g.adjacent(x, part.clique[k - 1]);
                if (k == i ? adj : !adj)
                    defect("i-adjacency", "vertex " + std::to_string(x) + " misplaced in I" +
                                              std::to_string(i));
            }
    }
    for (const auto& [key, cell] : part.C) {
        auto [i, j] = key;
        for (int x : cell) {
            VertexList misses;
            for (int k = 1; k <= w; ++k)
                if (!g.adjacent(x, part.clique[k - 1])) misses.push_back(k);
            if (misses.size() < 2 || misses[0] != i || misses[1] != j)
                defect("c-claim", "vertex " + std::to_string(x) + " not claimed by pair (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
        for (int k = 1; k < j; ++k) {
            if (k == i) continue;
            for (int x : cell)
                if (!g.adjacent(x, part.clique[k - 1]))
                    defect("c-complete", "C(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") not complete to v_" + std::to_string(k));
        }
        Subgraph sub = induced_subgraph(g, cell);
        if (max_clique_size(sub.graph) > w - j + 2)
            defect("c-clique-bound", "clique number of C(" + std::to_string(i) + "," +
                                         std::to_string(j) + ") exceeds " +
                                         std::to_string(w - j + 2));
    }
    return out;
}

}  // namespace chibind
