#pragma once

// Bounded exact oracles, kept independent of the construction code they
// validate: omega_exact is Bron-Kerbosch with pivoting (decomposition uses a
// different branch-and-bound), chi_exact is iterative-deepening k-coloring
// search, and the two brute-force subgraph searches are plain enumerations
// with none of the recognition module's ordering heuristics.
//
// All searches count nodes against SearchLimits::node_budget and poll the
// optional cancellation flag; chi_exact additionally refuses graphs larger
// than SearchLimits::max_n.  Limit hits raise ResourceLimit.

#include <atomic>
#include <optional>

#include "coloring.hpp"
#include "graph.hpp"
#include "recognition.hpp"

namespace chibind {

struct ResourceLimit : Error {
    using Error::Error;
};

struct SearchLimits {
    int max_n = 40;                        // chi_exact size cap
    long long node_budget = 50'000'000;    // search nodes before giving up
    const std::atomic<bool>* cancel = nullptr;
};

namespace detail {

struct SearchCounter {
    const SearchLimits& lim;
    long long nodes = 0;

    void tick() {
        if (++nodes > lim.node_budget)
            throw ResourceLimit("oracle node budget exhausted");
        if (lim.cancel && (nodes & 1023) == 0 && lim.cancel->load(std::memory_order_relaxed))
            throw ResourceLimit("oracle cancelled");
    }
};

}  // namespace detail

// Every edge whose endpoints share a color, sorted (u < v, lex).  Throws if
// any vertex is uncolored (color < 1) or the size is wrong.
inline std::vector<Edge> validate_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n())
        throw std::invalid_argument("validate_coloring: size mismatch");
    for (int v = 0; v < g.n(); ++v)
        if (c.color[v] < 1)
            throw std::invalid_argument("validate_coloring: vertex " + std::to_string(v) +
                                        " has no color");
    std::vector<Edge> bad;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) bad.emplace_back(u, v);
    return bad;
}

struct CliqueReport {
    int omega = 0;
    VertexList clique;  // first maximum clique in search order, ascending
    long long nodes = 0;
};

namespace detail {

inline void bk_pivot(const Graph& g, Bitset& R, Bitset P, Bitset X, CliqueReport& rep,
                     SearchCounter& counter) {
    counter.tick();
    if (P.none() && X.none()) {
        if (R.count() > rep.omega) {
            rep.omega = R.count();
            rep.clique = R.to_vector();
        }
        return;
    }
    int pivot = -1, best_gain = -1;
    for (int pass = 0; pass < 2; ++pass) {
        const Bitset& side = pass == 0 ? P : X;
        for (int u = side.next(0); u >= 0; u = side.next(u + 1)) {
            Bitset t = P;
            t &= g.row(u);
            int gain = t.count();
            if (gain > best_gain) {
                best_gain = gain;
                pivot = u;
            }
        }
    }
    Bitset ext = P;
    if (pivot >= 0) ext.and_not(g.row(pivot));
    for (int v = ext.next(0); v >= 0; v = ext.next(v + 1)) {
        Bitset p2 = P, x2 = X;
        p2 &= g.row(v);
        x2 &= g.row(v);
        R.set(v);
        bk_pivot(g, R, std::move(p2), std::move(x2), rep, counter);
        R.reset(v);
        P.reset(v);
        X.set(v);
    }
}

}  // namespace detail

inline CliqueReport omega_exact(const Graph& g, const SearchLimits& lim = {}) {
    CliqueReport rep;
    detail::SearchCounter counter{lim};
    Bitset R(g.n()), P(g.n()), X(g.n());
    P.set_all();
    detail::bk_pivot(g, R, std::move(P), std::move(X), rep, counter);
    rep.nodes = counter.nodes;
    return rep;
}

struct IndependentSetReport {
    int alpha = 0;
    VertexList set;
    long long nodes = 0;
};

inline IndependentSetReport alpha_exact(const Graph& g, const SearchLimits& lim = {}) {
    CliqueReport rep = omega_exact(complement(g), lim);
    return {rep.omega, rep.clique, rep.nodes};
}

struct ChiReport {
    int chi = 0;
    Coloring coloring;
    long long nodes = 0;
};

namespace detail {

// Greedy clique: repeatedly take the highest-degree vertex inside the
// running common neighborhood.  Heuristic seed only; exactness comes from
// the search.
inline VertexList greedy_clique(const Graph& g) {
    VertexList clique;
    Bitset cand(g.n());
    cand.set_all();
    while (cand.any()) {
        int best = -1, best_deg = -1;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            Bitset t = cand;
            t &= g.row(v);
            int d = t.count();
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        clique.push_back(best);
        cand &= g.row(best);
    }
    return clique;
}

// Saturation-guided greedy coloring; upper bound and fallback certificate.
inline Coloring dsatur(const Graph& g) {
    Coloring c{std::vector<int>(g.n(), 0), 0};
    for (int step = 0; step < g.n(); ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (c.color[v]) continue;
            std::vector<char> seen(g.n() + 2, 0);
            int sat = 0;
            const Bitset& r = g.row(v);
            for (int u = r.next(0); u >= 0; u = r.next(u + 1))
                if (c.color[u] && !seen[c.color[u]]) {
                    seen[c.color[u]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<char> used(g.n() + 2, 0);
        const Bitset& r = g.row(pick);
        for (int u = r.next(0); u >= 0; u = r.next(u + 1))
            if (c.color[u]) used[c.color[u]] = 1;
        int col = 1;
        while (used[col]) ++col;
        c.color[pick] = col;
        c.colors_used = std::max(c.colors_used, col);
    }
    return c;
}

// Backtracking k-colorability.  The seed clique is pre-colored 1..|Q|; the
// next vertex is always one of maximum saturation (tie: max degree, then min
// id); candidate colors run 1..min(k, max used so far + 1).
struct KColor {
    const Graph& g;
    int k;
    std::vector<int> color;
    SearchCounter& counter;

    bool extend(int colored, int max_used) {
        counter.tick();
        if (colored == g.n()) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (color[v]) continue;
            std::vector<char> seen(k + 2, 0);
            int sat = 0;
            const Bitset& r = g.row(v);
            for (int u = r.next(0); u >= 0; u = r.next(u + 1))
                if (color[u] && !seen[color[u]]) {
                    seen[color[u]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<char> used(k + 2, 0);
        const Bitset& r = g.row(pick);
        for (int u = r.next(0); u >= 0; u = r.next(u + 1))
            if (color[u]) used[color[u]] = 1;
        int limit = std::min(k, max_used + 1);
        for (int col = 1; col <= limit; ++col) {
            if (used[col]) continue;
            color[pick] = col;
            if (extend(colored + 1, std::max(max_used, col))) return true;
            color[pick] = 0;
        }
        return false;
    }
};

}  // namespace detail

inline ChiReport chi_exact(const Graph& g, const SearchLimits& lim = {}) {
    if (g.n() > lim.max_n)
        throw ResourceLimit("chi_exact: graph larger than the configured oracle limit (" +
                            std::to_string(lim.max_n) + ")");
    if (g.n() == 0) return {0, {{}, 0}, 0};
    detail::SearchCounter counter{lim};
    VertexList seed = detail::greedy_clique(g);
    Coloring ub = detail::dsatur(g);
    int lb = static_cast<int>(seed.size());
    for (int k = lb; k < ub.colors_used; ++k) {
        detail::KColor search{g, k, std::vector<int>(g.n(), 0), counter};
        for (std::size_t i = 0; i < seed.size(); ++i)
            search.color[seed[i]] = static_cast<int>(i) + 1;
        if (search.extend(static_cast<int>(seed.size()), static_cast<int>(seed.size()))) {
            Coloring c{std::move(search.color), k};
            normalize(c);
            return {k, std::move(c), counter.nodes};
        }
    }
    normalize(ub);
    return {ub.colors_used, std::move(ub), counter.nodes};
}

// ---- brute-force references (small hosts only) ----

// Natural-order exhaustive induced-subgraph search: pattern vertex d is
// mapped in order 0,1,2,..., host candidates tried ascending.
inline std::optional<InducedWitness> contains_induced_bruteforce(const Graph& host,
                                                                 const Graph& pattern) {
    if (host.n() > 14)
        throw std::invalid_argument("contains_induced_bruteforce: host larger than 14 vertices");
    if (pattern.n() > host.n()) return std::nullopt;
    VertexList image;
    std::vector<char> used(host.n(), 0);
    auto rec = [&](auto&& self, int d) -> bool {
        if (d == pattern.n()) return true;
        for (int h = 0; h < host.n(); ++h) {
            if (used[h]) continue;
            bool ok = true;
            for (int e = 0; e < d && ok; ++e)
                ok = pattern.adjacent(e, d) == host.adjacent(image[e], h);
            if (!ok) continue;
            used[h] = 1;
            image.push_back(h);
            if (self(self, d + 1)) return true;
            image.pop_back();
            used[h] = 0;
        }
        return false;
    };
    if (rec(rec, 0)) return InducedWitness{image};
    return std::nullopt;
}

// Exhaustive scan over all p-subsets of the edge list, in lexicographic
// order, accepting the first pairwise non-touching, non-connected choice.
inline std::optional<InducedWitness> induced_matching_bruteforce(const Graph& g, int p) {
    if (g.n() > 14)
        throw std::invalid_argument("induced_matching_bruteforce: host larger than 14 vertices");
    if (p < 1) throw std::invalid_argument("induced_matching_bruteforce: p must be >= 1");
    EdgeList edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<int> pick;
    auto compatible = [&](int a, int b) {
        auto [u1, v1] = edges[a];
        auto [u2, v2] = edges[b];
        for (int x : {u1, v1})
            for (int y : {u2, v2})
                if (x == y || g.adjacent(x, y)) return false;
        return true;
    };
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(pick.size()) == p) return true;
        for (int idx = start; idx < m; ++idx) {
            bool ok = true;
            for (int prev : pick)
                if (!compatible(prev, idx)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(idx);
            if (self(self, idx + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    VertexList map;
    for (int idx : pick) {
        map.push_back(edges[idx].first);
        map.push_back(edges[idx].second);
    }
    return InducedWitness{map};
}

}  // namespace chibind
