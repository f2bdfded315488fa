#pragma once

// Induced-subgraph search and family membership.
//
// contains_induced runs a backtracking embedder: pattern vertices are
// ordered anchor-first (highest degree, then most already-placed neighbors),
// host candidates are pruned by degree and by bitwise intersection of the
// placed neighborhoods, and candidates are tried in ascending host order, so
// the first witness found is deterministic.

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace chibind {

// map[i] = host vertex playing pattern vertex i.
struct InducedWitness {
    VertexList map;
};

inline bool validate_witness(const Graph& host, const Graph& pattern, const InducedWitness& w) {
    if (static_cast<int>(w.map.size()) != pattern.n()) return false;
    for (int i = 0; i < pattern.n(); ++i) {
        if (w.map[i] < 0 || w.map[i] >= host.n()) return false;
        for (int j = i + 1; j < pattern.n(); ++j) {
            if (w.map[i] == w.map[j]) return false;
            if (pattern.adjacent(i, j) != host.adjacent(w.map[i], w.map[j])) return false;
        }
    }
    return true;
}

namespace detail {

inline VertexList pattern_order(const Graph& p) {
    int n = p.n();
    VertexList order;
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_nb = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int nb = 0;
            for (int u : order)
                if (p.adjacent(u, v)) ++nb;
            int deg = p.degree(v);
            if (nb > best_nb || (nb == best_nb && deg > best_deg)) {
                best = v;
                best_nb = nb;
                best_deg = deg;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

inline bool embed(const Graph& host, const Graph& pat, const VertexList& order,
                  const std::vector<Bitset>& host_non, int depth, VertexList& image,
                  std::vector<char>& used, VertexList& out) {
    if (depth == static_cast<int>(order.size())) {
        out.assign(pat.n(), -1);
        for (int d = 0; d < pat.n(); ++d) out[order[d]] = image[d];
        return true;
    }
    int q = order[depth];
    Bitset cand(host.n());
    cand.set_all();
    for (int d = 0; d < depth; ++d) {
        int placed_pat = order[d];
        cand &= pat.adjacent(q, placed_pat) ? host.row(image[d]) : host_non[image[d]];
    }
    int need_deg = pat.degree(q);
    for (int h = cand.next(0); h >= 0; h = cand.next(h + 1)) {
        if (used[h] || host.degree(h) < need_deg) continue;
        used[h] = 1;
        image.push_back(h);
        if (embed(host, pat, order, host_non, depth + 1, image, used, out)) return true;
        image.pop_back();
        used[h] = 0;
    }
    return false;
}

}  // namespace detail

// First witness in the deterministic search order, or nullopt.  Patterns are
// capped at 10 vertices; use has_induced_matching for pK2 questions.
inline std::optional<InducedWitness> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n() > 10)
        throw std::invalid_argument("contains_induced: pattern larger than 10 vertices");
    if (pattern.n() == 0) return InducedWitness{{}};
    if (pattern.n() > host.n()) return std::nullopt;
    VertexList order = detail::pattern_order(pattern);
    std::vector<Bitset> host_non(host.n());
    for (int v = 0; v < host.n(); ++v) {
        Bitset b = host.row(v);
        b.flip_all();
        b.reset(v);
        host_non[v] = std::move(b);
    }
    VertexList image, out;
    std::vector<char> used(host.n(), 0);
    if (detail::embed(host, pattern, order, host_non, 0, image, used, out))
        return InducedWitness{out};
    return std::nullopt;
}

// Searches for p pairwise non-touching edges (an induced pK2).  Edges are
// scanned in lexicographic order and chosen strictly increasing, so the
// witness is the lexicographically least edge sequence.  The witness maps
// matching_graph(p): vertex 2i -> smaller endpoint of the i-th chosen edge.
inline std::optional<InducedWitness> has_induced_matching(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("has_induced_matching: p must be >= 1");
    EdgeList edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<Bitset> closed(g.n());
    for (int v = 0; v < g.n(); ++v) {
        closed[v] = g.row(v);
        closed[v].set(v);
    }
    VertexList chosen;
    Bitset forbidden(g.n());
    std::optional<InducedWitness> found;
    auto rec = [&](auto&& self, int start, int picked) -> bool {
        if (picked == p) {
            found = InducedWitness{chosen};
            return true;
        }
        for (int idx = start; idx <= m - (p - picked); ++idx) {
            auto [u, v] = edges[idx];
            if (forbidden.test(u) || forbidden.test(v)) continue;
            Bitset saved = forbidden;
            forbidden |= closed[u];
            forbidden |= closed[v];
            chosen.push_back(u);
            chosen.push_back(v);
            if (self(self, idx + 1, picked + 1)) return true;
            chosen.pop_back();
            chosen.pop_back();
            forbidden = std::move(saved);
        }
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

// ---- families ----

enum class Family {
    gem,
    diamond,
    k2p4,
    hvn,
    k5e,
    butterfly,
    gemplus,
    dart,
    k1c4,
    c4,
    house,
    none,  // no companion: only the induced-matching bound applies
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::gem: return "gem";
        case Family::diamond: return "diamond";
        case Family::k2p4: return "k2p4";
        case Family::hvn: return "hvn";
        case Family::k5e: return "k5e";
        case Family::butterfly: return "butterfly";
        case Family::gemplus: return "gemplus";
        case Family::dart: return "dart";
        case Family::k1c4: return "k1c4";
        case Family::c4: return "c4";
        case Family::house: return "house";
        case Family::none: return "none";
    }
    return "?";
}

inline Family parse_family(const std::string& tok) {
    for (Family f : {Family::gem, Family::diamond, Family::k2p4, Family::hvn, Family::k5e,
                     Family::butterfly, Family::gemplus, Family::dart, Family::k1c4, Family::c4,
                     Family::house, Family::none})
        if (tok == family_name(f)) return f;
    throw std::invalid_argument("unknown family: " + tok);
}

inline Graph companion_graph(Family f) {
    switch (f) {
        case Family::gem: return gem_graph();
        case Family::diamond: return diamond_graph();
        case Family::k2p4: return k2_p4_graph();
        case Family::hvn: return hvn_graph();
        case Family::k5e: return k5_minus_e_graph();
        case Family::butterfly: return butterfly_graph();
        case Family::gemplus: return gem_plus_graph();
        case Family::dart: return dart_graph();
        case Family::k1c4: return k1_c4_graph();
        case Family::c4: return cycle_graph(4);
        case Family::house: return house_graph();
        case Family::none: throw std::invalid_argument("family 'none' has no companion graph");
    }
    throw std::invalid_argument("bad family");
}

// {pK2, companion}-free graph class.
struct FamilySpec {
    Family companion = Family::none;
    int p = 2;
};

struct MembershipResult {
    bool member = true;
    // When not a member: the offending structure.  witness_is_matching tells
    // whether it maps matching_graph(p) or the companion graph.
    std::optional<InducedWitness> witness;
    bool witness_is_matching = false;
};

// Checks the induced matching first, then the companion.
inline MembershipResult is_in_family(const Graph& g, const FamilySpec& fam) {
    if (fam.p < 1) throw std::invalid_argument("is_in_family: p must be >= 1");
    if (auto w = has_induced_matching(g, fam.p)) return {false, w, true};
    if (fam.companion != Family::none)
        if (auto w = contains_induced(g, companion_graph(fam.companion))) return {false, w, false};
    return {};
}

}  // namespace chibind
