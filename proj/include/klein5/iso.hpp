#pragma once

// Isomorphism and subgraph-isomorphism engines, join decomposition, and the
// topological-K6 detector.

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include "klein5/graph.hpp"

namespace klein5 {

// Injective map from pattern vertices to host vertices; every pattern edge
// maps to a host edge.
struct VertexMapping {
    std::vector<int> image;  // image[p] = host vertex of pattern vertex p

    bool validates(const SimpleGraph& pattern, const SimpleGraph& host) const {
        if (static_cast<int>(image.size()) != pattern.vertex_count()) return false;
        std::vector<char> used(host.vertex_count(), 0);
        for (int w : image) {
            if (w < 0 || w >= host.vertex_count() || used[w]) return false;
            used[w] = 1;
        }
        for (auto [u, v] : pattern.edges())
            if (!host.has_edge(image[u], image[v])) return false;
        return true;
    }
};

namespace detail {

// Iterative degree/neighbor-degree refinement; stable vertex invariant used
// to prune both engines.
inline std::vector<uint64_t> refine_labels(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<uint64_t> lab(n);
    for (int v = 0; v < n; v++) lab[v] = g.degree(v);
    for (int round = 0; round < 4; round++) {
        std::vector<uint64_t> nxt(n);
        for (int v = 0; v < n; v++) {
            uint64_t h = lab[v] * 0x9e3779b97f4a7c15ULL;
            std::vector<uint64_t> ns;
            for (int w : g.neighbors(v)) ns.push_back(lab[w]);
            std::sort(ns.begin(), ns.end());
            for (uint64_t x : ns) h = (h ^ x) * 0x100000001b3ULL;
            nxt[v] = h;
        }
        lab = std::move(nxt);
    }
    return lab;
}

inline bool iso_extend(const SimpleGraph& g, const SimpleGraph& h,
                       const std::vector<uint64_t>& lg, const std::vector<uint64_t>& lh,
                       std::vector<int>& map, std::vector<char>& used, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; w++) {
        if (used[w] || lg[v] != lh[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; u++)
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (iso_extend(g, h, lg, lh, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace detail

// Exact for n <= 16 (larger inputs rejected; not needed by this project).
inline bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.vertex_count() > 16 || h.vertex_count() > 16)
        throw std::invalid_argument("is_isomorphic: supported only for n <= 16");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    auto lg = detail::refine_labels(g), lh = detail::refine_labels(h);
    {
        auto a = lg, b = lh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::vector<int> map(g.vertex_count(), -1);
    std::vector<char> used(g.vertex_count(), 0);
    return detail::iso_extend(g, h, lg, lh, map, used, 0);
}

namespace detail {

// Backtracking subgraph matcher (not necessarily induced).  Pattern vertices
// are processed in a connectivity-aware static order, candidates pruned by
// degree and by adjacency to already-mapped vertices.
struct SubIso {
    const SimpleGraph& p;
    const SimpleGraph& h;
    std::vector<int> order;       // pattern vertices in match order
    std::vector<int> map;         // pattern -> host or -1
    std::vector<char> used;       // host vertex used
    std::function<bool(const VertexMapping&)> emit;  // return true to stop

    SubIso(const SimpleGraph& pattern, const SimpleGraph& host)
        : p(pattern), h(host), map(pattern.vertex_count(), -1), used(host.vertex_count(), 0) {
        // order: highest degree first, then prefer vertices adjacent to those
        // already placed so partial maps stay connected
        int n = p.vertex_count();
        std::vector<char> placed(n, 0);
        for (int i = 0; i < n; i++) {
            int best = -1, bestScore = -1;
            for (int v = 0; v < n; v++) {
                if (placed[v]) continue;
                int adjPlaced = 0;
                for (int w : p.neighbors(v)) adjPlaced += placed[w];
                int score = adjPlaced * 64 + p.degree(v);
                if (score > bestScore) { bestScore = score; best = v; }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool feasible(int v, int w) const {
        if (p.degree(v) > h.degree(w)) return false;
        for (int u : p.neighbors(v)) {
            if (map[u] >= 0 && !h.has_edge(map[u], w)) return false;
        }
        return true;
    }

    bool run(size_t idx) {
        if (idx == order.size()) {
            VertexMapping m{map};
            return emit(m);
        }
        int v = order[idx];
        for (int w = 0; w < h.vertex_count(); w++) {
            if (used[w] || !feasible(v, w)) continue;
            map[v] = w;
            used[w] = 1;
            if (run(idx + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    }
};

}  // namespace detail

// All automorphisms of g (identity included).  Patterns here have <= 11
// vertices, so the plain enumeration is fine.  An edge-preserving bijection
// of a finite graph to itself preserves non-edges too, so the subgraph
// matcher run against g itself yields exactly Aut(g).
inline std::vector<std::vector<int>> automorphisms(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    detail::SubIso s(g, g);
    s.emit = [&](const VertexMapping& m) {
        out.push_back(m.image);
        return false;
    };
    s.run(0);
    return out;
}

// Witness mapping iff host has a (not necessarily induced) subgraph
// isomorphic to pattern.  Deterministic for fixed input.
inline std::optional<VertexMapping> subgraph_isomorphism(const SimpleGraph& pattern,
                                                         const SimpleGraph& host) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;
    // identical labeled graphs match by the identity
    if (pattern.vertex_count() == host.vertex_count() && pattern.edges() == host.edges()) {
        VertexMapping id;
        id.image.resize(pattern.vertex_count());
        std::iota(id.image.begin(), id.image.end(), 0);
        return id;
    }
    std::optional<VertexMapping> found;
    detail::SubIso s(pattern, host);
    s.emit = [&](const VertexMapping& m) {
        found = m;
        return true;
    };
    s.run(0);
    return found;
}

// Enumerate embeddings of pattern into host, one representative per orbit of
// the pattern's automorphism group (precomputed to avoid duplicate
// witnesses).  Callback returns true to stop early.
inline void for_each_subgraph_embedding(const SimpleGraph& pattern, const SimpleGraph& host,
                                        const std::function<bool(const VertexMapping&)>& fn) {
    auto auts = automorphisms(pattern);
    detail::SubIso s(pattern, host);
    s.emit = [&](const VertexMapping& m) {
        for (auto& a : auts) {
            // keep m only if it is lexicographically minimal in its orbit
            std::vector<int> other(m.image.size());
            for (size_t v = 0; v < m.image.size(); v++) other[v] = m.image[a[v]];
            if (other < m.image) return false;
        }
        return fn(m);
    };
    s.run(0);
}

// g = A + B with both parts nonempty iff the complement of g is disconnected.
// A is the complement component containing vertex 0, B the rest; both are
// induced subgraphs with vertices renumbered in ascending original order.
inline std::optional<std::pair<SimpleGraph, SimpleGraph>> join_decomposition(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n < 2) return std::nullopt;
    SimpleGraph c = g.complement();
    std::vector<char> side(n, 0);
    std::vector<int> stack{0};
    side[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : c.neighbors(v))
            if (!side[w]) { side[w] = 1; stack.push_back(w); }
    }
    std::vector<int> a, b;
    for (int v = 0; v < n; v++) (side[v] ? a : b).push_back(v);
    if (b.empty()) return std::nullopt;
    return std::make_pair(g.induced(a), g.induced(b));
}

// --- topological K6 ------------------------------------------------------

struct SubdivisionWitness {
    std::array<int, 6> branch;                 // branch vertices
    std::vector<std::vector<int>> paths;       // 15 internally disjoint paths
};

namespace detail {

// Pack internally disjoint paths between all 15 branch pairs by DFS.
struct K6Packer {
    const SimpleGraph& g;
    std::array<int, 6> branch;
    std::vector<char> used;  // vertices consumed as path interiors or branch vertices
    std::vector<std::vector<int>> paths;

    explicit K6Packer(const SimpleGraph& g_) : g(g_), used(g_.vertex_count(), 0) {}

    bool connect(int pi, int target, int v, std::vector<int>& cur) {
        if (v == target && cur.size() >= 2) return next_pair(pi + 1);
        for (int w : g.neighbors(v)) {
            if (w == target) {
                cur.push_back(w);
                paths.push_back(cur);
                if (next_pair(pi + 1)) return true;
                paths.pop_back();
                cur.pop_back();
                continue;
            }
            if (used[w]) continue;
            used[w] = 1;
            cur.push_back(w);
            if (connect(pi, target, w, cur)) return true;
            cur.pop_back();
            used[w] = 0;
        }
        return false;
    }

    bool next_pair(int pi) {
        static const int I[15] = {0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 3, 3, 4};
        static const int J[15] = {1, 2, 3, 4, 5, 2, 3, 4, 5, 3, 4, 5, 4, 5, 5};
        if (pi == 15) return true;
        int a = branch[I[pi]], b = branch[J[pi]];
        std::vector<int> cur{a};
        return connect(pi, b, a, cur);
    }
};

}  // namespace detail

// Witness iff g contains a subdivision of K6 (branch vertices of degree >= 5
// in the witness, paths internally disjoint).
inline std::optional<SubdivisionWitness> contains_k6_subdivision(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; v++)
        if (g.degree(v) >= 5) cand.push_back(v);
    if (static_cast<int>(cand.size()) < 6) return std::nullopt;
    std::array<int, 6> pick{};
    std::function<std::optional<SubdivisionWitness>(int, int)> rec =
        [&](int idx, int from) -> std::optional<SubdivisionWitness> {
        if (idx == 6) {
            detail::K6Packer packer(g);
            packer.branch = pick;
            for (int b : pick) packer.used[b] = 1;
            if (packer.next_pair(0)) {
                SubdivisionWitness w;
                w.branch = pick;
                w.paths = packer.paths;
                return w;
            }
            return std::nullopt;
        }
        for (size_t i = from; i < cand.size(); i++) {
            pick[idx] = cand[i];
            if (auto w = rec(idx + 1, static_cast<int>(i) + 1)) return w;
        }
        return std::nullopt;
    };
    return rec(0, 0);
}

}  // namespace klein5
