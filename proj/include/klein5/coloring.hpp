#pragma once

// Exact k-coloring (backtracking with saturation-order branching and a
// clique lower bound), criticality checking, and precoloring extension.

#include <cstdint>
#include "klein5/graph.hpp"

namespace klein5 {

// Total or partial assignment of vertices to colors 1..k; 0 = uncolored.
struct Coloring {
    int k = 0;
    std::vector<int> assignment;  // size n, values 0..k

    bool total() const {
        for (int c : assignment)
            if (c == 0) return false;
        return true;
    }

    bool proper_on(const SimpleGraph& g) const {
        if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
        for (int c : assignment)
            if (c < 0 || c > k) return false;
        for (auto [u, v] : g.edges())
            if (assignment[u] != 0 && assignment[u] == assignment[v]) return false;
        return true;
    }
};

namespace detail {

// Greedy clique on highest-degree vertices; a lower bound for pruning.
inline std::vector<int> greedy_clique(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; i++) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    return clique;
}

struct ColorSolver {
    const SimpleGraph& g;
    int k;
    std::vector<int> color;            // 0 = unassigned
    std::vector<uint32_t> neighborColors;  // bitmask of colors seen at v (bit c-1)
    int uncolored;

    ColorSolver(const SimpleGraph& g_, int k_) : g(g_), k(k_) {
        color.assign(g.vertex_count(), 0);
        neighborColors.assign(g.vertex_count(), 0);
        uncolored = g.vertex_count();
    }

    bool assign_seed(const std::vector<int>& pre) {
        for (int v = 0; v < g.vertex_count(); v++) {
            if (pre[v] == 0) continue;
            if (pre[v] < 1 || pre[v] > k) return false;
            color[v] = pre[v];
            uncolored--;
        }
        for (auto [u, v] : g.edges()) {
            if (color[u] && color[v] && color[u] == color[v]) return false;
            if (color[u]) neighborColors[v] |= uint32_t(1) << (color[u] - 1);
            if (color[v]) neighborColors[u] |= uint32_t(1) << (color[v] - 1);
        }
        return true;
    }

    // Branching: maximum saturation, ties by degree then index.
    int pick() const {
        int best = -1, bestSat = -1, bestDeg = -1;
        for (int v = 0; v < g.vertex_count(); v++) {
            if (color[v]) continue;
            int sat = __builtin_popcount(neighborColors[v]);
            int deg = g.degree(v);
            if (sat > bestSat || (sat == bestSat && deg > bestDeg)) {
                best = v;
                bestSat = sat;
                bestDeg = deg;
            }
        }
        return best;
    }

    bool solve() {
        if (uncolored == 0) return true;
        int v = pick();
        uint32_t avail = ~neighborColors[v] & ((uint32_t(1) << k) - 1);
        if (!avail) return false;
        // symmetry break: allow at most one brand-new color
        uint32_t inUse = 0;
        for (int u = 0; u < g.vertex_count(); u++)
            if (color[u]) inUse |= uint32_t(1) << (color[u] - 1);
        bool newTried = false;
        for (int c = 1; c <= k; c++) {
            uint32_t bit = uint32_t(1) << (c - 1);
            if (!(avail & bit)) continue;
            bool isNew = !(inUse & bit);
            if (isNew && newTried) continue;
            if (isNew) newTried = true;
            color[v] = c;
            uncolored--;
            std::vector<int> touched;
            for (int w : g.neighbors(v))
                if (!color[w] && !(neighborColors[w] & bit)) {
                    neighborColors[w] |= bit;
                    touched.push_back(w);
                }
            bool dead = false;
            for (int w : touched)
                if ((~neighborColors[w] & ((uint32_t(1) << k) - 1)) == 0) { dead = true; break; }
            if (!dead && solve()) return true;
            for (int w : touched) neighborColors[w] &= ~bit;
            color[v] = 0;
            uncolored++;
        }
        return false;
    }
};

}  // namespace detail

// Proper total k-coloring iff one exists; deterministic given input.
// Practical for n up to ~30 at k <= 6.
inline std::optional<Coloring> color(const SimpleGraph& g, int k) {
    if (k < 0 || k > 31) throw std::invalid_argument("color: k out of range");
    if (g.vertex_count() == 0) return Coloring{k, {}};
    if (k == 0) return std::nullopt;
    if (static_cast<int>(detail::greedy_clique(g).size()) > k) return std::nullopt;
    detail::ColorSolver s(g, k);
    std::vector<int> empty(g.vertex_count(), 0);
    s.assign_seed(empty);
    if (!s.solve()) return std::nullopt;
    return Coloring{k, s.color};
}

// Total proper extension of a partial proper coloring iff one exists.
inline std::optional<Coloring> extend_precoloring(const SimpleGraph& g, const Coloring& partial) {
    if (!partial.proper_on(g)) throw std::invalid_argument("extend_precoloring: improper partial input");
    detail::ColorSolver s(g, partial.k);
    if (!s.assign_seed(partial.assignment)) return std::nullopt;
    // colors unused so far stay interchangeable under any seed, so the
    // new-color symmetry break in solve() remains valid here
    if (!s.solve()) return std::nullopt;
    return Coloring{partial.k, s.color};
}

// True iff g is not (k-1)-colorable and g minus any single edge is.
// For such g every proper subgraph is (k-1)-colorable: a proper subgraph is
// contained in some g\e, and colorability is hereditary.
inline bool is_k_critical(const SimpleGraph& g, int k) {
    if (color(g, k - 1)) return false;
    for (auto [u, v] : g.edges())
        if (!color(g.without_edge(u, v), k - 1)) return false;
    return true;
}

}  // namespace klein5
