#pragma once

// Simple undirected graphs on vertices 0..n-1, stored as immutable values.
// All operations return fresh graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klein5 {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return {u, v};
}

class SimpleGraph {
  public:
    SimpleGraph() = default;

    // Validates: vertex range, no loops, no parallel edges.
    SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        for (auto& e : edges) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first == e.second) throw std::invalid_argument("self-loop rejected");
            if (e.first < 0 || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("parallel edge rejected");
        edges_ = std::move(edges);
        words_ = (n_ + 63) / 64;
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
            bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        return bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
    }

    // Adjacency row of v as 64-bit words (used by the backtracking engines).
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words() const { return words_; }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; v++) d[v] = degree(v);
        std::sort(d.begin(), d.end(), std::greater<int>());
        return d;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) { seen[w] = 1; cnt++; stack.push_back(w); }
        }
        return cnt == n_;
    }

    SimpleGraph complement() const {
        std::vector<Edge> ce;
        for (int u = 0; u < n_; u++)
            for (int v = u + 1; v < n_; v++)
                if (!has_edge(u, v)) ce.push_back({u, v});
        return SimpleGraph(n_, std::move(ce));
    }

    SimpleGraph with_edge(int u, int v) const {
        auto e = edges_;
        e.push_back(make_edge(u, v));
        return SimpleGraph(n_, std::move(e));
    }

    SimpleGraph without_edge(int u, int v) const {
        auto e = edges_;
        auto it = std::find(e.begin(), e.end(), make_edge(u, v));
        if (it == e.end()) throw std::invalid_argument("edge not present");
        e.erase(it);
        return SimpleGraph(n_, std::move(e));
    }

    // Induced subgraph; vertices renumbered in the order given by keep.
    SimpleGraph induced(const std::vector<int>& keep) const {
        std::vector<int> pos(n_, -1);
        for (size_t i = 0; i < keep.size(); i++) pos[keep[i]] = static_cast<int>(i);
        std::vector<Edge> e;
        for (auto [u, v] : edges_)
            if (pos[u] >= 0 && pos[v] >= 0) e.push_back(make_edge(pos[u], pos[v]));
        return SimpleGraph(static_cast<int>(keep.size()), std::move(e));
    }

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;
};

// --- standard families ---------------------------------------------------

inline SimpleGraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete(n) needs n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) e.push_back({u, v});
    return SimpleGraph(n, std::move(e));
}

inline SimpleGraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle(n) needs n >= 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; v++) e.push_back(make_edge(v, (v + 1) % n));
    return SimpleGraph(n, std::move(e));
}

inline SimpleGraph path(int n) {
    if (n < 1) throw std::invalid_argument("path(n) needs n >= 1");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; v++) e.push_back({v, v + 1});
    return SimpleGraph(n, std::move(e));
}

// K + L: disjoint union plus all edges between the two parts.
// Vertices of g keep their indices, vertices of h are shifted by g.vertex_count().
inline SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> e = g.edges();
    for (auto [u, v] : h.edges()) e.push_back({u + ng, v + ng});
    for (int u = 0; u < ng; u++)
        for (int v = 0; v < nh; v++) e.push_back({u, ng + v});
    return SimpleGraph(ng + nh, std::move(e));
}

// --- vertex identification (the paper's G_{v1v2}) ------------------------
//
// Deletes all edges at v0 except v0v1 and v0v2, contracts those two edges
// into a new vertex z0 and removes parallels.  z0 is adjacent to exactly
// N(v1) u N(v2) - {v0,v1,v2}.  z0 is canonicalized at the smallest freed
// index min(v0,v1,v2); the remaining vertices keep their relative order and
// the whole vertex set is compacted to 0..n-3.
inline SimpleGraph identify_pair(const SimpleGraph& g, int v0, int v1, int v2) {
    if (!g.has_edge(v0, v1) || !g.has_edge(v0, v2))
        throw std::invalid_argument("identify_pair: v1, v2 must be neighbors of v0");
    if (v1 == v2 || g.has_edge(v1, v2))
        throw std::invalid_argument("identify_pair: v1, v2 must be distinct non-adjacent");
    int n = g.vertex_count();
    int z_old = std::min({v0, v1, v2});
    std::vector<int> newid(n, -1);
    int next = 0;
    for (int v = 0; v < n; v++) {
        if (v == z_old) { newid[v] = next++; continue; }  // slot for z0
        if (v == v0 || v == v1 || v == v2) continue;
        newid[v] = next++;
    }
    int z = newid[z_old];
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
        bool iu = (u == v0 || u == v1 || u == v2);
        bool iv = (v == v0 || v == v1 || v == v2);
        if (iu && iv) continue;
        if (!iu && !iv) { e.push_back(make_edge(newid[u], newid[v])); continue; }
        int outside = iu ? v : u;
        int inside = iu ? u : v;
        if (inside == v0) continue;  // edges at v0 other than v0v1, v0v2 are deleted
        e.push_back(make_edge(newid[outside], z));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return SimpleGraph(n - 2, std::move(e));
}

}  // namespace klein5
