#pragma once

// Combinatorial embeddings: rotation systems with edge signatures, face
// tracing, Euler genus, surface predicates, and reconstruction of schemes
// from prescribed face sets.

#include <map>
#include <set>
#include "klein5/graph.hpp"

namespace klein5 {

// Closed facial walk: edges[i] joins vertices[i] to vertices[(i+1) % L].
// Recorded up to rotation and reversal via canonicalize().
struct FacialWalk {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }

    // Lexicographically least among all rotations of both directions.
    void canonicalize() {
        int L = length();
        if (L == 0) return;
        using Step = std::pair<int, int>;
        auto key = [&](const std::vector<int>& vs, const std::vector<int>& es) {
            std::vector<Step> best;
            for (int s = 0; s < L; s++) {
                std::vector<Step> cand(L);
                for (int i = 0; i < L; i++) cand[i] = {vs[(s + i) % L], es[(s + i) % L]};
                if (best.empty() || cand < best) best = cand;
            }
            return best;
        };
        // reversed walk: visit vertices backwards; step i leaves rv[i] via the
        // edge that previously led into it
        std::vector<int> rv(L), re(L);
        for (int i = 0; i < L; i++) {
            rv[i] = vertices[(L - i) % L];
            re[i] = edges[L - 1 - i];
        }
        auto a = key(vertices, edges);
        auto b = key(rv, re);
        const auto& win = std::min(a, b);
        for (int i = 0; i < L; i++) {
            vertices[i] = win[i].first;
            edges[i] = win[i].second;
        }
    }

    bool operator<(const FacialWalk& o) const {
        return std::tie(vertices, edges) < std::tie(o.vertices, o.edges);
    }
    bool operator==(const FacialWalk& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
};

struct EmbeddingScheme {
    SimpleGraph graph;
    std::vector<std::vector<int>> rotation;  // per vertex: cyclic list of edge ids
    std::vector<int> signature;              // per edge: +1 or -1

    const Edge& edge(int e) const { return graph.edges()[e]; }

    int other_end(int e, int v) const {
        auto [a, b] = edge(e);
        return a == v ? b : a;
    }

    // Scheme invariants: rotation at v lists exactly deg(v) edges, each
    // incident edge exactly once; signatures are +-1.  Throws on violation.
    void validate() const {
        int n = graph.vertex_count(), m = graph.edge_count();
        if (static_cast<int>(rotation.size()) != n) throw std::invalid_argument("rotation table size mismatch");
        if (static_cast<int>(signature.size()) != m) throw std::invalid_argument("signature table size mismatch");
        for (int s : signature)
            if (s != 1 && s != -1) throw std::invalid_argument("signature must be +1 or -1");
        for (int v = 0; v < n; v++) {
            if (static_cast<int>(rotation[v].size()) != graph.degree(v))
                throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                            " must list exactly deg(v) edges");
            std::set<int> seen;
            for (int e : rotation[v]) {
                if (e < 0 || e >= m) throw std::invalid_argument("rotation references unknown edge");
                auto [a, b] = edge(e);
                if (a != v && b != v)
                    throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                                " lists non-incident edge " + std::to_string(e));
                if (!seen.insert(e).second)
                    throw std::invalid_argument("edge repeated in rotation at vertex " + std::to_string(v));
            }
        }
    }
};

namespace detail {

inline int rot_step(const std::vector<int>& rot, int e, int dir) {
    int d = static_cast<int>(rot.size());
    for (int i = 0; i < d; i++)
        if (rot[i] == e) return rot[(i + dir + d) % d];
    throw std::logic_error("edge not in rotation");
}

}  // namespace detail

// Face tracing.  State: (w, e, s) = arrived at w along e with flip bit s
// (product of signatures of edges traversed so far, including e).  Next edge
// is the rotation successor of e at w when s = +1, else the predecessor; the
// flip bit is multiplied by the new edge's signature.  Each face is traced by
// exactly two orbits of this state machine (one per direction); the mirror
// orbit is marked visited on the fly.
inline std::vector<FacialWalk> trace_faces(const EmbeddingScheme& s) {
    s.validate();
    int m = s.graph.edge_count();
    // state id: e * 4 + at_second * 2 + (flip < 0)
    auto state_id = [&](int e, int w, int flip) {
        int at_second = (s.edge(e).second == w) ? 1 : 0;
        return e * 4 + at_second * 2 + (flip < 0 ? 1 : 0);
    };
    std::vector<char> visited(static_cast<size_t>(m) * 4, 0);
    std::vector<FacialWalk> faces;
    for (int e0 = 0; e0 < m; e0++) {
        for (int side = 0; side < 2; side++) {
            for (int fl = 0; fl < 2; fl++) {
                int w0 = side ? s.edge(e0).second : s.edge(e0).first;
                int f0 = fl ? -1 : 1;
                if (visited[state_id(e0, w0, f0)]) continue;
                FacialWalk walk;
                int e = e0, w = w0, flip = f0;
                do {
                    visited[state_id(e, w, flip)] = 1;
                    int enext = detail::rot_step(s.rotation[w], e, flip > 0 ? 1 : -1);
                    visited[state_id(enext, w, -flip)] = 1;  // mirror orbit
                    walk.vertices.push_back(w);
                    walk.edges.push_back(enext);
                    flip = flip * s.signature[enext];
                    w = s.other_end(enext, w);
                    e = enext;
                } while (!(e == e0 && w == w0 && flip == f0));
                walk.canonicalize();
                faces.push_back(walk);
            }
        }
    }
    std::sort(faces.begin(), faces.end());
    size_t total = 0;
    for (auto& f : faces) total += f.edges.size();
    if (total != static_cast<size_t>(2) * m)
        throw std::logic_error("face tracing lost an edge side");
    return faces;
}

// Euler genus 2 - V + E - F of a connected scheme.
inline int euler_genus(const EmbeddingScheme& s) {
    if (!s.graph.is_connected()) throw std::invalid_argument("euler_genus: graph must be connected");
    int f = static_cast<int>(trace_faces(s).size());
    return 2 - s.graph.vertex_count() + s.graph.edge_count() - f;
}

inline std::vector<int> face_length_multiset(const EmbeddingScheme& s) {
    std::vector<int> lens;
    for (auto& f : trace_faces(s)) lens.push_back(f.length());
    std::sort(lens.begin(), lens.end());
    return lens;
}

// Every facial walk a triangle with three distinct vertices.
inline bool is_triangulation(const EmbeddingScheme& s) {
    for (auto& f : trace_faces(s)) {
        if (f.length() != 3) return false;
        if (f.vertices[0] == f.vertices[1] || f.vertices[0] == f.vertices[2] ||
            f.vertices[1] == f.vertices[2])
            return false;
    }
    return true;
}

inline bool is_eulerian(const SimpleGraph& g) {
    for (int v = 0; v < g.vertex_count(); v++)
        if (g.degree(v) % 2) return false;
    return true;
}

// Heawood bound floor((7 + sqrt(24*gamma + 1)) / 2), computed in integers.
inline int heawood_number(int gamma) {
    if (gamma < 0) throw std::invalid_argument("heawood_number: gamma must be >= 0");
    long long r = 24LL * gamma + 1;
    long long s = 0;
    while ((s + 1) * (s + 1) <= r) s++;
    return static_cast<int>((7 + s) / 2);
}

// Local reembedding move: reverse the rotation at v and flip the signature
// of every edge incident with v.  Represents the same embedding.
inline EmbeddingScheme flip_vertex(EmbeddingScheme s, int v) {
    std::reverse(s.rotation[v].begin(), s.rotation[v].end());
    for (int e = 0; e < s.graph.edge_count(); e++) {
        auto [a, b] = s.edge(e);
        if (a == v || b == v) s.signature[e] = -s.signature[e];
    }
    return s;
}

// Signature normalization: flip vertices so that every edge of a BFS
// spanning forest gets signature +1.  Equivalent schemes normalize equal
// (up to a global mirror, handled by canonical_key below).
inline EmbeddingScheme normalize(EmbeddingScheme s) {
    int n = s.graph.vertex_count();
    std::map<Edge, int> eid;
    for (int e = 0; e < s.graph.edge_count(); e++) eid[s.edge(e)] = e;
    std::vector<char> seen(n, 0);
    for (int root = 0; root < n; root++) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); qi++) {
            int v = queue[qi];
            for (int w : s.graph.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                if (s.signature[eid[make_edge(v, w)]] < 0) s = flip_vertex(std::move(s), w);
                queue.push_back(w);
            }
        }
    }
    return s;
}

// After normalization, a connected scheme is orientable iff no signature
// stayed negative.
inline bool is_orientable(const EmbeddingScheme& s) {
    EmbeddingScheme t = normalize(s);
    for (int sig : t.signature)
        if (sig < 0) return false;
    return true;
}

// Canonical key for equality tests: normalized signatures, rotations rotated
// to start at the least edge id, minimized against the global mirror image.
inline std::string canonical_key(const EmbeddingScheme& s) {
    auto render = [](const EmbeddingScheme& t) {
        std::string out;
        for (auto& rot : t.rotation) {
            auto r = rot;
            if (!r.empty()) {
                auto it = std::min_element(r.begin(), r.end());
                std::rotate(r.begin(), it, r.end());
            }
            for (int e : r) out += std::to_string(e) + ",";
            out += ";";
        }
        out += "|";
        for (int sig : t.signature) out += (sig > 0 ? '+' : '-');
        return out;
    };
    EmbeddingScheme a = normalize(s);
    EmbeddingScheme b = a;
    for (int v = 0; v < b.graph.vertex_count(); v++) std::reverse(b.rotation[v].begin(), b.rotation[v].end());
    return std::min(render(a), render(b));
}

// --- scheme reconstruction from a face set --------------------------------
//
// Given closed walks covering each edge side exactly once, rebuild a
// rotation-signature scheme tracing exactly those walks.  The corners of the
// walks at each vertex must chain into a single cycle (the rotation, up to
// direction); directions and signatures are then a linear system over GF(2).
inline std::optional<EmbeddingScheme> scheme_from_faces(const SimpleGraph& g,
                                                        const std::vector<FacialWalk>& faces) {
    int n = g.vertex_count(), m = g.edge_count();
    {
        std::vector<int> sides(m, 0);
        for (auto& f : faces)
            for (int e : f.edges) {
                if (e < 0 || e >= m) return std::nullopt;
                sides[e]++;
            }
        for (int e = 0; e < m; e++)
            if (sides[e] != 2) return std::nullopt;
    }

    // corners per vertex: (incoming edge, outgoing edge) of each face visit
    std::vector<std::vector<std::pair<int, int>>> corners(n);
    for (auto& f : faces) {
        int L = f.length();
        for (int i = 0; i < L; i++) {
            int w = f.vertices[i];
            int ein = f.edges[(i + L - 1) % L];
            int eout = f.edges[i];
            corners[w].push_back({ein, eout});
        }
    }

    // chain corners into one rotation cycle per vertex
    std::vector<std::vector<int>> rho(n);
    for (int v = 0; v < n; v++) {
        int d = g.degree(v);
        if (static_cast<int>(corners[v].size()) != d) return std::nullopt;
        if (d == 0) continue;
        std::map<int, std::vector<int>> link;  // incident edge -> corner partners
        for (auto [a, b] : corners[v]) {
            link[a].push_back(b);
            link[b].push_back(a);
        }
        for (auto& [e, ps] : link)
            if (static_cast<int>(ps.size()) != 2) return std::nullopt;
        std::vector<int> cyc{link.begin()->first};
        std::set<int> used{cyc[0]};
        int prev = -1;
        while (static_cast<int>(cyc.size()) < d) {
            auto& ps = link[cyc.back()];
            int nxt = (ps[0] == prev) ? ps[1] : ps[0];
            if (used.count(nxt)) return std::nullopt;  // corner graph splits into several cycles
            prev = cyc.back();
            used.insert(nxt);
            cyc.push_back(nxt);
        }
        // closing corner must exist
        auto& ps = link[cyc.back()];
        if (ps[0] != cyc.front() && ps[1] != cyc.front()) return std::nullopt;
        rho[v] = cyc;
    }

    // GF(2) unknowns: d_v (rotation direction), l_e (signature), t_f (initial
    // flip per face).  Walk position i of face f arrives at vertices[i] with
    // flip t_f + sum of l over edges[0..i-1]; the corner there fixes
    // succ-vs-pred, giving one equation per edge side.
    int vars = n + m + static_cast<int>(faces.size());
    std::vector<std::vector<uint64_t>> rows;
    int words = (vars + 1 + 63) / 64;
    auto succ_of = [&](int v, int e) { return detail::rot_step(rho[v], e, 1); };
    auto pred_of = [&](int v, int e) { return detail::rot_step(rho[v], e, -1); };
    for (size_t fi = 0; fi < faces.size(); fi++) {
        auto& f = faces[fi];
        int L = f.length();
        std::vector<uint64_t> prefix(words, 0);  // sum of l(edges[0..i-1])
        for (int i = 0; i < L; i++) {
            int w = f.vertices[i];
            int ein = f.edges[(i + L - 1) % L];
            int eout = f.edges[i];
            int b;
            if (succ_of(w, ein) == eout && pred_of(w, ein) == eout)
                b = -1;  // degree <= 2 at w: both directions agree, no constraint
            else if (succ_of(w, ein) == eout)
                b = 0;
            else if (pred_of(w, ein) == eout)
                b = 1;
            else
                return std::nullopt;
            if (b >= 0) {
                std::vector<uint64_t> row = prefix;
                auto set = [&](int idx) { row[idx / 64] ^= uint64_t(1) << (idx % 64); };
                set(w);                                    // d_w
                set(n + m + static_cast<int>(fi));         // t_f
                if (b) row[vars / 64] ^= uint64_t(1) << (vars % 64);  // rhs bit
                rows.push_back(row);
            }
            prefix[(n + eout) / 64] ^= uint64_t(1) << ((n + eout) % 64);
        }
        // orbit closure: the signature product around the face boundary is +1
        rows.push_back(prefix);
    }

    // Gaussian elimination
    std::vector<int> where(vars, -1);
    int rank = 0;
    for (int col = 0; col < vars && rank < static_cast<int>(rows.size()); col++) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); r++)
            if (rows[r][col / 64] >> (col % 64) & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); r++)
            if (r != rank && (rows[r][col / 64] >> (col % 64) & 1))
                for (int w = 0; w < words; w++) rows[r][w] ^= rows[rank][w];
        where[col] = rank++;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); r++)
        if (rows[r][vars / 64] >> (vars % 64) & 1) return std::nullopt;  // inconsistent

    std::vector<int> sol(vars, 0);
    for (int col = 0; col < vars; col++)
        if (where[col] >= 0) sol[col] = rows[where[col]][vars / 64] >> (vars % 64) & 1;

    EmbeddingScheme s;
    s.graph = g;
    s.rotation = rho;
    for (int v = 0; v < n; v++)
        if (sol[v]) std::reverse(s.rotation[v].begin(), s.rotation[v].end());
    s.signature.assign(m, 1);
    for (int e = 0; e < m; e++)
        if (sol[n + e]) s.signature[e] = -1;

    // confirm by retracing
    auto want = faces;
    for (auto& f : want) f.canonicalize();
    std::sort(want.begin(), want.end());
    auto got = trace_faces(s);
    if (got != want) return std::nullopt;
    return s;
}

// --- face-profile search ---------------------------------------------------

// All simple cycles of the given length, as facial walks (each cycle once:
// least vertex first, orientation fixed by second < last).
inline std::vector<FacialWalk> simple_cycles_of_length(const SimpleGraph& g, int len) {
    if (len < 3) throw std::invalid_argument("cycles have length >= 3");
    std::vector<FacialWalk> out;
    std::map<Edge, int> eid;
    for (int e = 0; e < g.edge_count(); e++) eid[g.edges()[e]] = e;
    int n = g.vertex_count();
    std::vector<int> pathv;
    std::vector<char> inpath(n, 0);
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (static_cast<int>(pathv.size()) == len) {
            if (g.has_edge(v, start) && pathv[1] < pathv.back()) {
                FacialWalk f;
                f.vertices = pathv;
                for (int i = 0; i < len; i++)
                    f.edges.push_back(eid[make_edge(pathv[i], pathv[(i + 1) % len])]);
                f.canonicalize();
                out.push_back(f);
            }
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w <= start || inpath[w]) continue;
            inpath[w] = 1;
            pathv.push_back(w);
            dfs(start, w);
            pathv.pop_back();
            inpath[w] = 0;
        }
    };
    for (int v = 0; v < n; v++) {
        pathv = {v};
        std::fill(inpath.begin(), inpath.end(), 0);
        inpath[v] = 1;
        dfs(v, v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

enum class Orientability { any, orientable, nonorientable };

// Search for a scheme whose faces are exactly `required` plus simple cycles
// realizing `extra_lengths` (a multiset), every edge on exactly two faces.
// Returns the first scheme found (deterministic).
inline std::optional<EmbeddingScheme> find_scheme_with_faces(
    const SimpleGraph& g, const std::vector<FacialWalk>& required,
    std::vector<int> extra_lengths, Orientability want = Orientability::any) {
    int m = g.edge_count();
    std::sort(extra_lengths.begin(), extra_lengths.end());
    std::map<int, std::vector<FacialWalk>> pool;
    for (int len : extra_lengths)
        if (!pool.count(len)) pool[len] = simple_cycles_of_length(g, len);

    std::vector<int> cover(m, 0);
    for (auto& f : required)
        for (int e : f.edges) cover[e]++;
    for (int e = 0; e < m; e++)
        if (cover[e] > 2) return std::nullopt;

    std::vector<FacialWalk> chosen = required;
    std::optional<EmbeddingScheme> result;

    // count remaining faces by length
    std::map<int, int> need;
    for (int len : extra_lengths) need[len]++;

    std::function<bool()> search = [&]() -> bool {
        int target = -1;
        for (int e = 0; e < m; e++)
            if (cover[e] < 2) { target = e; break; }
        if (target < 0) {
            bool done = true;
            for (auto& [len, cnt] : need)
                if (cnt) done = false;
            if (!done) return false;
            if (auto s = scheme_from_faces(g, chosen)) {
                if (want == Orientability::orientable && !is_orientable(*s)) return false;
                if (want == Orientability::nonorientable && is_orientable(*s)) return false;
                result = s;
                return true;
            }
            return false;
        }
        for (auto& [len, cnt] : need) {
            if (!cnt) continue;
            for (auto& f : pool[len]) {
                bool uses = false, fits = true;
                std::vector<int> delta(m, 0);
                for (int e : f.edges) {
                    delta[e]++;
                    if (e == target) uses = true;
                }
                if (!uses) continue;
                for (int e = 0; e < m && fits; e++)
                    if (cover[e] + delta[e] > 2) fits = false;
                if (!fits) continue;
                for (int e = 0; e < m; e++) cover[e] += delta[e];
                chosen.push_back(f);
                cnt--;
                if (search()) return true;
                cnt++;
                chosen.pop_back();
                for (int e = 0; e < m; e++) cover[e] -= delta[e];
            }
        }
        return false;
    };
    search();
    return result;
}

// Genus-0 scheme of a 2-connected graph with the given faces forced, if one
// exists.  Faces of a 2-connected plane graph are simple cycles, so an exact
// cover by cycles hitting the Euler face count is sound and complete.
inline std::optional<EmbeddingScheme> find_planar_scheme(const SimpleGraph& g,
                                                         const std::vector<FacialWalk>& required) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n == 0) return std::nullopt;
    int target_faces = 2 - n + m;
    if (target_faces < static_cast<int>(required.size())) return std::nullopt;
    std::vector<FacialWalk> pool;
    for (int len = 3; len <= n; len++)
        for (auto& c : simple_cycles_of_length(g, len)) pool.push_back(c);

    std::vector<int> cover(m, 0);
    for (auto& f : required)
        for (int e : f.edges) cover[e]++;
    for (int e = 0; e < m; e++)
        if (cover[e] > 2) return std::nullopt;

    std::vector<FacialWalk> chosen = required;
    std::optional<EmbeddingScheme> result;
    std::function<bool()> search = [&]() -> bool {
        int target = -1;
        for (int e = 0; e < m; e++)
            if (cover[e] < 2) { target = e; break; }
        if (target < 0) {
            if (static_cast<int>(chosen.size()) != target_faces) return false;
            if (auto s = scheme_from_faces(g, chosen)) {
                result = s;
                return true;
            }
            return false;
        }
        if (static_cast<int>(chosen.size()) >= target_faces) return false;
        for (auto& f : pool) {
            bool uses = false, fits = true;
            for (int e : f.edges)
                if (e == target) uses = true;
            if (!uses) continue;
            for (int e : f.edges)
                if (cover[e] + 1 > 2) { fits = false; break; }
            if (!fits) continue;
            for (int e : f.edges) cover[e]++;
            chosen.push_back(f);
            if (search()) return true;
            chosen.pop_back();
            for (int e : f.edges) cover[e]--;
        }
        return false;
    };
    search();
    return result;
}

}  // namespace klein5
