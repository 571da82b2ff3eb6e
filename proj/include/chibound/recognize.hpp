#pragma once

// Induced-substructure detection: induced paths, holes with parity or length
// constraints, chordality with elimination orders, simplicial machinery,
// bad P7 walks, and induced-sequence checking. Searches are exact DFS over
// partial induced paths with bitset pruning; ties always break toward the
// lowest vertex index so witnesses are reproducible.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

struct InducedPathWitness {
    std::vector<int> vertices;
};

struct HoleWitness {
    std::vector<int> vertices; // cyclic order
};

enum class HoleParity { any, even, odd };

inline bool is_induced_path(const Graph& g, const std::vector<int>& vs) {
    int k = int(vs.size());
    VertexSet seen(g.n());
    for (int v : vs) {
        if (v < 0 || v >= g.n() || seen.test(v)) return false;
        seen.set(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(vs[i], vs[j]) != (j == i + 1)) return false;
    return true;
}

inline bool is_hole(const Graph& g, const std::vector<int>& vs) {
    int k = int(vs.size());
    if (k < 4) return false;
    VertexSet seen(g.n());
    for (int v : vs) {
        if (v < 0 || v >= g.n() || seen.test(v)) return false;
        seen.set(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(vs[i], vs[j]) != consecutive) return false;
        }
    return true;
}

namespace detail {

// DFS extension of an induced path. `blocked` holds every vertex adjacent to
// an interior vertex (all but the last) plus the path itself, so candidates
// are exactly N(last) minus blocked.
inline bool extend_induced_path(const Graph& g, std::vector<int>& path,
                                VertexSet& blocked, int k) {
    if (int(path.size()) == k) return true;
    int last = path.back();
    VertexSet cands = g.neighbors(last) - blocked;
    for (int u = cands.first(); u != -1; u = cands.next(u)) {
        path.push_back(u);
        VertexSet saved = blocked;
        blocked |= g.neighbors(last);
        blocked.set(u);
        if (extend_induced_path(g, path, blocked, k)) return true;
        blocked = saved;
        path.pop_back();
    }
    return false;
}

} // namespace detail

inline std::optional<InducedPathWitness> find_induced_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_induced_path: k must be positive");
    if (k > g.n()) return std::nullopt;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> path{s};
        VertexSet blocked = VertexSet::single(g.n(), s);
        if (detail::extend_induced_path(g, path, blocked, k))
            return InducedPathWitness{path};
    }
    return std::nullopt;
}

namespace detail {

// Find an induced cycle of exact length len whose minimum vertex is s.
// Positions 1..len-1 hold vertices > s; interior vertices must avoid N(s),
// and the final vertex must lie in N(s).
inline bool hole_dfs(const Graph& g, int s, std::vector<int>& path,
                     VertexSet& blocked, int len) {
    int have = int(path.size());
    int last = path.back();
    VertexSet cands = g.neighbors(last) - blocked;
    if (have == len - 1) {
        cands &= g.neighbors(s);
        int u = cands.first();
        if (u == -1) return false;
        path.push_back(u);
        return true;
    }
    cands -= g.neighbors(s);
    for (int u = cands.first(); u != -1; u = cands.next(u)) {
        path.push_back(u);
        VertexSet saved = blocked;
        blocked |= g.neighbors(last);
        blocked.set(u);
        if (hole_dfs(g, s, path, blocked, len)) return true;
        blocked = saved;
        path.pop_back();
    }
    return false;
}

inline std::optional<std::vector<int>> find_hole_of_length(const Graph& g, int len) {
    if (len > g.n()) return std::nullopt;
    for (int s = 0; s < g.n(); ++s) {
        VertexSet below(g.n());
        for (int v = 0; v <= s; ++v) below.set(v);
        VertexSet nbrs = g.neighbors(s) - below;
        for (int second = nbrs.first(); second != -1; second = nbrs.next(second)) {
            std::vector<int> path{s, second};
            // N(s) is not blocked here: interior levels subtract it and the
            // closing level intersects with it inside hole_dfs.
            VertexSet blocked = below;
            blocked.set(second);
            if (hole_dfs(g, s, path, blocked, len)) return path;
        }
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<HoleWitness> find_hole(const Graph& g, HoleParity parity,
                                            int exact_length = 0) {
    if (exact_length) {
        if (exact_length < 4) throw std::invalid_argument("find_hole: length < 4");
        bool even = exact_length % 2 == 0;
        if ((parity == HoleParity::even && !even) || (parity == HoleParity::odd && even))
            return std::nullopt;
        auto h = detail::find_hole_of_length(g, exact_length);
        if (h) return HoleWitness{*h};
        return std::nullopt;
    }
    int start = 4;
    if (parity == HoleParity::odd) start = 5;
    int step = parity == HoleParity::any ? 1 : 2;
    for (int len = start; len <= g.n(); len += step) {
        auto h = detail::find_hole_of_length(g, len);
        if (h) return HoleWitness{*h};
    }
    return std::nullopt;
}

// All induced cycles of the given exact length, one witness per vertex set.
// Canonical orientation: starts at its minimum vertex, second < last.
inline std::vector<HoleWitness> all_induced_holes(const Graph& g, int len) {
    if (len < 4) throw std::invalid_argument("all_induced_holes: length < 4");
    std::vector<HoleWitness> out;
    if (len > g.n()) return out;
    std::vector<int> path;
    VertexSet blocked(g.n());

    auto dfs = [&](auto&& self, int s) -> void {
        int have = int(path.size());
        int last = path.back();
        VertexSet cands = g.neighbors(last) - blocked;
        if (have == len - 1) {
            cands &= g.neighbors(s);
            for (int u = cands.first(); u != -1; u = cands.next(u)) {
                if (u < path[1]) continue; // canonical: second < last
                path.push_back(u);
                out.push_back(HoleWitness{path});
                path.pop_back();
            }
            return;
        }
        cands -= g.neighbors(s);
        for (int u = cands.first(); u != -1; u = cands.next(u)) {
            path.push_back(u);
            VertexSet saved = blocked;
            blocked |= g.neighbors(last);
            blocked.set(u);
            self(self, s);
            blocked = saved;
            path.pop_back();
        }
    };

    for (int s = 0; s < g.n(); ++s) {
        VertexSet below(g.n());
        for (int v = 0; v <= s; ++v) below.set(v);
        VertexSet nbrs = g.neighbors(s) - below;
        for (int second = nbrs.first(); second != -1; second = nbrs.next(second)) {
            path = {s, second};
            blocked = below;
            blocked.set(second);
            dfs(dfs, s);
        }
    }
    return out;
}

// Membership report for the graph class the toolkit targets. A violated flag
// carries a witness substructure.
struct ClassReport {
    bool p7_free = true;
    bool c4_free = true;
    bool c6_free = true;
    bool c7_free = true;
    bool even_hole_free = true;
    std::optional<InducedPathWitness> p7_witness;
    std::optional<HoleWitness> c4_witness;
    std::optional<HoleWitness> c6_witness;
    std::optional<HoleWitness> c7_witness;
    std::optional<HoleWitness> even_hole_witness;

    bool in_class() const { return p7_free && even_hole_free; }
    bool in_narrow_class() const { return p7_free && c4_free && c6_free && c7_free; }
};

inline ClassReport is_in_class(const Graph& g) {
    ClassReport r;
    if (auto p = find_induced_path(g, 7)) {
        r.p7_free = false;
        r.p7_witness = p;
    }
    if (auto h = find_hole(g, HoleParity::any, 4)) {
        r.c4_free = false;
        r.c4_witness = h;
    }
    if (auto h = find_hole(g, HoleParity::any, 6)) {
        r.c6_free = false;
        r.c6_witness = h;
    }
    if (auto h = find_hole(g, HoleParity::any, 7)) {
        r.c7_free = false;
        r.c7_witness = h;
    }
    if (auto h = find_hole(g, HoleParity::even)) {
        r.even_hole_free = false;
        r.even_hole_witness = h;
    }
    return r;
}

namespace detail {

// Lex-BFS visit order; label of an unvisited vertex is the descending list of
// visit times of its visited neighbors, compared lexicographically.
inline std::vector<int> lexbfs_order(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> label(n);
    std::vector<bool> done(n, false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            if (pick == -1 || label[v] > label[pick]) pick = v;
        }
        order.push_back(pick);
        done[pick] = true;
        for (int u = g.neighbors(pick).first(); u != -1; u = g.neighbors(pick).next(u))
            if (!done[u]) label[u].push_back(n - step);
    }
    return order;
}

} // namespace detail

// Perfect elimination order (first entry eliminated first) iff chordal.
inline std::optional<std::vector<int>> is_chordal(const Graph& g) {
    int n = g.n();
    if (n == 0) return std::vector<int>{};
    std::vector<int> sigma = detail::lexbfs_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
    for (int v = 0; v < n; ++v) {
        VertexSet earlier(n);
        int parent = -1;
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (pos[u] < pos[v]) {
                earlier.set(u);
                if (parent == -1 || pos[u] > pos[parent]) parent = u;
            }
        if (parent == -1) continue;
        earlier.reset(parent);
        if (!earlier.is_subset_of(g.neighbors(parent))) return std::nullopt;
    }
    std::vector<int> peo(sigma.rbegin(), sigma.rend());
    return peo;
}

// Vertices of x whose neighborhood inside x is a clique.
inline VertexSet simplicial_vertices(const Graph& g, const VertexSet& x) {
    VertexSet out(g.n());
    for (int v = x.first(); v != -1; v = x.next(v))
        if (g.is_clique(g.neighbors_in(v, x))) out.set(v);
    return out;
}

// s ∈ N_x[seed], simplicial in g[x], with N_y(s) inclusion-minimal among such
// candidates; among the minimal ones the lowest index wins.
inline int minimal_simplicial_vertex(const Graph& g, const VertexSet& x,
                                     const VertexSet& y, int seed) {
    if (x.intersects(y))
        throw std::invalid_argument("minimal_simplicial_vertex: x and y overlap");
    if (!x.test(seed) || !g.is_clique(g.neighbors_in(seed, x)))
        throw std::invalid_argument("minimal_simplicial_vertex: seed not simplicial in x");
    VertexSet closed = g.neighbors_in(seed, x);
    closed.set(seed);
    std::vector<int> cands;
    for (int v = closed.first(); v != -1; v = closed.next(v))
        if (g.is_clique(g.neighbors_in(v, x))) cands.push_back(v);
    for (int v : cands) {
        VertexSet nv = g.neighbors_in(v, y);
        bool minimal = true;
        for (int u : cands) {
            VertexSet nu = g.neighbors_in(u, y);
            if (nu != nv && nu.is_subset_of(nv)) {
                minimal = false;
                break;
            }
        }
        if (minimal) return v;
    }
    return seed; // unreachable: seed itself is always a candidate
}

// A bad P7 is a walk v1-…-v7 on seven distinct vertices where v1..v6 is an
// induced P6 and v3..v7 is an induced P5 (v7 may see v1 or v2).
inline std::optional<std::array<int, 7>> has_bad_p7(const Graph& g) {
    std::optional<std::array<int, 7>> found;

    std::vector<int> path;
    VertexSet blocked(g.n());
    auto dfs = [&](auto&& self) -> bool {
        if (int(path.size()) == 6) {
            VertexSet tail = g.neighbors(path[5]);
            for (int i = 0; i < 6; ++i) tail.reset(path[i]);
            tail -= g.neighbors(path[2]);
            tail -= g.neighbors(path[3]);
            tail -= g.neighbors(path[4]);
            int v7 = tail.first();
            if (v7 == -1) return false;
            found = {path[0], path[1], path[2], path[3], path[4], path[5], v7};
            return true;
        }
        int last = path.back();
        VertexSet cands = g.neighbors(last) - blocked;
        for (int u = cands.first(); u != -1; u = cands.next(u)) {
            path.push_back(u);
            VertexSet saved = blocked;
            blocked |= g.neighbors(last);
            blocked.set(u);
            if (self(self)) return true;
            blocked = saved;
            path.pop_back();
        }
        return false;
    };

    // Both orientations of each induced P6 matter, so starts are not
    // symmetry-broken.
    for (int s = 0; s < g.n(); ++s) {
        path = {s};
        blocked = VertexSet::single(g.n(), s);
        if (dfs(dfs)) return found;
    }
    return std::nullopt;
}

// Conditions for an induced sequence A_1,…,A_m: every part connected and
// non-empty, consecutive parts joined by at least one edge, non-consecutive
// parts anticomplete. `cyclic` wraps indices modulo m.
inline bool check_induced_sequence(const Graph& g, const std::vector<VertexSet>& parts,
                                   bool cyclic) {
    int m = int(parts.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (parts[i].intersects(parts[j]))
                throw std::invalid_argument("check_induced_sequence: parts overlap");
    for (const auto& p : parts)
        if (p.none() || !g.is_connected_within(p)) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (cyclic && i == 0 && j == m - 1);
            if (consecutive) {
                if (g.is_anticomplete_between(parts[i], parts[j])) return false;
            } else {
                if (!g.is_anticomplete_between(parts[i], parts[j])) return false;
            }
        }
    return true;
}

} // namespace chibound
