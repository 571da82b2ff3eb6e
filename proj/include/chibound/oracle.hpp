#pragma once

// Exact ground-truth solvers: clique number, independence number, chromatic
// number, induced-subgraph search, and exhaustive small-graph enumeration.
// Every solver is exact; above its size limit it refuses instead of
// approximating, because downstream tests treat these answers as truth.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

struct OracleLimits {
    int max_n_omega = 40;
    int max_n_chi = 18;
};

class oracle_limit_error : public std::runtime_error {
public:
    oracle_limit_error(const std::string& what_op, int n, int limit)
        : std::runtime_error(what_op + ": n=" + std::to_string(n) +
                             " exceeds exact-solver limit " + std::to_string(limit)) {}
};

enum class OracleMethod { exhaustive, branch_and_bound };

// For omega/alpha the witness is a vertex set; for chi it is a coloring
// (color per vertex, colors 0..value-1).
struct ExactResult {
    int value = 0;
    VertexSet witness_set;
    std::vector<int> coloring;
    OracleMethod method = OracleMethod::exhaustive;
};

namespace detail {

// Bron–Kerbosch with pivoting. Visits every maximal clique of g[P ∪ R ∪ X]
// extending R; pivot chosen to maximize |P ∩ N(pivot)|.
template <typename Fn>
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, Fn&& report) {
    if (p.none() && x.none()) {
        report(r);
        return;
    }
    int pivot = -1, best = -1;
    VertexSet cand = p | x;
    for (int u = cand.first(); u != -1; u = cand.next(u)) {
        int c = (g.neighbors(u) & p).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    VertexSet branch = p - g.neighbors(pivot);
    for (int v = branch.first(); v != -1; v = branch.next(v)) {
        VertexSet r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), report);
        p.reset(v);
        x.set(v);
    }
}

// Max-clique search with a size bound prune (|R| + |P| ≤ best found).
inline void max_clique_search(const Graph& g, VertexSet r, VertexSet p, VertexSet& best) {
    if (r.count() + p.count() <= best.count()) return;
    if (p.none()) {
        if (r.count() > best.count()) best = r;
        return;
    }
    int pivot = -1, most = -1;
    for (int u = p.first(); u != -1; u = p.next(u)) {
        int c = (g.neighbors(u) & p).count();
        if (c > most) {
            most = c;
            pivot = u;
        }
    }
    VertexSet branch = p - g.neighbors(pivot);
    for (int v = branch.first(); v != -1; v = branch.next(v)) {
        VertexSet r2 = r;
        r2.set(v);
        max_clique_search(g, r2, p & g.neighbors(v), best);
        p.reset(v);
    }
}

} // namespace detail

inline std::vector<VertexSet> all_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n() == 0) return out;
    detail::bron_kerbosch(g, VertexSet(g.n()), g.vertices(), VertexSet(g.n()),
                          [&](const VertexSet& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

inline ExactResult exact_omega(const Graph& g, const OracleLimits& limits = {}) {
    if (g.n() > limits.max_n_omega)
        throw oracle_limit_error("exact_omega", g.n(), limits.max_n_omega);
    ExactResult r;
    r.method = OracleMethod::exhaustive;
    r.witness_set = VertexSet(g.n());
    if (g.n() == 0) return r;
    detail::max_clique_search(g, VertexSet(g.n()), g.vertices(), r.witness_set);
    r.value = r.witness_set.count();
    return r;
}

inline ExactResult exact_alpha(const Graph& g, const OracleLimits& limits = {}) {
    if (g.n() > limits.max_n_omega)
        throw oracle_limit_error("exact_alpha", g.n(), limits.max_n_omega);
    ExactResult r = exact_omega(g.complement(), limits);
    return r;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
    if (int(color.size()) != g.n()) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (color[v] < 0) return false;
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (color[u] == color[v]) return false;
    }
    return true;
}

inline int color_count(const std::vector<int>& color) {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    return k;
}

// Greedy coloring in the given vertex order, always taking the least free color.
inline std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order) {
    std::vector<int> color(g.n(), -1);
    for (int v : order) {
        std::vector<bool> used(g.n() + 1, false);
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

// DSATUR greedy: repeatedly color the uncolored vertex seeing the most
// distinct colors (ties: higher degree, then lower index).
inline std::vector<int> dsatur_coloring(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n, -1);
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            VertexSet seen_mask(n);
            int sat = 0;
            for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
                if (color[u] >= 0 && !seen_mask.test(color[u])) {
                    seen_mask.set(color[u]);
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<bool> used(n + 1, false);
        for (int u = g.neighbors(pick).first(); u != -1; u = g.neighbors(pick).next(u))
            if (color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[pick] = c;
    }
    return color;
}

namespace detail {

struct ChiSolver {
    const Graph& g;
    int n;
    int best_k;
    std::vector<int> best_color;
    std::vector<int> color;

    ChiSolver(const Graph& graph, int upper, std::vector<int> upper_coloring)
        : g(graph), n(graph.n()), best_k(upper), best_color(std::move(upper_coloring)),
          color(n, -1) {}

    void run(int lower) {
        if (best_k <= lower) return;
        recurse(0, 0, lower);
    }

    void recurse(int colored, int used, int lower) {
        if (used >= best_k) return;
        if (colored == n) {
            best_k = used;
            best_color = color;
            return;
        }
        // DSATUR branching vertex: most saturated, then highest degree.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            VertexSet seen(n);
            int sat = 0;
            for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
                if (color[u] >= 0 && !seen.test(color[u])) {
                    seen.set(color[u]);
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<bool> used_by_nb(used + 2, false);
        for (int u = g.neighbors(pick).first(); u != -1; u = g.neighbors(pick).next(u))
            if (color[u] >= 0) used_by_nb[color[u]] = true;
        int cap = std::min(used + 1, best_k - 1);
        for (int c = 0; c < cap; ++c) {
            if (c < used && used_by_nb[c]) continue;
            color[pick] = c;
            recurse(colored + 1, std::max(used, c + 1), lower);
            color[pick] = -1;
            if (best_k <= lower) return;
        }
    }
};

} // namespace detail

inline ExactResult exact_chi(const Graph& g, const OracleLimits& limits = {}) {
    if (g.n() > limits.max_n_chi)
        throw oracle_limit_error("exact_chi", g.n(), limits.max_n_chi);
    ExactResult r;
    r.method = OracleMethod::branch_and_bound;
    if (g.n() == 0) return r;

    ExactResult omega = exact_omega(g, OracleLimits{std::max(g.n(), limits.max_n_omega),
                                                    limits.max_n_chi});
    std::vector<int> upper = dsatur_coloring(g);
    detail::ChiSolver solver(g, color_count(upper), upper);

    // Pre-color a maximum clique: its vertices need pairwise distinct colors
    // in any proper coloring, so fixing them loses no optimal solution.
    int fixed = 0;
    for (int v = omega.witness_set.first(); v != -1; v = omega.witness_set.next(v))
        solver.color[v] = fixed++;
    if (fixed < solver.best_k) solver.recurse(fixed, fixed, omega.value);

    r.value = solver.best_k;
    r.coloring = solver.best_color;
    return r;
}

// Backtracking search for an induced copy of `pattern` inside g. Returns the
// image of pattern vertex i at position i. Exhaustive over all placements.
inline std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
    if (pattern.n() > 8)
        throw std::invalid_argument("find_induced: pattern larger than 8 vertices");
    int k = pattern.n();
    if (k == 0) return std::vector<int>{};
    if (k > g.n()) return std::nullopt;

    // Map pattern vertices in a connectivity-friendly order: highest degree
    // first, then prefer vertices adjacent to already-placed ones.
    std::vector<int> order;
    {
        std::vector<bool> placed(k, false);
        for (int step = 0; step < k; ++step) {
            int pick = -1, pick_links = -1, pick_deg = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u : order)
                    if (pattern.has_edge(u, v)) ++links;
                int deg = pattern.degree(v);
                if (links > pick_links || (links == pick_links && deg > pick_deg)) {
                    pick = v;
                    pick_links = links;
                    pick_deg = deg;
                }
            }
            order.push_back(pick);
            placed[pick] = true;
        }
    }

    std::vector<int> image(k, -1);
    VertexSet used(g.n());

    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == k) return true;
        int pv = order[depth];
        for (int gv = 0; gv < g.n(); ++gv) {
            if (used.test(gv)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int qu = order[d];
                if (pattern.has_edge(pv, qu) != g.has_edge(gv, image[qu])) ok = false;
            }
            if (!ok) continue;
            image[pv] = gv;
            used.set(gv);
            if (self(self, depth + 1)) return true;
            used.reset(gv);
            image[pv] = -1;
        }
        return false;
    };

    if (extend(extend, 0)) return image;
    return std::nullopt;
}

inline bool brute_induced(const Graph& g, const Graph& pattern) {
    return find_induced(g, pattern).has_value();
}

// Canonical code of a graph with n ≤ 8: minimum upper-triangle bit encoding
// over all vertex permutations.
inline uint64_t canonical_code(const Graph& g) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_code: n > 8");
    uint8_t adj[8] = {};
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next(v))
            adj[u] |= uint8_t(1u << v);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((adj[perm[i]] >> perm[j]) & 1) code |= uint64_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Isomorphism-invariant fingerprint: hash of each vertex's degree, local
// triangle count, and sorted neighbor degrees, folded order-independently.
// Equal fingerprints do not imply isomorphism; use it to bucket candidates.
inline uint64_t graph_fingerprint(const Graph& g) {
    constexpr uint64_t basis = 1469598103934665603ull, prime = 1099511628211ull;
    std::vector<uint64_t> vh;
    for (int v = 0; v < g.n(); ++v) {
        VertexSet nb = g.neighbors(v);
        std::vector<int> nd;
        int tri = 0;
        for (int u = nb.first(); u != -1; u = nb.next(u)) {
            tri += (g.neighbors(u) & nb).count();
            nd.push_back(g.degree(u));
        }
        std::sort(nd.begin(), nd.end());
        uint64_t h = basis;
        h = (h ^ uint64_t(nb.count())) * prime;
        h = (h ^ uint64_t(tri)) * prime;
        for (int d : nd) h = (h ^ uint64_t(d + 1)) * prime;
        vh.push_back(h);
    }
    std::sort(vh.begin(), vh.end());
    uint64_t out = basis;
    for (uint64_t h : vh) out = (out ^ h) * prime;
    return out;
}

// Exact isomorphism test: between graphs of equal order, an induced embedding
// is a bijection preserving adjacency and non-adjacency.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return find_induced(a, b).has_value();
}

// All graphs on n ≤ 8 vertices up to isomorphism, built by extending the
// (n-1)-vertex list with every attachment of one new vertex and keeping one
// representative per isomorphism class. Counts: 1, 2, 4, 11, 34, 156, 1044,
// 12346. Minimum-code dedup scans all permutations, affordable through seven
// vertices; the eight-vertex stage buckets by fingerprint and settles each
// bucket with exact isomorphism tests.
inline const std::vector<Graph>& enumerate_all_graphs(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_all_graphs: supported for 1 <= n <= 8");
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Graph> cur;
    cur.push_back(Graph(1));
    for (int sz = 2; sz <= n; ++sz) {
        std::vector<Graph> grown;
        auto children_of = [sz](const Graph& base, uint32_t mask) {
            auto edges = base.edge_list();
            for (int u = 0; u < sz - 1; ++u)
                if ((mask >> u) & 1) edges.emplace_back(u, sz - 1);
            return Graph(sz, edges);
        };
        if (sz <= 7) {
            std::map<uint64_t, Graph> next;
            for (const Graph& base : cur)
                for (uint32_t mask = 0; mask < (uint32_t{1} << (sz - 1)); ++mask) {
                    Graph g = children_of(base, mask);
                    next.emplace(canonical_code(g), g);
                }
            for (auto& [code, g] : next) grown.push_back(std::move(g));
        } else {
            std::map<uint64_t, std::vector<Graph>> buckets;
            for (const Graph& base : cur)
                for (uint32_t mask = 0; mask < (uint32_t{1} << (sz - 1)); ++mask) {
                    Graph g = children_of(base, mask);
                    auto& bucket = buckets[graph_fingerprint(g)];
                    bool seen = false;
                    for (const Graph& h : bucket)
                        if (isomorphic(g, h)) {
                            seen = true;
                            break;
                        }
                    if (!seen) bucket.push_back(std::move(g));
                }
            for (auto& [fp, bucket] : buckets)
                for (auto& g : bucket) grown.push_back(std::move(g));
        }
        cur = std::move(grown);
    }
    return cache.emplace(n, std::move(cur)).first->second;
}

} // namespace chibound
