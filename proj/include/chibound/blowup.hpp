#pragma once

// Blowup construction and the pattern catalog: realizing a blowup spec,
// hyperhole chromatic numbers with an explicit coloring, the three special
// 12/10/9-vertex patterns, the eight encoded (4,5)-good-subgraph selections,
// and quotient-based blowup detection.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/oracle.hpp"
#include "chibound/structure.hpp"

namespace chibound {

struct BlowupSpec {
    Graph pattern;
    std::vector<int> sizes;
    std::vector<std::string> labels; // optional, one per pattern vertex
};

struct Realized {
    Graph graph;
    std::vector<int> part_map;     // realized vertex -> pattern vertex
    std::vector<VertexSet> parts;  // pattern vertex -> realized vertices
};

inline Realized realize(const BlowupSpec& spec) {
    int pn = spec.pattern.n();
    if (int(spec.sizes.size()) != pn)
        throw std::invalid_argument("realize: sizes length must match pattern order");
    for (int s : spec.sizes)
        if (s < 0) throw std::invalid_argument("realize: negative part size");

    int n = 0;
    for (int s : spec.sizes) n += s;
    Realized out;
    out.part_map.reserve(n);
    std::vector<int> start(pn, 0);
    for (int p = 0; p < pn; ++p) {
        start[p] = int(out.part_map.size());
        for (int j = 0; j < spec.sizes[p]; ++j) out.part_map.push_back(p);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int pu = out.part_map[u], pv = out.part_map[v];
            if (pu == pv || spec.pattern.has_edge(pu, pv)) edges.emplace_back(u, v);
        }
    out.graph = Graph(n, edges);
    out.parts.assign(pn, VertexSet(n));
    for (int v = 0; v < n; ++v) out.parts[out.part_map[v]].set(v);
    return out;
}

struct Hyperhole {
    int k = 0;
    std::vector<int> sizes;
};

inline void check_hyperhole(const Hyperhole& h) {
    if (h.k < 4) throw std::invalid_argument("hyperhole: k must be at least 4");
    if (int(h.sizes.size()) != h.k)
        throw std::invalid_argument("hyperhole: need one size per cycle position");
    for (int s : h.sizes)
        if (s < 1) throw std::invalid_argument("hyperhole: all part sizes must be positive");
}

inline Realized realize_hyperhole(const Hyperhole& h) {
    check_hyperhole(h);
    return realize({Graph::cycle(h.k), h.sizes, {}});
}

inline int hyperhole_omega(const Hyperhole& h) {
    int best = 0;
    for (int i = 0; i < h.k; ++i)
        best = std::max(best, h.sizes[i] + h.sizes[(i + 1) % h.k]);
    return best;
}

inline int hyperhole_alpha(const Hyperhole& h) { return h.k / 2; }

// Per-part color arcs realizing chi = max(omega, ceil(n/alpha)) colors.
// Parts take contiguous windows on the color circle Z_t; the gap after part i
// never exceeds t - s_i - s_{i+1}, so consecutive parts stay disjoint, and
// the gaps absorb exactly the slack w*t - n where w = ceil(n/t) is the number
// of times the windows wrap around the circle.
inline std::vector<std::vector<int>> hyperhole_part_colors(const Hyperhole& h) {
    check_hyperhole(h);
    int n = 0;
    for (int s : h.sizes) n += s;
    int t = std::max(hyperhole_omega(h), ceil_div(n, hyperhole_alpha(h)));
    int wraps = ceil_div(n, t);
    int slack = wraps * t - n;

    std::vector<int> gap(h.k, 0);
    for (int i = 0; i < h.k && slack > 0; ++i) {
        int cap = t - h.sizes[i] - h.sizes[(i + 1) % h.k];
        gap[i] = std::min(cap, slack);
        slack -= gap[i];
    }
    if (slack != 0)
        throw std::logic_error("hyperhole_part_colors: slack not absorbed");

    std::vector<std::vector<int>> colors(h.k);
    int offset = 0;
    for (int i = 0; i < h.k; ++i) {
        colors[i].reserve(h.sizes[i]);
        for (int j = 0; j < h.sizes[i]; ++j) colors[i].push_back((offset + j) % t);
        offset = (offset + h.sizes[i] + gap[i]) % t;
    }
    return colors;
}

struct HyperholeColoring {
    int chi = 0;
    std::vector<int> coloring; // indexed like realize_hyperhole(h).graph
};

inline HyperholeColoring hyperhole_chromatic(const Hyperhole& h) {
    check_hyperhole(h);
    int n = 0;
    for (int s : h.sizes) n += s;
    int t = std::max(hyperhole_omega(h), ceil_div(n, hyperhole_alpha(h)));

    Realized r = realize_hyperhole(h);
    auto arcs = hyperhole_part_colors(h);
    std::vector<int> coloring(n);
    for (int p = 0; p < h.k; ++p) {
        int j = 0;
        for (int v = r.parts[p].first(); v != -1; v = r.parts[p].next(v))
            coloring[v] = arcs[p][j++];
    }
    if (!is_proper_coloring(r.graph, coloring)) {
        // The interval scheme is believed total; an exact solve keeps the
        // answer trustworthy if it ever is not.
        ExactResult exact = exact_chi(r.graph);
        if (exact.value != t)
            throw std::logic_error("hyperhole_chromatic: formula/search mismatch");
        coloring = exact.coloring;
    }
    return {t, coloring};
}

// Patterns. Vertices 0..6 form the induced 7-cycle; the remaining vertices
// are the attachments described with 1-based names in comments.
inline Graph pattern_M() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
    for (int u = 7; u <= 11; ++u)
        for (int v = u + 1; v <= 11; ++v) edges.emplace_back(u, v); // v8..v12 clique
    for (int x : {5, 6, 0, 1, 2}) edges.emplace_back(7, x);   // v8
    for (int x : {6, 0, 1, 2, 3}) edges.emplace_back(8, x);   // v9
    for (int x : {2, 3, 4, 5, 6}) edges.emplace_back(9, x);   // v10
    for (int x : {2, 5, 6}) edges.emplace_back(10, x);        // v11
    for (int x : {2, 3, 6}) edges.emplace_back(11, x);        // v12
    return Graph(12, edges);
}

inline Graph pattern_M1() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
    edges.emplace_back(7, 8); // v8-v9
    edges.emplace_back(8, 9); // v9-v*
    for (int x : {5, 6, 0, 1, 2}) edges.emplace_back(7, x); // v8
    for (int x : {6, 0, 1, 2, 3}) edges.emplace_back(8, x); // v9
    for (int x : {0, 3, 4}) edges.emplace_back(9, x);       // v*
    return Graph(10, edges);
}

inline Graph pattern_M2() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
    for (int x : {5, 6, 0, 1, 2}) edges.emplace_back(7, x); // v8
    for (int x : {0, 3, 4}) edges.emplace_back(8, x);       // v*
    return Graph(9, edges);
}

// The eight encoded selections, named by the nonempty attachment parts their
// hypotheses require.
enum class FigureCase {
    L11L12,   // part 10 empty; parts 11, 12 present
    L8L9L10,  // parts 8, 9, 10 present
    L8L10,    // part 9 empty; parts 8, 10 present
    L8L9L12,  // part 10 empty; parts 8, 9, 12 present
    L9L11,    // parts 8, 10 empty; parts 9, 11 present
    L9L12,    // parts 8, 10 empty; parts 9, 12 present
    L10L11,   // parts 8, 9 empty; parts 10, 11 present
    L12Only,  // parts 8..11 empty; part 12 present
};

constexpr std::array<FigureCase, 8> all_figure_cases() {
    return {FigureCase::L11L12, FigureCase::L8L9L10, FigureCase::L8L10,
            FigureCase::L8L9L12, FigureCase::L9L11,  FigureCase::L9L12,
            FigureCase::L10L11,  FigureCase::L12Only};
}

struct FigureHypothesis {
    unsigned need_nonempty; // bitmask over pattern vertices 7..11
    unsigned need_empty;
};

inline FigureHypothesis figure_hypothesis(FigureCase which) {
    auto bit = [](int one_based) { return 1u << (one_based - 1); };
    unsigned l8 = bit(8), l9 = bit(9), l10 = bit(10), l11 = bit(11), l12 = bit(12);
    switch (which) {
        case FigureCase::L11L12: return {l11 | l12, l10};
        case FigureCase::L8L9L10: return {l8 | l9 | l10, 0};
        case FigureCase::L8L10: return {l8 | l10, l9};
        case FigureCase::L8L9L12: return {l8 | l9 | l12, l10};
        case FigureCase::L9L11: return {l9 | l11, l8 | l10};
        case FigureCase::L9L12: return {l9 | l12, l8 | l10};
        case FigureCase::L10L11: return {l10 | l11, l8 | l9};
        case FigureCase::L12Only: return {l12, l8 | l9 | l10 | l11};
    }
    throw std::logic_error("figure_hypothesis: bad case");
}

// Color lists per part (entry i = colors of the vertices selected from part
// i+1); colors are 0-based, at most five distinct.
inline const std::array<std::vector<int>, 12>& figure_selection(FigureCase which) {
    using Row = std::array<std::vector<int>, 12>;
    static const Row tables[8] = {
        // L11L12
        {{{0, 1}, {2, 3}, {0, 4}, {2}, {1, 3, 4}, {0}, {2, 4}, {}, {}, {}, {3}, {1}}},
        // L8L9L10
        {{{0}, {1}, {2}, {3}, {1, 2}, {4}, {1}, {3}, {4}, {0}, {}, {}}},
        // L8L10
        {{{0, 1}, {2}, {1, 4}, {3}, {2, 4}, {1}, {2, 4}, {3}, {}, {0}, {}, {}}},
        // L8L9L12
        {{{0}, {1}, {2}, {3}, {0, 1, 2}, {4}, {1, 2}, {3}, {4}, {}, {}, {0}}},
        // L9L11
        {{{0, 1}, {2}, {1, 4}, {2}, {0, 1, 4}, {3}, {2, 4}, {}, {3}, {}, {0}, {}}},
        // L9L12
        {{{0}, {1, 2}, {4}, {1}, {0, 2, 4}, {1, 3}, {2, 4}, {}, {3}, {}, {}, {0}}},
        // L10L11
        {{{0, 1}, {2, 3}, {0, 4}, {3}, {0, 1, 4}, {}, {3, 4}, {}, {}, {2}, {1}, {}}},
        // L12Only
        {{{3}, {0, 1, 4}, {2}, {1, 3}, {0, 2, 4}, {3}, {0, 1, 2}, {}, {}, {}, {}, {4}}},
    };
    return tables[int(which)];
}

inline bool figure_case_applies(FigureCase which, const std::vector<int>& sizes) {
    if (sizes.size() != 12) return false;
    for (int i = 0; i < 7; ++i)
        if (sizes[i] < 1) return false;
    FigureHypothesis hyp = figure_hypothesis(which);
    for (int i = 7; i < 12; ++i) {
        bool nonempty = sizes[i] > 0;
        if ((hyp.need_nonempty >> i) & 1 && !nonempty) return false;
        if ((hyp.need_empty >> i) & 1 && nonempty) return false;
    }
    const auto& sel = figure_selection(which);
    for (int i = 0; i < 12; ++i)
        if (int(sel[i].size()) > sizes[i]) return false;
    return true;
}

struct FigureWitness {
    Realized realized;
    GoodSubgraphWitness witness;
};

// Build the selected subgraph and its 5-coloring inside the realized blowup.
// Within each part the lowest-indexed vertices are selected.
inline FigureWitness figure_good_subgraph(FigureCase which, const BlowupSpec& spec) {
    Graph m = pattern_M();
    if (spec.pattern.n() != 12 || spec.pattern.edge_list() != m.edge_list())
        throw std::invalid_argument("figure_good_subgraph: spec pattern is not the 12-vertex catalog pattern");
    if (spec.sizes.size() != 12)
        throw std::invalid_argument("figure_good_subgraph: need 12 part sizes");
    for (int i = 0; i < 7; ++i)
        if (spec.sizes[i] < 1)
            throw std::invalid_argument("figure_good_subgraph: parts 1..7 must be nonempty");
    if (!figure_case_applies(which, spec.sizes))
        throw std::invalid_argument("figure_good_subgraph: case hypothesis violated or a part is too small");

    FigureWitness out{realize(spec), {}};
    const auto& sel = figure_selection(which);
    int n = out.realized.graph.n();
    out.witness.p = 4;
    out.witness.q = 5;
    out.witness.h = VertexSet(n);
    out.witness.coloring.assign(n, -1);
    for (int part = 0; part < 12; ++part) {
        int v = out.realized.parts[part].first();
        for (int c : sel[part]) {
            out.witness.h.set(v);
            out.witness.coloring[v] = c;
            v = out.realized.parts[part].next(v);
        }
    }
    return out;
}

// Quotient by true twins (equal closed neighborhoods). Each class is a
// clique, classes are pairwise complete or anticomplete, so the graph is
// exactly the blowup of its quotient.
struct Quotient {
    Graph graph;
    std::vector<VertexSet> classes;
};

inline Quotient quotient_by_closed_neighborhood(const Graph& g) {
    Quotient q;
    int n = g.n();
    std::vector<int> cls(n, -1);
    std::vector<int> rep;
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        cls[v] = int(rep.size());
        VertexSet nv = g.closed_neighborhood(v);
        for (int u = v + 1; u < n; ++u)
            if (cls[u] < 0 && g.closed_neighborhood(u) == nv) cls[u] = cls[v];
        rep.push_back(v);
    }
    int k = int(rep.size());
    q.classes.assign(k, VertexSet(n));
    for (int v = 0; v < n; ++v) q.classes[cls[v]].set(v);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.has_edge(rep[a], rep[b])) edges.emplace_back(a, b);
    q.graph = Graph(k, edges);
    return q;
}

// Hyperhole detection: the quotient must be a cycle of length at least 4;
// parts are returned in cyclic order starting from the lowest class.
inline std::optional<std::vector<VertexSet>> detect_hyperhole(const Graph& g) {
    if (g.n() < 4) return std::nullopt;
    Quotient q = quotient_by_closed_neighborhood(g);
    int k = q.graph.n();
    if (k < 4 || !q.graph.is_connected()) return std::nullopt;
    for (int v = 0; v < k; ++v)
        if (q.graph.degree(v) != 2) return std::nullopt;
    std::vector<VertexSet> order{q.classes[0]};
    int prev = 0;
    int cur = q.graph.neighbors(0).first(); // lower neighbor fixes direction
    while (cur != 0) {
        order.push_back(q.classes[cur]);
        VertexSet nb = q.graph.neighbors(cur);
        nb.reset(prev);
        prev = cur;
        cur = nb.first();
    }
    if (int(order.size()) != k) return std::nullopt;
    return order;
}

// Injective embedding of q into pattern preserving adjacency and
// non-adjacency, with the image required to cover `must_cover`.
inline std::optional<std::vector<int>> find_pattern_embedding(const Graph& q,
                                                              const Graph& pattern,
                                                              const VertexSet& must_cover) {
    int nq = q.n(), np = pattern.n();
    if (nq > np) return std::nullopt;
    if (must_cover.count() > nq) return std::nullopt;

    // Map densest q-vertices first; a q-vertex can only land on a pattern
    // vertex of at least its degree.
    std::vector<int> order(nq);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int dx = q.degree(x), dy = q.degree(y);
        if (dx != dy) return dx > dy;
        return x < y;
    });

    std::vector<int> image(nq, -1);
    std::vector<bool> taken(np, false);

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == nq) {
            for (int p = must_cover.first(); p != -1; p = must_cover.next(p))
                if (!taken[p]) return false;
            return true;
        }
        int v = order[depth];
        for (int p = 0; p < np; ++p) {
            if (taken[p] || q.degree(v) > pattern.degree(p)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int u = order[d];
                if (q.has_edge(u, v) != pattern.has_edge(image[u], p)) ok = false;
            }
            if (!ok) continue;
            image[v] = p;
            taken[p] = true;
            if (self(self, depth + 1)) return true;
            taken[p] = false;
            image[v] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0)) return image;
    return std::nullopt;
}

// Special-blowup-of-the-catalog-pattern detection: quotient classes embed
// into the 12-vertex pattern covering its seven cycle vertices. Returns the
// twelve parts (entries 8..12 possibly empty).
inline std::optional<std::array<VertexSet, 12>> detect_special_blowup_M(const Graph& g) {
    Quotient q = quotient_by_closed_neighborhood(g);
    if (q.graph.n() > 12 || q.graph.n() < 7) return std::nullopt;
    Graph m = pattern_M();
    VertexSet cycle7(12);
    for (int i = 0; i < 7; ++i) cycle7.set(i);
    auto image = find_pattern_embedding(q.graph, m, cycle7);
    if (!image) return std::nullopt;
    std::array<VertexSet, 12> parts;
    parts.fill(VertexSet(g.n()));
    for (int c = 0; c < q.graph.n(); ++c) parts[(*image)[c]] = q.classes[c];
    return parts;
}

} // namespace chibound
