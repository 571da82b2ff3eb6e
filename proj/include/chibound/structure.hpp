#pragma once

// Structural analysis around blowups of C5: verification and greedy
// maximalization of the five-part structure, attachment classification,
// clique cutsets, small vertices, good-subgraph verification, neighborhood
// classification over an induced C5, and nice 6-tuples.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognize.hpp"

namespace chibound {

// Five nonempty disjoint cliques B1..B5 (stored 0-based) wrapped around a
// cycle, plus for each part the designated vertex q_i complete to both
// neighboring parts.
struct NiceBlowup {
    std::array<VertexSet, 5> parts;
    std::array<int, 5> q{-1, -1, -1, -1, -1};

    VertexSet all() const {
        VertexSet s = parts[0];
        for (int i = 1; i < 5; ++i) s |= parts[i];
        return s;
    }

    int part_of(int v) const {
        for (int i = 0; i < 5; ++i)
            if (parts[i].test(v)) return i;
        return -1;
    }
};

// Verification outcome: either the completed structure or the first failed
// condition (1: part not a clique, 2: missing neighbor in an adjacent part,
// 3: non-adjacent parts not anticomplete, 4: induced P4 across three
// consecutive parts, 5: no vertex complete to both neighboring parts,
// 0: empty part).
struct NiceBlowupCheck {
    std::optional<NiceBlowup> blowup;
    int failed_condition = -1;
    std::string detail;
    std::vector<int> witness;

    bool ok() const { return blowup.has_value(); }
};

namespace detail {

inline bool blowup_conditions_hold(const Graph& g, const std::array<VertexSet, 5>& b,
                                   NiceBlowupCheck* report) {
    auto fail = [&](int cond, std::string detail, std::vector<int> wit) {
        if (report) {
            report->failed_condition = cond;
            report->detail = std::move(detail);
            report->witness = std::move(wit);
        }
        return false;
    };

    for (int i = 0; i < 5; ++i)
        if (b[i].none())
            return fail(0, "part " + std::to_string(i + 1) + " is empty", {});

    for (int i = 0; i < 5; ++i)
        if (!g.is_clique(b[i]))
            return fail(1, "part " + std::to_string(i + 1) + " is not a clique", {});

    for (int i = 0; i < 5; ++i) {
        const VertexSet& prev = b[(i + 4) % 5];
        const VertexSet& next = b[(i + 1) % 5];
        for (int v = b[i].first(); v != -1; v = b[i].next(v)) {
            if (!g.neighbors(v).intersects(prev) || !g.neighbors(v).intersects(next))
                return fail(2,
                            "vertex " + std::to_string(v) + " of part " +
                                std::to_string(i + 1) +
                                " misses a neighbor in an adjacent part",
                            {v});
        }
    }

    for (int i = 0; i < 5; ++i) {
        const VertexSet& far = b[(i + 2) % 5];
        if (!g.is_anticomplete_between(b[i], far))
            return fail(3,
                        "parts " + std::to_string(i + 1) + " and " +
                            std::to_string((i + 2) % 5 + 1) + " are not anticomplete",
                        {});
    }

    // No induced P4 a-b-c-d with a in B_i, b,c in B_{i+1}, d in B_{i+2}:
    // equivalently, neighborhoods of a and d inside B_{i+1} are comparable.
    for (int i = 0; i < 5; ++i) {
        const VertexSet& mid = b[(i + 1) % 5];
        const VertexSet& far = b[(i + 2) % 5];
        for (int a = b[i].first(); a != -1; a = b[i].next(a)) {
            VertexSet na = g.neighbors_in(a, mid);
            for (int d = far.first(); d != -1; d = far.next(d)) {
                VertexSet nd = g.neighbors_in(d, mid);
                VertexSet only_a = na - nd;
                VertexSet only_d = nd - na;
                if (only_a.any() && only_d.any())
                    return fail(4,
                                "induced P4 across parts " + std::to_string(i + 1) +
                                    "," + std::to_string((i + 1) % 5 + 1) + "," +
                                    std::to_string((i + 2) % 5 + 1),
                                {a, only_a.first(), only_d.first(), d});
            }
        }
    }
    return true;
}

} // namespace detail

inline NiceBlowupCheck verify_nice_blowup(const Graph& g,
                                          const std::array<VertexSet, 5>& b) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (b[i].intersects(b[j]))
                throw std::invalid_argument("verify_nice_blowup: parts overlap");

    NiceBlowupCheck check;
    if (!detail::blowup_conditions_hold(g, b, &check)) return check;

    NiceBlowup nb;
    nb.parts = b;
    for (int i = 0; i < 5; ++i) {
        VertexSet both = b[(i + 4) % 5] | b[(i + 1) % 5];
        for (int v = b[i].first(); v != -1; v = b[i].next(v))
            if (both.is_subset_of(g.neighbors(v))) {
                nb.q[i] = v;
                break;
            }
        if (nb.q[i] == -1) {
            check.failed_condition = 5;
            check.detail = "no vertex of part " + std::to_string(i + 1) +
                           " is complete to both neighboring parts";
            return check;
        }
    }
    check.blowup = nb;
    check.failed_condition = -1;
    return check;
}

// Greedy maximalization: absorb one outside vertex at a time (lowest vertex,
// lowest part index first) while the defining conditions keep holding, then
// retry once more after every success. When single insertions dry up, pairs
// of outside vertices are probed as well; set-inclusion maximality beyond
// two-vertex extensions is not re-checked.
inline NiceBlowupCheck find_maximal_nice_blowup(const Graph& g,
                                                const std::vector<int>& seed) {
    if (!is_hole(g, seed) || seed.size() != 5)
        throw std::invalid_argument("find_maximal_nice_blowup: seed is not an induced C5");

    std::array<VertexSet, 5> parts;
    for (int i = 0; i < 5; ++i) parts[i] = VertexSet::single(g.n(), seed[i]);

    auto try_insert = [&](int v, int part) {
        parts[part].set(v);
        if (detail::blowup_conditions_hold(g, parts, nullptr)) return true;
        parts[part].reset(v);
        return false;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        VertexSet inside = parts[0] | parts[1] | parts[2] | parts[3] | parts[4];
        VertexSet outside = ~inside;
        for (int v = outside.first(); v != -1 && !grew; v = outside.next(v))
            for (int i = 0; i < 5 && !grew; ++i) grew = try_insert(v, i);

        if (!grew) {
            // Two-vertex probe: some extensions only become valid in pairs
            // (each new vertex supplying the other's neighbor requirement).
            std::vector<int> out = outside.to_vector();
            for (size_t x = 0; x < out.size() && !grew; ++x)
                for (size_t y = x + 1; y < out.size() && !grew; ++y)
                    for (int i = 0; i < 5 && !grew; ++i)
                        for (int j = 0; j < 5 && !grew; ++j) {
                            parts[i].set(out[x]);
                            parts[j].set(out[y]);
                            if (detail::blowup_conditions_hold(g, parts, nullptr)) {
                                grew = true;
                            } else {
                                parts[i].reset(out[x]);
                                parts[j].reset(out[y]);
                            }
                        }
        }
    }
    return verify_nice_blowup(g, parts);
}

// The inclusion chain of Lemma-style orderings: vertices of part i sorted so
// each one's neighborhood in the two adjacent parts contains the previous
// one's. Returns the sorted order, or nothing if some pair is incomparable.
inline std::optional<std::vector<int>> part_inclusion_chain(const Graph& g,
                                                            const NiceBlowup& nb,
                                                            int i) {
    VertexSet both = nb.parts[(i + 4) % 5] | nb.parts[(i + 1) % 5];
    std::vector<int> vs = nb.parts[i].to_vector();
    std::vector<VertexSet> nbhd;
    nbhd.reserve(vs.size());
    for (int v : vs) nbhd.push_back(g.neighbors(v) & both);
    std::vector<size_t> idx(vs.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
        int cx = nbhd[x].count(), cy = nbhd[y].count();
        if (cx != cy) return cx < cy;
        return vs[x] < vs[y];
    });
    for (size_t k = 0; k + 1 < idx.size(); ++k)
        if (!nbhd[idx[k]].is_subset_of(nbhd[idx[k + 1]])) return std::nullopt;
    std::vector<int> order;
    order.reserve(vs.size());
    for (size_t k : idx) order.push_back(vs[k]);
    return order;
}

enum class AttachKind { A0, A1, A2, A3, A5, Invalid };

struct Attachment {
    AttachKind kind = AttachKind::A0;
    int index = -1; // part index i for A1(i), A2(i), A3(i)
    std::vector<int> supp;
};

struct AttachmentPartition {
    std::vector<Attachment> by_vertex; // indexed by g vertex; host vertices get supp empty, kind A0, index -2
    VertexSet a0, a5, invalid;
    std::array<VertexSet, 5> a1, a2, a3;
    bool any_invalid = false;

    // A'3(i) = A3(i) together with B_i itself.
    VertexSet a3_prime(const NiceBlowup& nb, int i) const {
        return a3[i] | nb.parts[i];
    }
};

// supp(v) = the set of parts v has a neighbor in; valid supports are the
// empty set, singletons, consecutive pairs, consecutive triples (named by
// their middle part), and all five. Anything else certifies the host graph
// sits outside the class.
inline AttachmentPartition classify_attachments(const Graph& g, const NiceBlowup& nb) {
    AttachmentPartition out;
    int n = g.n();
    out.a0 = VertexSet(n);
    out.a5 = VertexSet(n);
    out.invalid = VertexSet(n);
    for (int i = 0; i < 5; ++i) {
        out.a1[i] = VertexSet(n);
        out.a2[i] = VertexSet(n);
        out.a3[i] = VertexSet(n);
    }
    out.by_vertex.resize(n);
    VertexSet host = nb.all();
    for (int v = 0; v < n; ++v) {
        if (host.test(v)) {
            out.by_vertex[v].index = -2;
            continue;
        }
        Attachment& at = out.by_vertex[v];
        unsigned mask = 0;
        for (int i = 0; i < 5; ++i)
            if (g.neighbors(v).intersects(nb.parts[i])) {
                mask |= 1u << i;
                at.supp.push_back(i);
            }
        int size = int(at.supp.size());
        auto is_consecutive_pair = [&](unsigned m, int& start) {
            for (int i = 0; i < 5; ++i)
                if (m == ((1u << i) | (1u << ((i + 1) % 5)))) {
                    start = i;
                    return true;
                }
            return false;
        };
        auto is_consecutive_triple = [&](unsigned m, int& mid) {
            for (int i = 0; i < 5; ++i) {
                unsigned want = (1u << ((i + 4) % 5)) | (1u << i) | (1u << ((i + 1) % 5));
                if (m == want) {
                    mid = i;
                    return true;
                }
            }
            return false;
        };
        int idx = -1;
        if (size == 0) {
            at.kind = AttachKind::A0;
            out.a0.set(v);
        } else if (size == 1) {
            at.kind = AttachKind::A1;
            at.index = at.supp[0];
            out.a1[at.index].set(v);
        } else if (size == 2 && is_consecutive_pair(mask, idx)) {
            at.kind = AttachKind::A2;
            at.index = idx;
            out.a2[idx].set(v);
        } else if (size == 3 && is_consecutive_triple(mask, idx)) {
            at.kind = AttachKind::A3;
            at.index = idx;
            out.a3[idx].set(v);
        } else if (size == 5) {
            at.kind = AttachKind::A5;
            out.a5.set(v);
        } else {
            at.kind = AttachKind::Invalid;
            out.invalid.set(v);
            out.any_invalid = true;
        }
    }
    return out;
}

struct CliqueCutset {
    VertexSet cutset;
    std::vector<VertexSet> pieces; // each piece is one component plus the cutset
};

// First clique (smallest, then lexicographically earliest vertex list) whose
// removal disconnects g. A disconnected input yields the empty cutset and its
// components.
inline std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    auto comps = g.components();
    if (comps.size() > 1) {
        CliqueCutset r;
        r.cutset = VertexSet(g.n());
        r.pieces = comps;
        return r;
    }

    std::vector<VertexSet> cliques;
    for (const VertexSet& maxc : all_maximal_cliques(g)) {
        std::vector<int> vs = maxc.to_vector();
        int k = int(vs.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            if (mask == (1u << k) - 1u && k == g.n()) continue;
            VertexSet s(g.n());
            for (int b = 0; b < k; ++b)
                if ((mask >> b) & 1) s.set(vs[b]);
            cliques.push_back(s);
        }
    }
    std::sort(cliques.begin(), cliques.end(), [](const VertexSet& x, const VertexSet& y) {
        int cx = x.count(), cy = y.count();
        if (cx != cy) return cx < cy;
        return x.to_vector() < y.to_vector();
    });
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());

    for (const VertexSet& s : cliques) {
        VertexSet rest = ~s;
        if (rest.none()) continue;
        auto pieces = g.components(rest);
        if (pieces.size() > 1) {
            CliqueCutset r;
            r.cutset = s;
            for (VertexSet& p : pieces) {
                p |= s;
                r.pieces.push_back(p);
            }
            return r;
        }
    }
    return std::nullopt;
}

// The target bound the whole toolkit certifies.
inline int bound_for_omega(int omega) { return ceil_div(5 * omega, 4); }

// Vertices of degree at most ceil(5*omega/4) - 1; peeling them preserves the
// bound because a color among that many always remains free.
inline VertexSet small_vertices(const Graph& g, int omega) {
    if (omega < 1) throw std::invalid_argument("small_vertices: omega < 1");
    int threshold = bound_for_omega(omega) - 1;
    VertexSet out(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= threshold) out.set(v);
    return out;
}

struct GoodSubgraphWitness {
    int p = 0;
    int q = 0;
    VertexSet h;
    std::vector<int> coloring; // size n; colors 0..q-1 inside h, -1 outside
};

struct GoodSubgraphReport {
    bool ok = false;
    std::string detail;
    VertexSet violating_clique;
};

// Checks the two defining properties of a (p,q)-good subgraph: the coloring
// restricted to h is proper with at most q colors, and every maximal clique K
// of g contains at least p - (omega - |K|) vertices of h. Maximal cliques are
// enumerated exactly.
inline GoodSubgraphReport verify_good_subgraph(const Graph& g,
                                               const GoodSubgraphWitness& w,
                                               int omega) {
    GoodSubgraphReport rep;
    rep.violating_clique = VertexSet(g.n());
    if (w.p < 1 || w.q < 1) {
        rep.detail = "p and q must be positive";
        return rep;
    }
    if (int(w.coloring.size()) != g.n()) {
        rep.detail = "coloring length mismatch";
        return rep;
    }
    for (int v = 0; v < g.n(); ++v) {
        bool in_h = w.h.test(v);
        int c = w.coloring[v];
        if (in_h && (c < 0 || c >= w.q)) {
            rep.detail = "vertex " + std::to_string(v) + " of h lacks a color in [0,q)";
            return rep;
        }
        if (!in_h && c != -1) {
            rep.detail = "vertex " + std::to_string(v) + " outside h carries a color";
            return rep;
        }
    }
    for (int v = w.h.first(); v != -1; v = w.h.next(v)) {
        VertexSet nb = g.neighbors_in(v, w.h);
        for (int u = nb.first(); u != -1; u = nb.next(u))
            if (w.coloring[u] == w.coloring[v]) {
                rep.detail = "edge " + std::to_string(v) + "-" + std::to_string(u) +
                             " is monochromatic";
                return rep;
            }
    }

    auto cliques = all_maximal_cliques(g);
    int seen_max = 0;
    for (const auto& k : cliques) seen_max = std::max(seen_max, k.count());
    if (seen_max != omega)
        throw std::invalid_argument("verify_good_subgraph: omega=" + std::to_string(omega) +
                                    " but enumeration finds maximum clique " +
                                    std::to_string(seen_max));
    for (const auto& k : cliques) {
        int need = w.p - (omega - k.count());
        if ((k & w.h).count() < need) {
            rep.detail = "maximal clique of size " + std::to_string(k.count()) +
                         " meets h in " + std::to_string((k & w.h).count()) +
                         " < " + std::to_string(need) + " vertices";
            rep.violating_clique = k;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

// Partition of the outside of an induced C5 by exact neighborhood trace on
// the cycle: bucket index is the bitmask over cycle positions.
inline std::array<VertexSet, 32> classify_by_c5(const Graph& g,
                                                const std::vector<int>& c5) {
    if (!is_hole(g, c5) || c5.size() != 5)
        throw std::invalid_argument("classify_by_c5: not an induced C5");
    std::array<VertexSet, 32> buckets;
    buckets.fill(VertexSet(g.n()));
    VertexSet cset(g.n());
    for (int v : c5) cset.set(v);
    for (int v = 0; v < g.n(); ++v) {
        if (cset.test(v)) continue;
        unsigned mask = 0;
        for (int i = 0; i < 5; ++i)
            if (g.has_edge(v, c5[i])) mask |= 1u << i;
        buckets[mask].set(v);
    }
    return buckets;
}

struct NiceSixTuple {
    int a = -1;
    int b = -1;
    VertexSet u, pa, pb, q;
};

// Canonical 6-tuple over a connected set k and two non-adjacent attachments:
// u = common neighbors, pa/pb = private neighbors, q = the rest. Nice iff
// u, pa, pb are nonempty, pa/pb/q pairwise anticomplete, and u is complete
// to pa and pb.
inline std::optional<NiceSixTuple> find_nice_six_tuple(const Graph& g,
                                                       const VertexSet& k,
                                                       int a, int b) {
    if (g.has_edge(a, b))
        throw std::invalid_argument("find_nice_six_tuple: a and b are adjacent");
    if (k.test(a) || k.test(b))
        throw std::invalid_argument("find_nice_six_tuple: a or b inside k");
    if (!g.is_connected_within(k))
        throw std::invalid_argument("find_nice_six_tuple: k is not connected");
    if (!g.neighbors(a).intersects(k) || !g.neighbors(b).intersects(k))
        throw std::invalid_argument("find_nice_six_tuple: a or b has no neighbor in k");

    NiceSixTuple t;
    t.a = a;
    t.b = b;
    VertexSet na = g.neighbors_in(a, k);
    VertexSet nb = g.neighbors_in(b, k);
    t.u = na & nb;
    t.pa = na - nb;
    t.pb = nb - na;
    t.q = ((k - t.u) - t.pa) - t.pb;

    if (t.u.none() || t.pa.none() || t.pb.none()) return std::nullopt;
    if (!g.is_anticomplete_between(t.pa, t.pb)) return std::nullopt;
    if (!g.is_anticomplete_between(t.pa, t.q)) return std::nullopt;
    if (!g.is_anticomplete_between(t.pb, t.q)) return std::nullopt;
    if (!g.is_complete_between(t.u, t.pa)) return std::nullopt;
    if (!g.is_complete_between(t.u, t.pb)) return std::nullopt;
    return t;
}

} // namespace chibound
