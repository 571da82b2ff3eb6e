// Instance generators for the graph families the toolkit targets, plus a
// registry of falsifiable structural statements about nice blowups of C5,
// their attachments, and pentagon neighborhoods. Every statement is split
// into a machine-checkable hypothesis and a conclusion; the suite runs the
// conclusion only where the hypothesis holds and reports violations with a
// reproducible witness.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chibound/blowup.hpp"
#include "chibound/graph.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognize.hpp"
#include "chibound/rng.hpp"
#include "chibound/structure.hpp"

namespace chibound {

// ---------------------------------------------------------------------------
// Instance families

enum class Family {
    hyperhole,
    equal_blowup_c5,
    special_blowup_m,
    blowup_m1,
    blowup_m2,
    nice_blowup_plus_attachments,
    chordal_random,
    random_filtered,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::hyperhole: return "hyperhole";
        case Family::equal_blowup_c5: return "equal_blowup_c5";
        case Family::special_blowup_m: return "special_blowup_M";
        case Family::blowup_m1: return "blowup_M1";
        case Family::blowup_m2: return "blowup_M2";
        case Family::nice_blowup_plus_attachments: return "nice_blowup_plus_attachments";
        case Family::chordal_random: return "chordal_random";
        case Family::random_filtered: return "random_filtered";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::hyperhole, Family::equal_blowup_c5, Family::special_blowup_m,
                     Family::blowup_m1, Family::blowup_m2,
                     Family::nice_blowup_plus_attachments, Family::chordal_random,
                     Family::random_filtered})
        if (s == family_name(f)) return f;
    return std::nullopt;
}

inline std::vector<Family> all_families() {
    return {Family::hyperhole,       Family::equal_blowup_c5,
            Family::special_blowup_m, Family::blowup_m1,
            Family::blowup_m2,        Family::nice_blowup_plus_attachments,
            Family::chordal_random,   Family::random_filtered};
}

struct GenOptions {
    int count = 10;
    uint64_t seed = 1;
    int max_n = 16;
};

// Acceptance-rate bookkeeping; candidates are whole graphs built before the
// class filter ran.
struct GenStats {
    int candidates = 0;
    int rejected = 0;
};

struct Instance {
    std::string id;
    Family family;
    Graph graph;
};

namespace detail {

inline std::string instance_id(Family f, uint64_t seed, int index) {
    std::ostringstream os;
    os << family_name(f) << "-s" << seed << "-" << index;
    return os.str();
}

inline Graph gen_hyperhole(Rng& rng, int max_n) {
    while (true) {
        int k = rng.chance(0.5) ? 5 : 7;
        if (k > max_n) k = 5;
        std::vector<int> sizes(k);
        int total = 0;
        for (int& s : sizes) {
            s = rng.uniform(1, 3);
            total += s;
        }
        if (total <= max_n) return realize_hyperhole({k, sizes}).graph;
    }
}

// A blowup of an even-hole-free, P7-free pattern stays in class: an induced
// cycle or path in the blowup cannot keep two same-part vertices (they would
// be adjacent, and the part's common neighbors chord the subgraph), so it
// projects onto an induced copy in the pattern.
inline Graph gen_pattern_blowup(Rng& rng, const Graph& pattern, int mandatory,
                                int max_n) {
    int k = pattern.n();
    std::vector<int> sizes(k, 0);
    for (int i = 0; i < mandatory; ++i) sizes[i] = 1;
    int total = mandatory;
    int target = rng.uniform(mandatory, max_n);
    while (total < target) {
        sizes[rng.uniform(0, k - 1)] += 1;
        ++total;
    }
    return realize({pattern, sizes, {}}).graph;
}

// Nice blowup with nested consecutive adjacency: vertices of each part are
// ordered and every vertex sees a prefix of each neighboring part, with
// prefix lengths non-increasing along the part and the first vertex complete
// to the next part. All prefix neighborhoods inside one part are pairwise
// comparable, which is exactly the P4-structure condition.
struct NiceBlowupDraft {
    Graph graph;
    std::array<VertexSet, 5> parts;
    std::array<std::vector<int>, 5> order; // part vertices, largest neighborhood first
};

inline NiceBlowupDraft gen_nice_blowup(Rng& rng, const std::vector<int>& sizes) {
    int n = 0;
    std::array<std::vector<int>, 5> ids;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < sizes[i]; ++j) ids[i].push_back(n++);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (size_t a = 0; a < ids[i].size(); ++a)
            for (size_t b = a + 1; b < ids[i].size(); ++b)
                edges.emplace_back(ids[i][a], ids[i][b]);
    for (int i = 0; i < 5; ++i) {
        int nx = (i + 1) % 5;
        int cap = sizes[nx];
        int prev = cap;
        for (int j = 0; j < sizes[i]; ++j) {
            int c = j == 0 ? cap : rng.uniform(1, prev);
            prev = c;
            for (int t = 0; t < c; ++t) edges.emplace_back(ids[i][j], ids[nx][t]);
        }
    }

    NiceBlowupDraft d{Graph(n, edges), {}, {}};
    for (int i = 0; i < 5; ++i) {
        d.parts[i] = VertexSet(n);
        for (int v : ids[i]) d.parts[i].set(v);
        d.order[i] = ids[i];
    }
    return d;
}

// Attachments hang off the blowup with prefix neighborhoods in each
// supported part, so they respect the nested structure; the class filter
// rejects the rare draws that still create a long path or an even hole.
inline std::optional<Graph> gen_blowup_with_attachments(Rng& rng, int max_n,
                                                        int max_extra) {
    std::vector<int> sizes(5);
    int extra = rng.uniform(0, std::min(max_extra, std::max(0, max_n - 5)));
    while (true) {
        int total = 0;
        for (int& s : sizes) {
            s = rng.uniform(1, 3);
            total += s;
        }
        if (total + extra <= max_n) break;
    }
    NiceBlowupDraft d = gen_nice_blowup(rng, sizes);
    int base = d.graph.n();
    std::vector<std::pair<int, int>> edges = d.graph.edge_list();
    std::vector<int> a3_added;
    for (int t = 0; t < extra; ++t) {
        int v = base + t;
        int kind = rng.uniform(0, 3);
        int i = rng.uniform(0, 4);
        auto attach_prefix = [&](int part, int len) {
            for (int j = 0; j < len; ++j) edges.emplace_back(v, d.order[part][j]);
        };
        if (kind == 0) { // support {i}
            attach_prefix(i, rng.uniform(1, sizes[i]));
        } else if (kind == 1) { // support {i, i+1}
            attach_prefix(i, rng.uniform(1, sizes[i]));
            attach_prefix((i + 1) % 5, rng.uniform(1, sizes[(i + 1) % 5]));
        } else if (kind == 2) { // support {i-1, i, i+1}
            attach_prefix((i + 4) % 5, rng.uniform(1, sizes[(i + 4) % 5]));
            attach_prefix(i, rng.uniform(1, sizes[i]));
            attach_prefix((i + 1) % 5, rng.uniform(1, sizes[(i + 1) % 5]));
            a3_added.push_back(v);
        } else { // support [5]: complete to the host and to earlier triples
            for (int u = 0; u < base; ++u) edges.emplace_back(v, u);
            for (int u : a3_added) edges.emplace_back(v, u);
        }
    }
    Graph g(base + extra, edges);
    if (!is_in_class(g).in_class()) return std::nullopt;
    return g;
}

// Chordal by construction: each new vertex is attached to a clique grown
// greedily inside the current graph, so insertion order reversed is a
// perfect elimination ordering.
inline Graph gen_chordal(Rng& rng, int max_n) {
    int n = rng.uniform(1, max_n);
    std::vector<std::pair<int, int>> edges;
    Graph g(1);
    for (int v = 1; v < n; ++v) {
        VertexSet clique(v);
        int u = rng.uniform(0, v - 1);
        clique.set(u);
        VertexSet candidates = g.neighbors(u);
        while (candidates.any() && rng.chance(0.6)) {
            std::vector<int> cs = candidates.to_vector();
            int w = cs[rng.uniform(0, int(cs.size()) - 1)];
            clique.set(w);
            candidates &= g.neighbors(w);
        }
        for (int w = clique.first(); w != -1; w = clique.next(w))
            edges.emplace_back(v, w);
        g = Graph(v + 1, edges);
    }
    return g;
}

} // namespace detail

// Deterministic under (family, options.seed): the same call produces the
// same instances, edge for edge. In-class families construct membership and
// certify it; random_filtered rejects out-of-class draws and reports the
// acceptance rate through `stats`; chordal_random targets the chordal
// coloring path and is exempt from the class filter.
inline std::vector<Instance> generate(Family family, const GenOptions& opt,
                                      GenStats* stats = nullptr) {
    Rng rng(opt.seed);
    std::vector<Instance> out;
    GenStats local;
    int floor_n = 1;
    switch (family) {
        case Family::chordal_random: floor_n = 1; break;
        case Family::random_filtered: floor_n = 4; break;
        case Family::special_blowup_m: floor_n = 7; break;
        case Family::blowup_m1: floor_n = 10; break;
        case Family::blowup_m2: floor_n = 9; break;
        default: floor_n = 5; break;
    }
    if (opt.max_n < floor_n)
        throw std::invalid_argument(std::string("generate: ") + family_name(family) +
                                    " needs max_n >= " + std::to_string(floor_n));
    auto push = [&](Graph g) {
        out.push_back({detail::instance_id(family, opt.seed, int(out.size())), family,
                       std::move(g)});
    };
    while (int(out.size()) < opt.count) {
        switch (family) {
            case Family::hyperhole: {
                Graph g = detail::gen_hyperhole(rng, opt.max_n);
                ++local.candidates;
                if (!is_in_class(g).in_class())
                    throw std::runtime_error("generate: hyperhole left the class");
                push(std::move(g));
                break;
            }
            case Family::equal_blowup_c5: {
                int t = 1 + int(out.size()) % std::max(1, std::min(3, opt.max_n / 5));
                ++local.candidates;
                push(realize({Graph::cycle(5), std::vector<int>(5, t), {}}).graph);
                break;
            }
            case Family::special_blowup_m:
            case Family::blowup_m1:
            case Family::blowup_m2: {
                Graph pattern = family == Family::special_blowup_m ? pattern_M()
                                : family == Family::blowup_m1      ? pattern_M1()
                                                                   : pattern_M2();
                int mandatory = family == Family::special_blowup_m ? 7 : pattern.n();
                Graph g = detail::gen_pattern_blowup(rng, pattern, mandatory, opt.max_n);
                ++local.candidates;
                if (!is_in_class(g).in_class())
                    throw std::runtime_error("generate: pattern blowup left the class");
                push(std::move(g));
                break;
            }
            case Family::nice_blowup_plus_attachments: {
                std::optional<Graph> g;
                for (int attempt = 0; attempt < 64 && !g; ++attempt) {
                    ++local.candidates;
                    // After sustained rejection fall back to bare blowups.
                    g = detail::gen_blowup_with_attachments(rng, opt.max_n,
                                                            attempt < 48 ? 3 : 0);
                    if (!g) ++local.rejected;
                }
                if (!g)
                    throw std::runtime_error(
                        "generate: attachments kept leaving the class; "
                        "class filter rejected 64 consecutive draws");
                push(std::move(*g));
                break;
            }
            case Family::chordal_random: {
                ++local.candidates;
                push(detail::gen_chordal(rng, opt.max_n));
                break;
            }
            case Family::random_filtered: {
                static const double sweep[] = {0.1, 0.2, 0.3, 0.5, 0.7, 0.85};
                Graph g(0);
                bool found = false;
                for (int attempt = 0; attempt < 4000 && !found; ++attempt) {
                    double p = sweep[local.candidates % 6];
                    int n = rng.uniform(4, std::min(opt.max_n, 12));
                    g = random_graph(rng, n, p);
                    ++local.candidates;
                    if (is_in_class(g).in_class())
                        found = true;
                    else
                        ++local.rejected;
                }
                if (!found)
                    throw std::runtime_error(
                        "generate: no in-class graph in 4000 random draws");
                push(std::move(g));
                break;
            }
        }
    }
    if (stats) *stats = local;
    return out;
}

// ---------------------------------------------------------------------------
// Lemma suite

enum class LemmaStatus { Verified, Violated, Skipped, ChoiceSensitive };

inline const char* lemma_status_name(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::Verified: return "VERIFIED";
        case LemmaStatus::Violated: return "VIOLATED";
        case LemmaStatus::Skipped: return "SKIPPED";
        case LemmaStatus::ChoiceSensitive: return "CHOICE-SENSITIVE";
    }
    return "?";
}

// One statement on one instance. The conclusion is evaluated only when the
// hypothesis held; a Violated report carries a witness precise enough to
// replay by hand. ChoiceSensitive marks conclusions that fail for some
// maximal nice blowups but hold for others - the statement's subject is then
// a particular choice of blowup, so this is not a counterexample.
struct LemmaReport {
    std::string lemma;
    std::string instance;
    bool hypothesis_held = false;
    std::string hypothesis_note;
    LemmaStatus conclusion = LemmaStatus::Skipped;
    std::string witness;
};

// A maximal nice blowup together with the attachment classification of the
// rest of the graph.
struct BlowupContext {
    NiceBlowup nb;
    AttachmentPartition at;
};

struct SuiteContext {
    std::string instance_id;
    const Graph* g = nullptr;
    ClassReport report;
    bool narrow = false;       // (P7, C4, C6, C7)-free
    bool cutset_free = false;  // connected with no clique cutset
    std::vector<BlowupContext> blowups;
};

namespace detail {

inline std::string blowup_key(const NiceBlowup& nb) {
    std::vector<std::string> parts;
    for (const auto& p : nb.parts) {
        std::string s;
        for (int v = p.first(); v != -1; v = p.next(v)) s += std::to_string(v) + ",";
        parts.push_back(s);
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + "|";
    return key;
}

} // namespace detail

// Every maximal nice blowup reachable by greedy growth from some induced C5,
// one entry per distinct part family.
inline std::vector<BlowupContext> maximal_nice_blowups(const Graph& g) {
    std::vector<BlowupContext> out;
    std::set<std::string> seen;
    for (const auto& hole : all_induced_holes(g, 5)) {
        auto check = find_maximal_nice_blowup(g, hole.vertices);
        if (!check.ok()) continue;
        std::string key = detail::blowup_key(*check.blowup);
        if (!seen.insert(key).second) continue;
        out.push_back({*check.blowup, classify_attachments(g, *check.blowup)});
    }
    return out;
}

inline SuiteContext make_suite_context(const Graph& g, std::string instance_id) {
    SuiteContext ctx;
    ctx.instance_id = std::move(instance_id);
    ctx.g = &g;
    ctx.report = is_in_class(g);
    ctx.narrow = ctx.report.in_narrow_class();
    if (ctx.narrow) {
        ctx.blowups = maximal_nice_blowups(g);
        ctx.cutset_free = g.is_connected() && !find_clique_cutset(g).has_value();
    }
    return ctx;
}

struct LemmaDef {
    std::string id;
    std::string statement;
    std::function<LemmaReport(const SuiteContext&)> run;
};

namespace detail {

// Per-blowup outcome of a conclusion check.
struct LocalResult {
    enum Kind { held, vacuous, violated } kind = held;
    std::string witness;
};

inline LocalResult local_held() { return {LocalResult::held, {}}; }
inline LocalResult local_vacuous(std::string why) {
    return {LocalResult::vacuous, std::move(why)};
}
inline LocalResult local_violated(std::string witness) {
    return {LocalResult::violated, std::move(witness)};
}

// Runs a per-blowup conclusion over every maximal nice blowup and folds the
// outcomes: a conclusion failing on every applicable blowup is a violation;
// failing on some but holding on another is choice-sensitive.
template <typename Fn>
LemmaReport fold_blowups(const SuiteContext& ctx, const std::string& id, Fn&& fn) {
    LemmaReport rep;
    rep.lemma = id;
    rep.instance = ctx.instance_id;
    if (!ctx.narrow) {
        rep.hypothesis_note = "graph leaves the (P7,C4,C6,C7)-free class";
        return rep;
    }
    if (ctx.blowups.empty()) {
        rep.hypothesis_note = "no nice blowup of C5 found";
        return rep;
    }
    rep.hypothesis_held = true;
    int held = 0, violated = 0, vacuous = 0;
    std::string first_witness, first_vacuous;
    for (const auto& bc : ctx.blowups) {
        LocalResult r = fn(bc);
        if (r.kind == LocalResult::held) ++held;
        if (r.kind == LocalResult::vacuous) {
            ++vacuous;
            if (first_vacuous.empty()) first_vacuous = r.witness;
        }
        if (r.kind == LocalResult::violated) {
            ++violated;
            if (first_witness.empty()) first_witness = r.witness;
        }
    }
    if (violated > 0) {
        rep.conclusion = held > 0 ? LemmaStatus::ChoiceSensitive : LemmaStatus::Violated;
        rep.witness = first_witness;
    } else if (held > 0) {
        rep.conclusion = LemmaStatus::Verified;
    } else {
        rep.hypothesis_held = false;
        rep.hypothesis_note = first_vacuous;
        rep.conclusion = LemmaStatus::Skipped;
    }
    return rep;
}

inline std::string vs_str(const VertexSet& s) {
    std::string out = "{";
    for (int v = s.first(); v != -1; v = s.next(v)) {
        if (out.size() > 1) out += ",";
        out += std::to_string(v);
    }
    return out + "}";
}

// Attachment union across all five indices.
inline VertexSet attach_union(const std::array<VertexSet, 5>& a, int n) {
    VertexSet out(n);
    for (const auto& s : a) out |= s;
    return out;
}

inline bool comparable_in(const Graph& g, int x, int y, const VertexSet& s) {
    VertexSet nx = g.neighbors_in(x, s);
    VertexSet ny = g.neighbors_in(y, s);
    return nx.is_subset_of(ny) || ny.is_subset_of(nx);
}

// Induced P4 a-b-c-d over four distinct vertices.
inline bool induced_p4(const Graph& g, int a, int b, int c, int d) {
    return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
           !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d);
}

// Connected vertex subsets of size 1..max_size, grown by adding neighbors.
inline std::vector<VertexSet> connected_subsets(const Graph& g, int max_size) {
    std::set<std::string> seen;
    std::vector<VertexSet> out, frontier;
    auto key = [](const VertexSet& s) { return vs_str(s); };
    for (int v = 0; v < g.n(); ++v) {
        VertexSet s = VertexSet::single(g.n(), v);
        out.push_back(s);
        frontier.push_back(s);
        seen.insert(key(s));
    }
    for (int size = 2; size <= max_size; ++size) {
        std::vector<VertexSet> next;
        for (const auto& s : frontier) {
            VertexSet cands = g.neighbors_of_set(s);
            for (int v = cands.first(); v != -1; v = cands.next(v)) {
                VertexSet t = s;
                t.set(v);
                if (seen.insert(key(t)).second) {
                    out.push_back(t);
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace detail

// The registered statements. Hypotheses shared by most entries: the graph is
// (P7,C4,C6,C7)-free and H = (B1..B5) ranges over the maximal nice blowups
// found by greedy growth from induced C5s; A0/A1(i)/A2(i)/A3(i)/A5 are the
// attachment classes of H and A'3(i) = A3(i) union B_i. Entries whose
// statement needs more (no clique cutset, size limits) say so and check it.
inline const std::vector<LemmaDef>& lemma_registry() {
    using detail::local_held;
    using detail::local_vacuous;
    using detail::local_violated;
    using detail::LocalResult;

    static const std::vector<LemmaDef> defs = [] {
        std::vector<LemmaDef> v;

        v.push_back({"part-neighborhoods-nested",
                     "inside each part, the neighborhoods in the two adjacent parts "
                     "are totally ordered by inclusion",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "part-neighborhoods-nested",
                                                     [&](const BlowupContext& bc) {
                             for (int i = 0; i < 5; ++i)
                                 if (!part_inclusion_chain(*ctx.g, bc.nb, i))
                                     return local_violated(
                                         "part " + std::to_string(i) +
                                         " has incomparable neighborhoods");
                             return local_held();
                         });
                     }});

        v.push_back({"support-consecutive",
                     "every vertex outside the blowup has consecutive support of "
                     "size 0, 1, 2, 3, or 5",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "support-consecutive",
                                                     [&](const BlowupContext& bc) {
                             if (!bc.at.any_invalid) return local_held();
                             int v = bc.at.invalid.first();
                             std::string supp;
                             for (int i : bc.at.by_vertex[v].supp)
                                 supp += std::to_string(i) + " ";
                             return local_violated("vertex " + std::to_string(v) +
                                                   " has support " + supp);
                         });
                     }});

        v.push_back({"full-support-complete-to-host",
                     "a vertex with support in all five parts is complete to the "
                     "whole blowup",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "full-support-complete-to-host",
                                                     [&](const BlowupContext& bc) {
                             if (bc.at.a5.none()) return local_vacuous("A5 is empty");
                             VertexSet host = bc.nb.all();
                             for (int x = bc.at.a5.first(); x != -1; x = bc.at.a5.next(x)) {
                                 VertexSet missing = host - ctx.g->neighbors(x);
                                 if (missing.any())
                                     return local_violated(
                                         "vertex " + std::to_string(x) + " misses " +
                                         std::to_string(missing.first()));
                             }
                             return local_held();
                         });
                     }});

        v.push_back({"full-support-clique-joined-to-triples",
                     "the full-support vertices form a clique complete to every "
                     "triple-support class",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx,
                                                     "full-support-clique-joined-to-triples",
                                                     [&](const BlowupContext& bc) {
                             if (bc.at.a5.none()) return local_vacuous("A5 is empty");
                             if (!ctx.g->is_clique(bc.at.a5))
                                 return local_violated("A5 is not a clique: " +
                                                       detail::vs_str(bc.at.a5));
                             for (int i = 0; i < 5; ++i) {
                                 if (bc.at.a3[i].none()) continue;
                                 if (!ctx.g->is_complete_between(bc.at.a5, bc.at.a3[i]))
                                     return local_violated(
                                         "A5 not complete to A3(" + std::to_string(i) +
                                         ")");
                             }
                             return local_held();
                         });
                     }});

        v.push_back({"pair-support-link-join",
                     "for a connected piece K of A2(i), the K-neighbors inside "
                     "A'3(i) are complete to the K-neighbors inside A'3(i+1)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "pair-support-link-join",
                                                     [&](const BlowupContext& bc) {
                             bool any = false;
                             for (int i = 0; i < 5; ++i) {
                                 if (bc.at.a2[i].none()) continue;
                                 any = true;
                                 for (const auto& k : ctx.g->components(bc.at.a2[i])) {
                                     VertexSet nk = ctx.g->neighbors_of_set(k);
                                     VertexSet left = nk & bc.at.a3_prime(bc.nb, i);
                                     VertexSet right =
                                         nk & bc.at.a3_prime(bc.nb, (i + 1) % 5);
                                     if (left.none() || right.none()) continue;
                                     if (!ctx.g->is_complete_between(left, right))
                                         return local_violated(
                                             "component " + detail::vs_str(k) +
                                             " of A2(" + std::to_string(i) +
                                             "): " + detail::vs_str(left) +
                                             " not complete to " +
                                             detail::vs_str(right));
                                 }
                             }
                             if (!any) return local_vacuous("A2 is empty");
                             return local_held();
                         });
                     }});

        v.push_back({"disjoint-support-nonedge",
                     "a single-support vertex and a vertex of support size at most "
                     "two are non-adjacent whenever their supports are disjoint and "
                     "together they miss two consecutive parts",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "disjoint-support-nonedge",
                                                     [&](const BlowupContext& bc) {
                             const Graph& g = *ctx.g;
                             int n = g.n();
                             VertexSet a1 = detail::attach_union(bc.at.a1, n);
                             VertexSet a12 = a1 | detail::attach_union(bc.at.a2, n);
                             bool applicable = false;
                             for (int u = a1.first(); u != -1; u = a1.next(u))
                                 for (int w = a12.first(); w != -1; w = a12.next(w)) {
                                     if (u == w) continue;
                                     const auto& su = bc.at.by_vertex[u].supp;
                                     const auto& sw = bc.at.by_vertex[w].supp;
                                     bool disjoint = true;
                                     for (int i : su)
                                         for (int j : sw)
                                             if (i == j) disjoint = false;
                                     if (!disjoint) continue;
                                     bool misses_two = false;
                                     for (int j = 0; j < 5 && !misses_two; ++j) {
                                         bool hit = false;
                                         for (int i : su)
                                             if (i == j || i == (j + 1) % 5) hit = true;
                                         for (int i : sw)
                                             if (i == j || i == (j + 1) % 5) hit = true;
                                         if (!hit) misses_two = true;
                                     }
                                     if (!misses_two) continue;
                                     applicable = true;
                                     if (g.has_edge(u, w))
                                         return local_violated(
                                             "edge " + std::to_string(u) + "-" +
                                             std::to_string(w));
                                 }
                             if (!applicable)
                                 return local_vacuous("no qualifying pair");
                             return local_held();
                         });
                     }});

        v.push_back({"single-support-far-triples-anticomplete",
                     "A1(i) is anticomplete to A3(i-2) and A3(i+2)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(
                             ctx, "single-support-far-triples-anticomplete",
                             [&](const BlowupContext& bc) {
                                 bool any = false;
                                 for (int i = 0; i < 5; ++i)
                                     for (int d : {2, 3}) {
                                         const VertexSet& x = bc.at.a1[i];
                                         const VertexSet& y = bc.at.a3[(i + d) % 5];
                                         if (x.none() || y.none()) continue;
                                         any = true;
                                         if (!ctx.g->is_anticomplete_between(x, y))
                                             return local_violated(
                                                 "A1(" + std::to_string(i) +
                                                 ") meets A3(" +
                                                 std::to_string((i + d) % 5) + ")");
                                     }
                                 if (!any) return local_vacuous("no qualifying pair");
                                 return local_held();
                             });
                     }});

        v.push_back({"pair-support-neighbors-anticomplete",
                     "A2(i) is anticomplete to A2(i-1) and A2(i+1)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(
                             ctx, "pair-support-neighbors-anticomplete",
                             [&](const BlowupContext& bc) {
                                 bool any = false;
                                 for (int i = 0; i < 5; ++i) {
                                     const VertexSet& x = bc.at.a2[i];
                                     const VertexSet& y = bc.at.a2[(i + 1) % 5];
                                     if (x.none() || y.none()) continue;
                                     any = true;
                                     if (!ctx.g->is_anticomplete_between(x, y))
                                         return local_violated(
                                             "A2(" + std::to_string(i) + ") meets A2(" +
                                             std::to_string((i + 1) % 5) + ")");
                                 }
                                 if (!any) return local_vacuous("no qualifying pair");
                                 return local_held();
                             });
                     }});

        v.push_back({"opposite-attachment-nonedge",
                     "outside vertices are non-adjacent when one meets B(i-1) and "
                     "B(i) but misses B(i-2) and B(i+2) while the other meets "
                     "B(i-2) and B(i+2) but misses B(i-1) and B(i); hence A3(i) is "
                     "anticomplete to A3(i+-2) and to A2(i+2), and A2(i) to "
                     "A2(i+-2)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "opposite-attachment-nonedge",
                                                     [&](const BlowupContext& bc) {
                             const Graph& g = *ctx.g;
                             VertexSet host = bc.nb.all();
                             VertexSet outside = g.vertices() - host;
                             bool any = false;
                             for (int u = outside.first(); u != -1; u = outside.next(u))
                                 for (int w = outside.first(); w != -1;
                                      w = outside.next(w)) {
                                     if (u == w) continue;
                                     for (int i = 0; i < 5; ++i) {
                                         auto hits = [&](int v, int p) {
                                             return g.neighbors(v).intersects(
                                                 bc.nb.parts[(i + p + 5) % 5]);
                                         };
                                         if (hits(u, -1) && hits(u, 0) && !hits(u, -2) &&
                                             !hits(u, 2) && hits(w, -2) && hits(w, 2) &&
                                             !hits(w, -1) && !hits(w, 0)) {
                                             any = true;
                                             if (g.has_edge(u, w))
                                                 return local_violated(
                                                     "edge " + std::to_string(u) + "-" +
                                                     std::to_string(w) + " at i=" +
                                                     std::to_string(i));
                                         }
                                     }
                                 }
                             if (!any) return local_vacuous("no qualifying pair");
                             return local_held();
                         });
                     }});

        v.push_back({"triple-support-neighbors-anticomplete",
                     "A3(i) is anticomplete to A3(i-1) and A3(i+1) (maximal blowup)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(
                             ctx, "triple-support-neighbors-anticomplete",
                             [&](const BlowupContext& bc) {
                                 bool any = false;
                                 for (int i = 0; i < 5; ++i) {
                                     const VertexSet& x = bc.at.a3[i];
                                     const VertexSet& y = bc.at.a3[(i + 1) % 5];
                                     if (x.none() || y.none()) continue;
                                     any = true;
                                     if (!ctx.g->is_anticomplete_between(x, y))
                                         return local_violated(
                                             "A3(" + std::to_string(i) + ") meets A3(" +
                                             std::to_string((i + 1) % 5) + ")");
                                 }
                                 if (!any) return local_vacuous("no qualifying pair");
                                 return local_held();
                             });
                     }});

        v.push_back({"pair-triple-far-anticomplete",
                     "A2(i) is anticomplete to A3(i+2) and A3(i-1) (maximal blowup)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "pair-triple-far-anticomplete",
                                                     [&](const BlowupContext& bc) {
                             bool any = false;
                             for (int i = 0; i < 5; ++i)
                                 for (int d : {2, 4}) {
                                     const VertexSet& x = bc.at.a2[i];
                                     const VertexSet& y = bc.at.a3[(i + d) % 5];
                                     if (x.none() || y.none()) continue;
                                     any = true;
                                     if (!ctx.g->is_anticomplete_between(x, y))
                                         return local_violated(
                                             "A2(" + std::to_string(i) + ") meets A3(" +
                                             std::to_string((i + d) % 5) + ")");
                                 }
                             if (!any) return local_vacuous("no qualifying pair");
                             return local_held();
                         });
                     }});

        v.push_back({"triple-support-misses-parts",
                     "v in A3(i) has a non-neighbor in B_i; a non-neighbor in "
                     "B(i-1) or B(i+1); and B_i minus N(v) is anticomplete to its "
                     "neighbors in B(i-1) or to those in B(i+1) (maximal blowup)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "triple-support-misses-parts",
                                                     [&](const BlowupContext& bc) {
                             const Graph& g = *ctx.g;
                             bool any = false;
                             for (int i = 0; i < 5; ++i) {
                                 const VertexSet& prev = bc.nb.parts[(i + 4) % 5];
                                 const VertexSet& next = bc.nb.parts[(i + 1) % 5];
                                 for (int x = bc.at.a3[i].first(); x != -1;
                                      x = bc.at.a3[i].next(x)) {
                                     any = true;
                                     VertexSet miss = bc.nb.parts[i] - g.neighbors(x);
                                     if (miss.none())
                                         return local_violated(
                                             "vertex " + std::to_string(x) +
                                             " is complete to B" + std::to_string(i));
                                     VertexSet mp = prev - g.neighbors(x);
                                     VertexSet mn = next - g.neighbors(x);
                                     if (mp.none() && mn.none())
                                         return local_violated(
                                             "vertex " + std::to_string(x) +
                                             " is complete to both neighbor parts");
                                     VertexSet np = g.neighbors_in(x, prev);
                                     VertexSet nn = g.neighbors_in(x, next);
                                     bool left = np.none() ||
                                                 g.is_anticomplete_between(miss, np);
                                     bool right = nn.none() ||
                                                  g.is_anticomplete_between(miss, nn);
                                     if (!left && !right)
                                         return local_violated(
                                             "non-neighbors of " + std::to_string(x) +
                                             " in B" + std::to_string(i) +
                                             " reach both sides");
                                 }
                             }
                             if (!any) return local_vacuous("A3 is empty");
                             return local_held();
                         });
                     }});

        v.push_back({"triple-support-comparable-in-center",
                     "vertices of A3(i) have pairwise comparable neighborhoods in "
                     "B_i, and some vertex of B_i has no neighbor in A3(i) "
                     "(maximal blowup)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(
                             ctx, "triple-support-comparable-in-center",
                             [&](const BlowupContext& bc) {
                                 const Graph& g = *ctx.g;
                                 bool any = false;
                                 for (int i = 0; i < 5; ++i) {
                                     if (bc.at.a3[i].none()) continue;
                                     any = true;
                                     std::vector<int> xs = bc.at.a3[i].to_vector();
                                     for (size_t a = 0; a < xs.size(); ++a)
                                         for (size_t b = a + 1; b < xs.size(); ++b)
                                             if (!detail::comparable_in(
                                                     g, xs[a], xs[b], bc.nb.parts[i]))
                                                 return local_violated(
                                                     "incomparable " +
                                                     std::to_string(xs[a]) + "," +
                                                     std::to_string(xs[b]) + " in B" +
                                                     std::to_string(i));
                                     bool found = false;
                                     for (int w = bc.nb.parts[i].first(); w != -1;
                                          w = bc.nb.parts[i].next(w))
                                         if (!g.neighbors(w).intersects(bc.at.a3[i]))
                                             found = true;
                                     if (!found)
                                         return local_violated(
                                             "every vertex of B" + std::to_string(i) +
                                             " has a neighbor in A3(" +
                                             std::to_string(i) + ")");
                                 }
                                 if (!any) return local_vacuous("A3 is empty");
                                 return local_held();
                             });
                     }});

        v.push_back({"extended-part-nonedge-split",
                     "non-adjacent vertices of A'3(i) have nested neighborhoods in "
                     "one of B(i-1), B(i+1) and disjoint neighborhoods in the other",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "extended-part-nonedge-split",
                                                     [&](const BlowupContext& bc) {
                             const Graph& g = *ctx.g;
                             bool any = false;
                             for (int i = 0; i < 5; ++i) {
                                 VertexSet s = bc.at.a3_prime(bc.nb, i);
                                 const VertexSet& prev = bc.nb.parts[(i + 4) % 5];
                                 const VertexSet& next = bc.nb.parts[(i + 1) % 5];
                                 std::vector<int> xs = s.to_vector();
                                 for (size_t a = 0; a < xs.size(); ++a)
                                     for (size_t b = a + 1; b < xs.size(); ++b) {
                                         int x = xs[a], y = xs[b];
                                         if (g.has_edge(x, y)) continue;
                                         any = true;
                                         bool comp_p =
                                             detail::comparable_in(g, x, y, prev);
                                         bool comp_n =
                                             detail::comparable_in(g, x, y, next);
                                         bool disj_p = !(g.neighbors_in(x, prev)
                                                             .intersects(
                                                                 g.neighbors_in(y, prev)));
                                         bool disj_n = !(g.neighbors_in(x, next)
                                                             .intersects(
                                                                 g.neighbors_in(y, next)));
                                         if (!((comp_p && disj_n) || (comp_n && disj_p)))
                                             return local_violated(
                                                 "pair " + std::to_string(x) + "," +
                                                 std::to_string(y) + " in A'3(" +
                                                 std::to_string(i) + ")");
                                     }
                             }
                             if (!any) return local_vacuous("no non-adjacent pair");
                             return local_held();
                         });
                     }});

        v.push_back({"triple-support-path-free",
                     "each A3(i) induces a P4-free graph",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "triple-support-path-free",
                                                     [&](const BlowupContext& bc) {
                             bool any = false;
                             for (int i = 0; i < 5; ++i) {
                                 if (bc.at.a3[i].none()) continue;
                                 any = true;
                                 auto sub = induced_subgraph(*ctx.g, bc.at.a3[i]);
                                 if (auto p = find_induced(sub.graph, Graph::path(4))) {
                                     std::string w;
                                     for (int x : *p)
                                         w += std::to_string(sub.to_parent[x]) + " ";
                                     return local_violated("induced P4: " + w);
                                 }
                             }
                             if (!any) return local_vacuous("A3 is empty");
                             return local_held();
                         });
                     }});

        v.push_back({"triple-support-edge-same-center",
                     "adjacent vertices of A3(i) have the same neighborhood in B_i",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx,
                                                     "triple-support-edge-same-center",
                                                     [&](const BlowupContext& bc) {
                             const Graph& g = *ctx.g;
                             bool any = false;
                             for (int i = 0; i < 5; ++i) {
                                 std::vector<int> xs = bc.at.a3[i].to_vector();
                                 for (size_t a = 0; a < xs.size(); ++a)
                                     for (size_t b = a + 1; b < xs.size(); ++b) {
                                         if (!g.has_edge(xs[a], xs[b])) continue;
                                         any = true;
                                         if (g.neighbors_in(xs[a], bc.nb.parts[i]) !=
                                             g.neighbors_in(xs[b], bc.nb.parts[i]))
                                             return local_violated(
                                                 "edge " + std::to_string(xs[a]) + "-" +
                                                 std::to_string(xs[b]) +
                                                 " differs in B" + std::to_string(i));
                                     }
                             }
                             if (!any) return local_vacuous("no edge inside any A3(i)");
                             return local_held();
                         });
                     }});

        v.push_back({"component-leaves-center-room",
                     "a component K of A3(i) leaves at least omega(K) non-neighbors "
                     "in B_i (maximal blowup; a violation is first re-tested by the "
                     "exchange that would grow the blowup)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "component-leaves-center-room",
                                                     [&](const BlowupContext& bc) {
                             const Graph& g = *ctx.g;
                             bool any = false;
                             for (int i = 0; i < 5; ++i) {
                                 for (const auto& k : g.components(bc.at.a3[i])) {
                                     any = true;
                                     VertexSet room =
                                         bc.nb.parts[i] - g.neighbors_of_set(k);
                                     auto sub = induced_subgraph(g, k);
                                     auto om = exact_omega(sub.graph);
                                     if (room.count() >= om.value) continue;
                                     // The statement's proof swaps B_i for
                                     // N_{B_i}(K) plus a maximum clique of K; if
                                     // that yields a valid nice blowup, ours was
                                     // not maximal in the sense the statement
                                     // needs, so the hypothesis lapses instead.
                                     VertexSet swapped =
                                         (bc.nb.parts[i] & g.neighbors_of_set(k)) |
                                         lift_to_parent(sub, om.witness_set, g.n());
                                     auto parts = bc.nb.parts;
                                     parts[i] = swapped;
                                     if (verify_nice_blowup(g, parts).ok())
                                         return local_vacuous(
                                             "blowup not size-maximal: exchanging B" +
                                             std::to_string(i) +
                                             " grows a nice blowup");
                                     return local_violated(
                                         "component " + detail::vs_str(k) + " of A3(" +
                                         std::to_string(i) + "): room " +
                                         std::to_string(room.count()) + " < omega " +
                                         std::to_string(om.value));
                                 }
                             }
                             if (!any) return local_vacuous("A3 is empty");
                             return local_held();
                         });
                     }});

        v.push_back({"extended-parts-path-blocked",
                     "no induced P4 a-b-c-d with a in A'3(i-2), b and c in "
                     "A'3(i-1), d in A'3(i)",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(ctx, "extended-parts-path-blocked",
                                                     [&](const BlowupContext& bc) {
                             const Graph& g = *ctx.g;
                             for (int i = 0; i < 5; ++i) {
                                 std::vector<int> as =
                                     bc.at.a3_prime(bc.nb, (i + 3) % 5).to_vector();
                                 std::vector<int> bs =
                                     bc.at.a3_prime(bc.nb, (i + 4) % 5).to_vector();
                                 std::vector<int> ds =
                                     bc.at.a3_prime(bc.nb, i).to_vector();
                                 for (int a : as)
                                     for (int b : bs)
                                         for (int c : bs) {
                                             if (b == c) continue;
                                             for (int d : ds)
                                                 if (detail::induced_p4(g, a, b, c, d))
                                                     return local_violated(
                                                         "P4 " + std::to_string(a) +
                                                         "-" + std::to_string(b) + "-" +
                                                         std::to_string(c) + "-" +
                                                         std::to_string(d));
                                         }
                             }
                             return local_held();
                         });
                     }});

        v.push_back({"no-near-path-seven",
                     "a (P7,C6,C7)-free graph has no seven-vertex walk whose first "
                     "six vertices induce a P6 and last five induce a P5",
                     [](const SuiteContext& ctx) {
                         LemmaReport rep;
                         rep.lemma = "no-near-path-seven";
                         rep.instance = ctx.instance_id;
                         if (!ctx.report.p7_free || !ctx.report.c6_free ||
                             !ctx.report.c7_free) {
                             rep.hypothesis_note = "graph is not (P7,C6,C7)-free";
                             return rep;
                         }
                         rep.hypothesis_held = true;
                         if (auto bad = has_bad_p7(*ctx.g)) {
                             rep.conclusion = LemmaStatus::Violated;
                             std::string w;
                             for (int x : *bad) w += std::to_string(x) + " ";
                             rep.witness = "bad P7: " + w;
                         } else {
                             rep.conclusion = LemmaStatus::Verified;
                         }
                         return rep;
                     }});

        v.push_back({"isolated-attachment-homogeneous",
                     "every attachment vertex with non-empty support is complete or "
                     "anticomplete to each component of the zero-support set",
                     [](const SuiteContext& ctx) {
                         return detail::fold_blowups(
                             ctx, "isolated-attachment-homogeneous",
                             [&](const BlowupContext& bc) {
                                 const Graph& g = *ctx.g;
                                 if (bc.at.a0.none())
                                     return local_vacuous("A0 is empty");
                                 VertexSet movers =
                                     detail::attach_union(bc.at.a1, g.n()) |
                                     detail::attach_union(bc.at.a2, g.n()) |
                                     detail::attach_union(bc.at.a3, g.n());
                                 if (movers.none())
                                     return local_vacuous("no attachment vertices");
                                 for (const auto& k : g.components(bc.at.a0))
                                     for (int x = movers.first(); x != -1;
                                          x = movers.next(x))
                                         if (g.mixes_on(x, k))
                                             return local_violated(
                                                 "vertex " + std::to_string(x) +
                                                 " mixes on component " +
                                                 detail::vs_str(k));
                                 return local_held();
                             });
                     }});

        // Pentagon-scope statements: one induced C5 at a time, S(X) the
        // vertices whose neighborhood on the pentagon is exactly X, S0 those
        // with none. These quantify over every induced C5, so any violation
        // counts.
        auto pentagon_lemma =
            [](const SuiteContext& ctx, const std::string& id, bool need_cutset_free,
               const std::function<std::optional<std::string>(
                   const Graph&, const std::vector<int>&, const std::array<VertexSet, 32>&,
                   const VertexSet&, bool&)>& check) {
                LemmaReport rep;
                rep.lemma = id;
                rep.instance = ctx.instance_id;
                if (!ctx.narrow) {
                    rep.hypothesis_note = "graph leaves the (P7,C4,C6,C7)-free class";
                    return rep;
                }
                if (need_cutset_free && !ctx.cutset_free) {
                    rep.hypothesis_note = "graph has a clique cutset or is disconnected";
                    return rep;
                }
                bool applicable = false;
                for (const auto& hole : all_induced_holes(*ctx.g, 5)) {
                    auto buckets = classify_by_c5(*ctx.g, hole.vertices);
                    for (const auto& k : ctx.g->components(buckets[0])) {
                        if (ctx.g->is_clique(k)) continue;
                        if (auto w = check(*ctx.g, hole.vertices, buckets, k, applicable)) {
                            rep.hypothesis_held = true;
                            rep.conclusion = LemmaStatus::Violated;
                            rep.witness = *w;
                            return rep;
                        }
                    }
                }
                rep.hypothesis_held = applicable;
                if (applicable)
                    rep.conclusion = LemmaStatus::Verified;
                else
                    rep.hypothesis_note = "no non-clique zero-support component";
                return rep;
            };

        auto mask_of = [](std::initializer_list<int> poss) {
            unsigned m = 0;
            for (int p : poss) m |= 1u << ((p % 5 + 5) % 5);
            return m;
        };

        v.push_back({"pentagon-far-pair-complete",
                     "for a non-clique component K of the pentagon's zero-support "
                     "set, every K-neighbor seeing exactly positions {i-2, i+2} is "
                     "complete to K",
                     [pentagon_lemma, mask_of](const SuiteContext& ctx) {
                         return pentagon_lemma(
                             ctx, "pentagon-far-pair-complete", false,
                             [mask_of](const Graph& g, const std::vector<int>&,
                                       const std::array<VertexSet, 32>& buckets,
                                       const VertexSet& k,
                                       bool& applicable) -> std::optional<std::string> {
                                 applicable = true;
                                 VertexSet nk = g.neighbors_of_set(k);
                                 for (int i = 0; i < 5; ++i) {
                                     VertexSet far =
                                         nk & buckets[mask_of({i - 2, i + 2})];
                                     for (int x = far.first(); x != -1; x = far.next(x))
                                         if (!k.is_subset_of(g.neighbors(x)))
                                             return "vertex " + std::to_string(x) +
                                                    " not complete to " +
                                                    detail::vs_str(k);
                                 }
                                 return std::nullopt;
                             });
                     }});

        v.push_back({"pentagon-triple-side-empty",
                     "a non-clique zero-support component has K-neighbors in at "
                     "most one of two triple buckets two apart",
                     [pentagon_lemma, mask_of](const SuiteContext& ctx) {
                         return pentagon_lemma(
                             ctx, "pentagon-triple-side-empty", false,
                             [mask_of](const Graph& g, const std::vector<int>&,
                                       const std::array<VertexSet, 32>& buckets,
                                       const VertexSet& k,
                                       bool& applicable) -> std::optional<std::string> {
                                 applicable = true;
                                 VertexSet nk = g.neighbors_of_set(k);
                                 for (int i = 0; i < 5; ++i) {
                                     VertexSet t1 =
                                         nk & buckets[mask_of({i - 1, i, i + 1})];
                                     VertexSet t2 =
                                         nk & buckets[mask_of({i + 1, i + 2, i + 3})];
                                     if (t1.any() && t2.any())
                                         return "triple buckets at " +
                                                std::to_string(i) + " and " +
                                                std::to_string((i + 2) % 5) +
                                                " both meet N(K)";
                                 }
                                 return std::nullopt;
                             });
                     }});

        v.push_back({"pentagon-nonadjacent-shape",
                     "with no clique cutset, non-adjacent K-neighbors of a "
                     "non-clique zero-support component form a triple-plus-far-pair "
                     "pattern, and the rotated double pattern never appears",
                     [pentagon_lemma, mask_of](const SuiteContext& ctx) {
                         return pentagon_lemma(
                             ctx, "pentagon-nonadjacent-shape", true,
                             [mask_of](const Graph& g, const std::vector<int>&,
                                       const std::array<VertexSet, 32>& buckets,
                                       const VertexSet& k,
                                       bool& applicable) -> std::optional<std::string> {
                                 VertexSet nk = g.neighbors_of_set(k);
                                 std::vector<int> ns = nk.to_vector();
                                 for (size_t a = 0; a < ns.size(); ++a)
                                     for (size_t b = a + 1; b < ns.size(); ++b) {
                                         int p = ns[a], q = ns[b];
                                         if (g.has_edge(p, q)) continue;
                                         applicable = true;
                                         bool shaped = false;
                                         for (int i = 0; i < 5 && !shaped; ++i) {
                                             unsigned tri = mask_of({i - 1, i, i + 1});
                                             unsigned far = mask_of({i - 2, i + 2});
                                             if ((buckets[tri].test(p) &&
                                                  buckets[far].test(q)) ||
                                                 (buckets[tri].test(q) &&
                                                  buckets[far].test(p)))
                                                 shaped = true;
                                         }
                                         if (!shaped)
                                             return "pair " + std::to_string(p) + "," +
                                                    std::to_string(q) +
                                                    " fits no pattern";
                                     }
                                 for (int i = 0; i < 5; ++i) {
                                     bool quad =
                                         (nk & buckets[mask_of({i - 1, i, i + 1})]).any() &&
                                         (nk & buckets[mask_of({i - 2, i + 2})]).any() &&
                                         (nk & buckets[mask_of({i, i + 1, i + 2})]).any() &&
                                         (nk & buckets[mask_of({i - 2, i - 1})]).any();
                                     if (quad) {
                                         applicable = true;
                                         return "double pattern at i=" +
                                                std::to_string(i);
                                     }
                                 }
                                 return std::nullopt;
                             });
                     }});

        v.push_back({"shared-clique-neighborhood-pair",
                     "in a connected cutset-free graph, a connected set K (size <= "
                     "3, n <= 12, X = V) whose neighborhood avoids the forbidden P4 "
                     "and admits a linking set Y (size <= 3) has two non-adjacent "
                     "neighbors complete to K, and K is a clique",
                     [](const SuiteContext& ctx) {
                         LemmaReport rep;
                         rep.lemma = "shared-clique-neighborhood-pair";
                         rep.instance = ctx.instance_id;
                         const Graph& g = *ctx.g;
                         if (!ctx.narrow) {
                             rep.hypothesis_note =
                                 "graph leaves the (P7,C4,C6,C7)-free class";
                             return rep;
                         }
                         if (!ctx.cutset_free) {
                             rep.hypothesis_note =
                                 "graph has a clique cutset or is disconnected";
                             return rep;
                         }
                         if (g.n() > 12) {
                             rep.hypothesis_note = "n > 12: triple search skipped";
                             return rep;
                         }
                         bool applicable = false;
                         for (const auto& k : detail::connected_subsets(g, 3)) {
                             VertexSet nk = g.neighbors_of_set(k);
                             VertexSet rest = g.vertices() - k - nk;
                             if (rest.none()) continue;
                             // Forbidden shape: induced P4 a-b-c-d with c in K
                             // and a, b in K or N(K); d is unrestricted.
                             bool clean = true;
                             VertexSet kn = k | nk;
                             for (int c = k.first(); c != -1 && clean; c = k.next(c))
                                 for (int b = kn.first(); b != -1 && clean;
                                      b = kn.next(b))
                                     for (int a = kn.first(); a != -1 && clean;
                                          a = kn.next(a)) {
                                         if (a == b || a == c || b == c) continue;
                                         for (int d = 0; d < g.n() && clean; ++d) {
                                             if (d == a || d == b || d == c) continue;
                                             if (detail::induced_p4(g, a, b, c, d))
                                                 clean = false;
                                         }
                                     }
                             if (!clean) continue;
                             std::vector<std::pair<int, int>> pairs;
                             std::vector<int> ns = nk.to_vector();
                             for (size_t a = 0; a < ns.size(); ++a)
                                 for (size_t b = a + 1; b < ns.size(); ++b)
                                     if (!g.has_edge(ns[a], ns[b]))
                                         pairs.emplace_back(ns[a], ns[b]);
                             if (pairs.empty()) continue;
                             bool linked = false;
                             // Y ranges over subsets of the outside, size 1..3.
                             std::vector<int> rs = rest.to_vector();
                             int rn = int(rs.size());
                             std::vector<VertexSet> ys;
                             for (int a = 0; a < rn; ++a) {
                                 VertexSet y1(g.n());
                                 y1.set(rs[a]);
                                 ys.push_back(y1);
                                 for (int b = a + 1; b < rn; ++b) {
                                     VertexSet y2 = y1;
                                     y2.set(rs[b]);
                                     ys.push_back(y2);
                                     for (int c = b + 1; c < rn; ++c) {
                                         VertexSet y3 = y2;
                                         y3.set(rs[c]);
                                         ys.push_back(y3);
                                     }
                                 }
                             }
                             for (const auto& y : ys) {
                                 bool ok = true;
                                 for (const auto& [p, q] : pairs) {
                                     VertexSet np = g.neighbors_in(p, y);
                                     VertexSet nq = g.neighbors_in(q, y);
                                     if (np.none() || nq.none() || np.intersects(nq) ||
                                         !g.is_complete_between(np, nq)) {
                                         ok = false;
                                         break;
                                     }
                                 }
                                 if (ok) {
                                     linked = true;
                                     break;
                                 }
                             }
                             if (!linked) continue;
                             applicable = true;
                             bool concluded = false;
                             for (const auto& [p, q] : pairs)
                                 if (k.is_subset_of(g.neighbors(p)) &&
                                     k.is_subset_of(g.neighbors(q)))
                                     concluded = true;
                             if (!concluded || !g.is_clique(k)) {
                                 rep.hypothesis_held = true;
                                 rep.conclusion = LemmaStatus::Violated;
                                 rep.witness = "K = " + detail::vs_str(k) +
                                               (concluded ? " is not a clique"
                                                          : " has no complete pair");
                                 return rep;
                             }
                         }
                         rep.hypothesis_held = applicable;
                         if (applicable)
                             rep.conclusion = LemmaStatus::Verified;
                         else
                             rep.hypothesis_note = "no qualifying (K, Y) found";
                         return rep;
                     }});

        return v;
    }();
    return defs;
}

inline std::vector<LemmaReport> evaluate_lemmas(const Graph& g,
                                                const std::string& instance_id) {
    SuiteContext ctx = make_suite_context(g, instance_id);
    std::vector<LemmaReport> out;
    for (const auto& def : lemma_registry()) out.push_back(def.run(ctx));
    return out;
}

// Aggregate over a corpus. `held` counts, per lemma, the instances where the
// hypothesis held, documenting how much exercise each statement got.
struct SuiteSummary {
    int instances = 0;
    int verified = 0;
    int violated = 0;
    int skipped = 0;
    int choice_sensitive = 0;
    std::map<std::string, int> held;
    std::vector<LemmaReport> violations;

    void absorb(const std::vector<LemmaReport>& reports) {
        ++instances;
        for (const auto& r : reports) {
            if (r.hypothesis_held) ++held[r.lemma];
            switch (r.conclusion) {
                case LemmaStatus::Verified: ++verified; break;
                case LemmaStatus::Violated:
                    ++violated;
                    violations.push_back(r);
                    break;
                case LemmaStatus::Skipped: ++skipped; break;
                case LemmaStatus::ChoiceSensitive: ++choice_sensitive; break;
            }
        }
    }
};

inline SuiteSummary run_lemma_suite(const std::vector<Instance>& corpus) {
    SuiteSummary s;
    for (const auto& inst : corpus)
        s.absorb(evaluate_lemmas(inst.graph, inst.id));
    return s;
}

} // namespace chibound
