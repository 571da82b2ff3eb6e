#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "chibound/blowup.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognize.hpp"

using namespace chibound;

namespace {

// Certifies that `parts` realize `pattern` inside g: parts are cliques,
// complete across pattern edges, anticomplete across pattern non-edges, and
// they cover every vertex.
void check_parts_realize(const Graph& g, const Graph& pattern,
                         const std::vector<VertexSet>& parts) {
    REQUIRE(int(parts.size()) == pattern.n());
    VertexSet all(g.n());
    for (const auto& p : parts) all |= p;
    CHECK(all == g.vertices());
    for (int i = 0; i < pattern.n(); ++i) {
        CHECK(g.is_clique(parts[i]));
        for (int j = i + 1; j < pattern.n(); ++j) {
            if (parts[i].none() || parts[j].none()) continue;
            if (pattern.has_edge(i, j))
                CHECK(g.is_complete_between(parts[i], parts[j]));
            else
                CHECK(g.is_anticomplete_between(parts[i], parts[j]));
        }
    }
}

} // namespace

TEST_CASE("realizing a blowup expands parts into cliques") {
    Realized unit = realize({Graph::cycle(5), {1, 1, 1, 1, 1}, {}});
    CHECK(unit.graph.edge_list() == Graph::cycle(5).edge_list());

    Realized r = realize({Graph::cycle(5), {2, 2, 2, 2, 2}, {}});
    CHECK(r.graph.n() == 10);
    CHECK(r.graph.has_edge(0, 1));        // same part
    CHECK(r.graph.has_edge(0, 2));        // consecutive parts complete
    CHECK(r.graph.has_edge(1, 3));
    CHECK_FALSE(r.graph.has_edge(0, 4));  // distance two
    CHECK(r.part_map[3] == 1);
    check_parts_realize(r.graph, Graph::cycle(5), r.parts);

    CHECK_THROWS_AS(realize({Graph::cycle(5), {1, 1, 1, 1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(realize({Graph::cycle(5), {1, 1, -1, 1, 1}, {}}),
                    std::invalid_argument);
}

TEST_CASE("hyperhole parameters") {
    CHECK_THROWS_AS(check_hyperhole({3, {1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(check_hyperhole({5, {1, 1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(check_hyperhole({5, {1, 1, 0, 1, 1}}), std::invalid_argument);

    Hyperhole h{5, {3, 1, 2, 1, 1}};
    CHECK(hyperhole_omega(h) == 4);
    CHECK(hyperhole_alpha(h) == 2);
    CHECK(hyperhole_omega({7, std::vector<int>(7, 2)}) == 4);
    CHECK(hyperhole_alpha({7, std::vector<int>(7, 2)}) == 3);
}

TEST_CASE("interval coloring of hyperholes hits the formula value") {
    std::vector<Hyperhole> cases = {
        {5, {1, 1, 1, 1, 1}},
        {5, {2, 2, 2, 2, 2}},
        {5, {3, 3, 3, 3, 3}},
        {5, {3, 1, 2, 1, 1}},
        {5, {4, 1, 1, 3, 2}},
        {7, {1, 1, 1, 1, 1, 1, 1}},
        {7, {2, 1, 2, 1, 2, 1, 1}},
        {4, {2, 3, 2, 1}},
        {6, {1, 2, 1, 1, 2, 1}},
        {9, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {8, {3, 1, 2, 2, 1, 1, 1, 2}},
    };
    for (const auto& h : cases) {
        int n = 0;
        for (int s : h.sizes) n += s;
        int expected = std::max(hyperhole_omega(h), ceil_div(n, hyperhole_alpha(h)));
        HyperholeColoring hc = hyperhole_chromatic(h);
        CHECK(hc.chi == expected);

        Realized r = realize_hyperhole(h);
        CHECK(is_proper_coloring(r.graph, hc.coloring));
        CHECK(color_count(hc.coloring) == hc.chi);
        if (r.graph.n() <= 12) CHECK(exact_chi(r.graph).value == hc.chi);

        auto arcs = hyperhole_part_colors(h);
        REQUIRE(int(arcs.size()) == h.k);
        for (int i = 0; i < h.k; ++i) REQUIRE(int(arcs[i].size()) == h.sizes[i]);
    }
}

TEST_CASE("equal-size pentagon blowups need exactly 3, 5, 8 colors") {
    CHECK(hyperhole_chromatic({5, {1, 1, 1, 1, 1}}).chi == 3);
    CHECK(hyperhole_chromatic({5, {2, 2, 2, 2, 2}}).chi == 5);
    CHECK(hyperhole_chromatic({5, {3, 3, 3, 3, 3}}).chi == 8);
}

TEST_CASE("the twelve-vertex pattern and its clique structure") {
    Graph m = pattern_M();
    REQUIRE(m.n() == 12);
    CHECK(exact_omega(m).value == 6);

    std::vector<VertexSet> expected;
    for (const auto& vs : std::vector<std::vector<int>>{
             {0, 1, 7, 8}, {1, 2, 7, 8}, {2, 3, 8, 9, 11}, {3, 4, 9}, {4, 5, 9},
             {5, 6, 7, 9, 10}, {0, 6, 7, 8}, {2, 7, 8, 9, 10, 11},
             {6, 7, 8, 9, 10, 11}}) {
        VertexSet s(12);
        for (int v : vs) s.set(v);
        expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(all_maximal_cliques(m) == expected);

    CHECK(is_in_class(m).in_class());
    CHECK(exact_chi(m).value <= bound_for_omega(6));

    Graph m1 = pattern_M1();
    REQUIRE(m1.n() == 10);
    CHECK(is_in_class(m1).in_class());

    Graph m2 = pattern_M2();
    REQUIRE(m2.n() == 9);
    CHECK(is_in_class(m2).in_class());
    CHECK_FALSE(m2.has_edge(7, 8));
}

TEST_CASE("figure hypotheses gate their part-size vectors") {
    for (FigureCase fc : all_figure_cases()) {
        FigureHypothesis hyp = figure_hypothesis(fc);
        std::vector<int> sizes(12, 3);
        for (int part = 1; part <= 12; ++part)
            if (hyp.need_empty & (1u << (part - 1))) sizes[part - 1] = 0;
        CHECK(figure_case_applies(fc, sizes));

        // Emptying a required part disqualifies the case.
        for (int part = 1; part <= 12; ++part)
            if (hyp.need_nonempty & (1u << (part - 1))) {
                std::vector<int> broken = sizes;
                broken[part - 1] = 0;
                CHECK_FALSE(figure_case_applies(fc, broken));
                break;
            }

        // Filling a required-empty part disqualifies it too.
        for (int part = 1; part <= 12; ++part)
            if (hyp.need_empty & (1u << (part - 1))) {
                std::vector<int> broken = sizes;
                broken[part - 1] = 3;
                CHECK_FALSE(figure_case_applies(fc, broken));
                break;
            }

        // The selection never asks for more vertices than a part holds.
        const auto& sel = figure_selection(fc);
        for (int part = 0; part < 12; ++part) {
            CHECK(int(sel[part].size()) <= 3);
            for (int c : sel[part]) {
                CHECK(c >= 0);
                CHECK(c < 5);
            }
        }
    }
}

TEST_CASE("figure selections verify as good subgraphs") {
    for (FigureCase fc : {FigureCase::L11L12, FigureCase::L10L11}) {
        FigureHypothesis hyp = figure_hypothesis(fc);
        std::vector<int> sizes(12, 3);
        for (int part = 1; part <= 12; ++part)
            if (hyp.need_empty & (1u << (part - 1))) sizes[part - 1] = 0;
        BlowupSpec spec{pattern_M(), sizes, {}};
        FigureWitness fw = figure_good_subgraph(fc, spec);
        int omega = exact_omega(fw.realized.graph).value;
        auto rep = verify_good_subgraph(fw.realized.graph, fw.witness, omega);
        INFO(rep.detail);
        CHECK(rep.ok);

        // Removing the selection drops the clique number by at least p.
        auto rest = induced_subgraph(fw.realized.graph,
                                     fw.realized.graph.vertices() - fw.witness.h);
        CHECK(exact_omega(rest.graph).value <= omega - fw.witness.p);
    }

    BlowupSpec wrong{Graph::cycle(12), std::vector<int>(12, 1), {}};
    CHECK_THROWS_AS(figure_good_subgraph(FigureCase::L11L12, wrong),
                    std::invalid_argument);
}

TEST_CASE("quotient by closed neighborhoods collapses true twins") {
    Realized r = realize({Graph::cycle(5), {2, 2, 2, 2, 2}, {}});
    Quotient q = quotient_by_closed_neighborhood(r.graph);
    REQUIRE(q.graph.n() == 5);
    CHECK(q.graph.edge_list() == Graph::cycle(5).edge_list());
    for (const auto& cls : q.classes) CHECK(cls.count() == 2);

    CHECK(quotient_by_closed_neighborhood(Graph::complete_graph(4)).graph.n() == 1);
    CHECK(quotient_by_closed_neighborhood(Graph::path(4)).graph.n() == 4);
    CHECK(quotient_by_closed_neighborhood(Graph::cycle(4)).graph.n() == 4);
}

TEST_CASE("hyperhole detection recovers the cyclic structure") {
    Hyperhole h{5, {2, 1, 3, 1, 1}};
    Realized r = realize_hyperhole(h);
    auto parts = detect_hyperhole(r.graph);
    REQUIRE(parts.has_value());
    REQUIRE(parts->size() == 5);
    check_parts_realize(r.graph, Graph::cycle(5), *parts);
    std::multiset<int> found, want(h.sizes.begin(), h.sizes.end());
    for (const auto& p : *parts) found.insert(p.count());
    CHECK(found == want);

    Realized r6 = realize_hyperhole({6, {1, 2, 1, 1, 2, 1}});
    auto parts6 = detect_hyperhole(r6.graph);
    REQUIRE(parts6.has_value());
    check_parts_realize(r6.graph, Graph::cycle(6), *parts6);

    auto c4 = detect_hyperhole(Graph::cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->size() == 4);

    CHECK_FALSE(detect_hyperhole(Graph::complete_graph(4)).has_value());
    CHECK_FALSE(detect_hyperhole(Graph::path(5)).has_value());
    Graph pendant(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    CHECK_FALSE(detect_hyperhole(pendant).has_value());
}

TEST_CASE("special blowup detection maps parts back to the pattern") {
    Graph m = pattern_M();

    std::vector<int> all_ones(12, 1);
    Realized r1 = realize({m, all_ones, {}});
    auto parts1 = detect_special_blowup_M(r1.graph);
    REQUIRE(parts1.has_value());
    check_parts_realize(r1.graph, m, {parts1->begin(), parts1->end()});

    std::vector<int> doubled = all_ones;
    doubled[0] = 2;
    doubled[8] = 3;
    Realized r2 = realize({m, doubled, {}});
    auto parts2 = detect_special_blowup_M(r2.graph);
    REQUIRE(parts2.has_value());
    check_parts_realize(r2.graph, m, {parts2->begin(), parts2->end()});
    std::multiset<int> found2, want2(doubled.begin(), doubled.end());
    for (const auto& p : *parts2) found2.insert(p.count());
    CHECK(found2 == want2);

    std::vector<int> no_tail = {1, 1, 1, 1, 1, 1, 1, 2, 2, 0, 0, 0};
    Realized r3 = realize({m, no_tail, {}});
    auto parts3 = detect_special_blowup_M(r3.graph);
    REQUIRE(parts3.has_value());
    check_parts_realize(r3.graph, m, {parts3->begin(), parts3->end()});
    int empties = 0;
    for (const auto& p : *parts3) empties += p.none() ? 1 : 0;
    CHECK(empties == 3);

    CHECK_FALSE(detect_special_blowup_M(Graph::cycle(5)).has_value());
    CHECK_FALSE(detect_special_blowup_M(Graph::complete_graph(6)).has_value());
}
