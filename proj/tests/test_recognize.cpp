#include <catch2/catch_amalgamated.hpp>

#include "chibound/oracle.hpp"
#include "chibound/recognize.hpp"
#include "chibound/rng.hpp"

using namespace chibound;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5); // outer cycle
        edges.emplace_back(i, i + 5);       // spoke
        edges.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return Graph(10, edges);
}

} // namespace

TEST_CASE("induced path finder agrees with the definitions") {
    Graph p5 = Graph::path(5);
    auto w = find_induced_path(p5, 5);
    REQUIRE(w.has_value());
    CHECK(is_induced_path(p5, w->vertices));

    Graph c7 = Graph::cycle(7);
    CHECK(find_induced_path(c7, 6).has_value());
    CHECK_FALSE(find_induced_path(c7, 7).has_value());

    Graph k4 = Graph::complete_graph(4);
    CHECK(find_induced_path(k4, 2).has_value());
    CHECK_FALSE(find_induced_path(k4, 3).has_value());
}

TEST_CASE("is_induced_path rejects chords, repeats, and non-edges") {
    Graph c4 = Graph::cycle(4);
    CHECK(is_induced_path(c4, {0, 1, 2}));
    CHECK_FALSE(is_induced_path(c4, {0, 1, 2, 3})); // closing edge 3-0 is a chord
    CHECK_FALSE(is_induced_path(c4, {0, 2}));       // not an edge
    CHECK_FALSE(is_induced_path(c4, {0, 1, 0}));    // repeat
}

TEST_CASE("hole finder by parity and exact length") {
    Graph c5 = Graph::cycle(5);
    CHECK_FALSE(find_hole(c5, HoleParity::even).has_value());
    auto odd = find_hole(c5, HoleParity::odd);
    REQUIRE(odd.has_value());
    CHECK(odd->vertices.size() == 5);
    CHECK(is_hole(c5, odd->vertices));

    Graph c6 = Graph::cycle(6);
    auto even = find_hole(c6, HoleParity::even);
    REQUIRE(even.has_value());
    CHECK(even->vertices.size() == 6);

    // A chord kills the only hole.
    Graph diamond(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK_FALSE(find_hole(diamond, HoleParity::any).has_value());

    Graph c7 = Graph::cycle(7);
    CHECK(find_hole(c7, HoleParity::any, 7).has_value());
    CHECK_FALSE(find_hole(c7, HoleParity::any, 5).has_value());
    CHECK_FALSE(find_hole(c7, HoleParity::even, 7).has_value()); // parity filter
    CHECK_THROWS_AS(find_hole(c7, HoleParity::any, 3), std::invalid_argument);
}

TEST_CASE("all induced holes are canonical and complete") {
    Graph c5 = Graph::cycle(5);
    auto holes5 = all_induced_holes(c5, 5);
    REQUIRE(holes5.size() == 1);
    CHECK(holes5[0].vertices == std::vector<int>{0, 1, 2, 3, 4});

    auto pentagons = all_induced_holes(petersen(), 5);
    CHECK(pentagons.size() == 12);
    for (const auto& h : pentagons) {
        CHECK(is_hole(petersen(), h.vertices));
        int mn = *std::min_element(h.vertices.begin(), h.vertices.end());
        CHECK(h.vertices[0] == mn);
        CHECK(h.vertices[1] < h.vertices.back());
    }

    CHECK(all_induced_holes(Graph::complete_graph(6), 4).empty());
}

TEST_CASE("class membership reports carry witnesses") {
    ClassReport c5 = is_in_class(Graph::cycle(5));
    CHECK(c5.in_class());
    CHECK(c5.in_narrow_class());

    ClassReport c6 = is_in_class(Graph::cycle(6));
    CHECK_FALSE(c6.in_class());
    REQUIRE(c6.even_hole_witness.has_value());
    CHECK(c6.even_hole_witness->vertices.size() == 6);

    ClassReport c7 = is_in_class(Graph::cycle(7));
    CHECK(c7.in_class());
    CHECK_FALSE(c7.in_narrow_class()); // the 7-cycle itself
    CHECK_FALSE(c7.c7_free);

    ClassReport p7 = is_in_class(Graph::path(7));
    CHECK_FALSE(p7.in_class());
    REQUIRE(p7.p7_witness.has_value());
    CHECK(is_induced_path(Graph::path(7), p7.p7_witness->vertices));

    CHECK_FALSE(is_in_class(petersen()).even_hole_free);
    CHECK(is_in_class(Graph::complete_graph(8)).in_class());
}

TEST_CASE("chordality check yields a perfect elimination order") {
    CHECK(is_chordal(Graph::complete_graph(5)).has_value());
    CHECK(is_chordal(Graph::path(6)).has_value());
    CHECK(is_chordal(Graph::empty_graph(4)).has_value());
    CHECK_FALSE(is_chordal(Graph::cycle(4)).has_value());
    CHECK_FALSE(is_chordal(Graph::cycle(5)).has_value());

    // Interval graphs are chordal; verify the elimination order on a batch.
    Rng rng(20260818);
    for (int trial = 0; trial < 25; ++trial) {
        int n = rng.uniform(2, 14);
        std::vector<std::pair<int, int>> iv(n);
        for (auto& [a, b] : iv) {
            a = rng.uniform(0, 30);
            b = a + rng.uniform(0, 10);
        }
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second)
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        auto peo = is_chordal(g);
        REQUIRE(peo.has_value());
        REQUIRE(int(peo->size()) == n);
        VertexSet later = g.vertices();
        for (int v : *peo) {
            later.reset(v);
            CHECK(g.is_clique(g.neighbors_in(v, later)));
        }
    }
}

TEST_CASE("chordality agrees with hole search on random graphs") {
    Rng rng(40);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform(1, 9);
        Graph g = random_graph(rng, n, 0.4);
        bool chordal = is_chordal(g).has_value();
        bool hole = find_hole(g, HoleParity::any).has_value();
        CHECK(chordal == !hole);
    }
}

TEST_CASE("path and hole finders agree with brute-force containment") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(4, 8);
        Graph g = random_graph(rng, n, 0.45);
        for (int k = 4; k <= 7; ++k) {
            CHECK(find_induced_path(g, k).has_value() ==
                  brute_induced(g, Graph::path(k)));
            if (k <= n)
                CHECK(find_hole(g, HoleParity::any, k).has_value() ==
                      brute_induced(g, Graph::cycle(k)));
        }
    }
}

TEST_CASE("simplicial vertex selection by minimal outside neighborhood") {
    // Triangle x = {0,1,2}; outside y = {3,4}; 0 sees both, 1 sees 3, 2 sees
    // nothing, so 2 has the inclusion-minimal neighborhood in y.
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {1, 3}});
    VertexSet x(5, {0, 1, 2});
    VertexSet y(5, {3, 4});
    CHECK(minimal_simplicial_vertex(g, x, y, 0) == 2);
    CHECK(simplicial_vertices(g, x) == VertexSet(5, {0, 1, 2}));

    Graph p3 = Graph::path(3);
    VertexSet px(3, {0, 1, 2});
    VertexSet py(3);
    CHECK(simplicial_vertices(p3, px) == VertexSet(3, {0, 2}));
    CHECK_THROWS_AS(minimal_simplicial_vertex(p3, px, py, 1), std::invalid_argument);

    VertexSet overlap(5, {2, 3});
    CHECK_THROWS_AS(minimal_simplicial_vertex(g, x, overlap, 0), std::invalid_argument);
}

TEST_CASE("bad P7 walks are found exactly where they exist") {
    auto check_witness = [](const Graph& g, const std::array<int, 7>& w) {
        std::vector<int> p6(w.begin(), w.begin() + 6);
        std::vector<int> p5(w.begin() + 2, w.end());
        CHECK(is_induced_path(g, p6));
        CHECK(is_induced_path(g, p5));
        CHECK(g.has_edge(w[5], w[6]));
        std::vector<int> sorted(w.begin(), w.end());
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    };

    Graph p7 = Graph::path(7);
    auto w1 = has_bad_p7(p7);
    REQUIRE(w1.has_value());
    check_witness(p7, *w1);

    Graph c7 = Graph::cycle(7);
    auto w2 = has_bad_p7(c7);
    REQUIRE(w2.has_value());
    check_witness(c7, *w2);

    CHECK_FALSE(has_bad_p7(Graph::cycle(5)).has_value());
    CHECK_FALSE(has_bad_p7(Graph::cycle(6)).has_value());
    CHECK_FALSE(has_bad_p7(Graph::complete_graph(8)).has_value());
    CHECK_FALSE(has_bad_p7(Graph::path(6)).has_value());
}

TEST_CASE("induced sequence conditions, linear and cyclic") {
    Graph tri = Graph::complete_graph(3);
    std::vector<VertexSet> singles = {VertexSet(3, {0}), VertexSet(3, {1}),
                                      VertexSet(3, {2})};
    CHECK_FALSE(check_induced_sequence(tri, singles, false)); // 0-2 edge, non-consecutive
    CHECK(check_induced_sequence(tri, singles, true));

    Graph p6 = Graph::path(6);
    std::vector<VertexSet> pairs = {VertexSet(6, {0, 1}), VertexSet(6, {2, 3}),
                                    VertexSet(6, {4, 5})};
    CHECK(check_induced_sequence(p6, pairs, false));
    CHECK_FALSE(check_induced_sequence(p6, pairs, true)); // no closing edge

    Graph c6 = Graph::cycle(6);
    CHECK(check_induced_sequence(c6, pairs, true));

    std::vector<VertexSet> with_empty = {VertexSet(6, {0, 1}), VertexSet(6)};
    CHECK_FALSE(check_induced_sequence(p6, with_empty, false));

    std::vector<VertexSet> disconnected = {VertexSet(6, {0, 2}), VertexSet(6, {1})};
    CHECK_FALSE(check_induced_sequence(p6, disconnected, false));

    std::vector<VertexSet> overlapping = {VertexSet(6, {0, 1}), VertexSet(6, {1, 2})};
    CHECK_THROWS_AS(check_induced_sequence(p6, overlapping, false),
                    std::invalid_argument);
}
