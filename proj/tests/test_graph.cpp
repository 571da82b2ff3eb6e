#include <catch2/catch_amalgamated.hpp>

#include "chibound/bitset.hpp"
#include "chibound/graph.hpp"

using namespace chibound;

TEST_CASE("vertex set algebra") {
    VertexSet a(130, {0, 5, 64, 129});
    VertexSet b(130, {5, 64, 100});

    CHECK(a.count() == 4);
    CHECK((a & b).to_vector() == std::vector<int>{5, 64});
    CHECK((a | b).count() == 5);
    CHECK((a - b).to_vector() == std::vector<int>{0, 129});
    CHECK(a.intersects(b));
    CHECK((a & b).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));

    VertexSet c = ~VertexSet::full(130);
    CHECK(c.none());
    CHECK(VertexSet::full(130).count() == 130);

    SECTION("iteration visits members in order") {
        std::vector<int> seen;
        for (int v = a.first(); v != -1; v = a.next(v)) seen.push_back(v);
        CHECK(seen == std::vector<int>{0, 5, 64, 129});
    }

    SECTION("universe mismatch is rejected") {
        VertexSet small(5);
        CHECK_THROWS_AS(a & small, std::invalid_argument);
    }
}

TEST_CASE("graph basics") {
    Graph c5 = Graph::cycle(5);
    CHECK(c5.n() == 5);
    CHECK(c5.m() == 5);
    CHECK(c5.has_edge(0, 1));
    CHECK(c5.has_edge(4, 0));
    CHECK_FALSE(c5.has_edge(0, 2));
    CHECK(c5.degree(3) == 2);
    CHECK(c5.is_connected());

    Graph k4 = Graph::complete_graph(4);
    CHECK(k4.m() == 6);
    CHECK(k4.is_clique(VertexSet::full(4)));
    CHECK(k4.is_universal(2));

    Graph p3 = Graph::path(3);
    CHECK(p3.is_simplicial(0));
    CHECK_FALSE(p3.is_simplicial(1));
}

TEST_CASE("complete and anticomplete between sets") {
    Graph c5 = Graph::cycle(5);
    CHECK(c5.is_complete_between(VertexSet(5, {0}), VertexSet(5, {1})));
    CHECK(c5.is_anticomplete_between(VertexSet(5, {0}), VertexSet(5, {2, 3})));
    CHECK_FALSE(c5.is_complete_between(VertexSet(5, {0}), VertexSet(5, {1, 2})));
    CHECK_THROWS_AS(c5.is_complete_between(VertexSet(5, {0, 1}), VertexSet(5, {1})),
                    std::invalid_argument);

    SECTION("complete and anticomplete together force an empty side") {
        Graph g(6, {{0, 1}, {2, 3}});
        VertexSet empty(6);
        VertexSet some(6, {0, 1});
        CHECK(g.is_complete_between(empty, some));
        CHECK(g.is_anticomplete_between(empty, some));
    }
}

TEST_CASE("mixes_on") {
    Graph p3 = Graph::path(3);
    CHECK(p3.mixes_on(0, VertexSet(3, {1, 2})));

    Graph k3 = Graph::complete_graph(3);
    CHECK_FALSE(k3.mixes_on(0, VertexSet(3, {1, 2})));

    Graph c5 = Graph::cycle(5);
    CHECK_FALSE(c5.mixes_on(0, VertexSet(5, {2, 3})));
    CHECK_THROWS_AS(c5.mixes_on(0, VertexSet(5, {0, 1})), std::invalid_argument);

    SECTION("mixes_on equals neither complete nor anticomplete") {
        Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
        for (int v = 0; v < 5; ++v) {
            VertexSet s(5, {1, 3});
            if (s.test(v)) continue;
            VertexSet vv = VertexSet::single(5, v);
            bool mix = g.mixes_on(v, s);
            bool comp = g.is_complete_between(vv, s);
            bool anti = g.is_anticomplete_between(vv, s);
            CHECK(mix == (!comp && !anti));
        }
    }
}

TEST_CASE("induced subgraph") {
    SECTION("three consecutive cycle vertices induce a path") {
        Graph c5 = Graph::cycle(5);
        auto sub = induced_subgraph(c5, VertexSet(5, {0, 1, 2}));
        CHECK(sub.graph.n() == 3);
        CHECK(sub.graph.m() == 2);
        CHECK(sub.graph.degree(1) == 2);
        CHECK(sub.to_parent == std::vector<int>{0, 1, 2});
    }

    SECTION("two vertices of a clique induce an edge") {
        Graph k4 = Graph::complete_graph(4);
        auto sub = induced_subgraph(k4, VertexSet(4, {0, 1}));
        CHECK(sub.graph.n() == 2);
        CHECK(sub.graph.has_edge(0, 1));
    }

    SECTION("full set round-trips") {
        Graph g(6, {{0, 3}, {1, 4}, {2, 5}, {0, 5}});
        auto sub = induced_subgraph(g, VertexSet::full(6));
        CHECK(sub.graph.n() == 6);
        CHECK(sub.graph.edge_list() == g.edge_list());
    }

    SECTION("empty set yields the empty graph") {
        Graph g = Graph::cycle(4);
        auto sub = induced_subgraph(g, VertexSet(4));
        CHECK(sub.graph.n() == 0);
    }
}

TEST_CASE("components") {
    Graph g(7, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = g.components();
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].to_vector() == std::vector<int>{0, 1, 2});
    CHECK(comps[1].to_vector() == std::vector<int>{3, 4});
    CHECK(comps[2].to_vector() == std::vector<int>{5});
    CHECK(comps[3].to_vector() == std::vector<int>{6});

    SECTION("components within a restricted set") {
        auto inner = g.components(VertexSet(7, {0, 2, 3, 4}));
        REQUIRE(inner.size() == 3);
        CHECK(inner[0].count() == 1);
        CHECK(inner[2].to_vector() == std::vector<int>{3, 4});
    }
}

TEST_CASE("neighbors of a set") {
    Graph c6 = Graph::cycle(6);
    VertexSet s(6, {0, 1});
    CHECK(c6.neighbors_of_set(s).to_vector() == std::vector<int>{2, 5});
}

TEST_CASE("adjacency construction guards") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::out_of_range);
    std::vector<VertexSet> rows(2, VertexSet(2));
    rows[0].set(1);
    CHECK_THROWS_AS(Graph::from_adjacency(rows), std::invalid_argument);
}
