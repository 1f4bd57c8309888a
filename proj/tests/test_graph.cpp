#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmis/graph.hpp"
#include "rmis/io.hpp"
#include "testutil.hpp"

#include <random>

using namespace rmis;

TEST_CASE("construction canonicalizes and validates")
{
    Graph tri = testutil::triangle();
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    Graph single(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    Graph c4 = testutil::square();
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(3, 0));
    CHECK_FALSE(c4.has_edge(0, 2));

    // duplicates collapse, reversed pairs are canonicalized
    Graph dup(3, {{1, 0}, {0, 1}, {1, 2}});
    CHECK(dup.edge_count() == 2);

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("connectivity and components")
{
    CHECK(is_connected(testutil::triangle()));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));

    auto comps = connected_components(Graph(4, {{0, 1}, {2, 3}}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of(4, {0, 1}));
    CHECK(comps[1] == VertexSet::of(4, {2, 3}));

    CHECK(connected_components(testutil::triangle()).size() == 1);
    CHECK(connected_components(Graph(3, {})).size() == 3);
}

TEST_CASE("bipartition")
{
    auto bp = bipartition(testutil::square());
    REQUIRE(bp.has_value());
    CHECK(bp->side == std::vector<int>{0, 1, 0, 1});

    CHECK_FALSE(bipartition(testutil::triangle()).has_value());

    auto path = bipartition(Graph(3, {{0, 1}, {1, 2}}));
    REQUIRE(path.has_value());
    CHECK(path->side == std::vector<int>{0, 1, 0});
}

TEST_CASE("remove_edges")
{
    Graph tri = testutil::triangle();
    Graph cut = remove_edges(tri, {{0, 1}});
    CHECK(cut.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(tri.edge_count() == 3); // input untouched

    Graph c4 = testutil::square();
    CHECK(remove_edges(c4, {}).edges() == c4.edges());
    Graph split = remove_edges(c4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(split));

    CHECK_THROWS_AS(remove_edges(c4, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("induced_subgraph")
{
    Graph bull = testutil::bull();
    auto [tri, map] = induced_subgraph(bull, VertexSet::of(5, {1, 2, 3}));
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(map.original(0) == 1);
    CHECK(map.local(3) == 2);
    CHECK(map.local(0) == -1);

    VertexSet all(5);
    for (int v = 0; v < 5; ++v)
        all.insert(v);
    auto [copy, idmap] = induced_subgraph(bull, all);
    CHECK(copy.edges() == bull.edges());
    CHECK(idmap.original(4) == 4);

    auto [lone, _] = induced_subgraph(testutil::triangle(), VertexSet::of(3, {0}));
    CHECK(lone.vertex_count() == 1);
    CHECK(lone.edge_count() == 0);
}

TEST_CASE("properties on random graphs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gen_random_connected(2 + static_cast<int>(rng() % 12), 0.3, rng());

        // handshake identity
        long long degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            degree_sum += g.degree(v);
        CHECK(degree_sum == 2LL * g.edge_count());

        // remove then re-add round trip
        std::vector<Edge> f;
        for (size_t i = 0; i < g.edges().size(); i += 2)
            f.push_back(g.edges()[i]);
        Graph stripped = remove_edges(g, f);
        std::vector<Edge> back = stripped.edges();
        back.insert(back.end(), f.begin(), f.end());
        CHECK(Graph(g.vertex_count(), back).edges() == g.edges());

        // bipartition has no monochromatic edge when present
        if (auto bp = bipartition(g))
            for (const auto& [u, v] : g.edges())
                CHECK(bp->side[u] != bp->side[v]);

        CHECK(is_connected(g) == (connected_components(g).size() <= 1));
    }
}
