#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmis/io.hpp"
#include "testutil.hpp"

#include <random>

using namespace rmis;

TEST_CASE("edge list with header")
{
    ParsedGraph p = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(p.graph.edges() == testutil::square().edges());
    CHECK(p.original_label == std::vector<int>{0, 1, 2, 3});

    // comments and blank lines are ignored
    ParsedGraph q = parse_graph("# a square\n4 4\n\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(q.graph.edge_count() == 4);

    // isolated vertices survive via the header count
    ParsedGraph iso = parse_graph("5 1\n0 1\n");
    CHECK(iso.graph.vertex_count() == 5);
}

TEST_CASE("headerless edge list compacts labels")
{
    ParsedGraph p = parse_graph("10 20\n20 30\n30 10\n");
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.graph.edge_count() == 3);
    CHECK(p.original_label == std::vector<int>{10, 20, 30});

    // first line reads as a header only when consistent with the body
    ParsedGraph notheader = parse_graph("0 1\n1 2\n");
    CHECK(notheader.graph.vertex_count() == 3);
    CHECK(notheader.graph.edge_count() == 2);

    // "2 1" over one following line with small ids is a header
    ParsedGraph header = parse_graph("2 1\n0 1\n");
    CHECK(header.graph.vertex_count() == 2);
    CHECK(header.graph.edge_count() == 1);
}

TEST_CASE("edge list errors")
{
    CHECK_THROWS_AS(parse_graph("1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("a b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 3\n0 0\n1 2\n2 0\n"), ParseError); // self-loop
    CHECK_THROWS_AS(parse_graph("3 3\n0 1\n1 0\n1 2\n"), ParseError); // duplicate
    CHECK_THROWS_AS(parse_graph("-1 2\n"), ParseError);

    try {
        parse_graph("3 3\n0 1\n1 2\n2 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("dimacs")
{
    ParsedGraph p = parse_graph("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    CHECK(p.graph.edges() == testutil::square().edges());
    CHECK(p.original_label == std::vector<int>{1, 2, 3, 4});

    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 0 1\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 1\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\ne 2 1\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::Dimacs), ParseError);
}

TEST_CASE("format detection")
{
    CHECK(parse_graph("p edge 2 1\ne 1 2\n").graph.vertex_count() == 2);
    CHECK(parse_graph("0 1\n").graph.vertex_count() == 2);
    // explicit format overrides sniffing
    CHECK_THROWS_AS(parse_graph("0 1\n", GraphFormat::Dimacs), ParseError);
}

TEST_CASE("serialization round trips")
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gen_random_connected(2 + static_cast<int>(rng() % 10), 0.3, rng());
        CHECK(parse_graph(serialize_edgelist(g)).graph.edges() == g.edges());
        ParsedGraph d = parse_graph(serialize_dimacs(g));
        CHECK(d.graph.edges() == g.edges());
        CHECK(parse_graph(serialize_edgelist(g)).graph.vertex_count() == g.vertex_count());
    }
}

TEST_CASE("generators")
{
    CHECK(gen_path(1).edge_count() == 0);
    CHECK(gen_path(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(gen_cycle(3).edges() == testutil::triangle().edges());
    CHECK(gen_cycle(4).edges() == testutil::square().edges());
    CHECK(gen_star(3).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(gen_complete_bipartite(2, 2).edge_count() == 4);
    CHECK(gen_complete_bipartite(3, 4).edge_count() == 12);
    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_path(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_complete_bipartite(0, 3), std::invalid_argument);

    Graph sput = gen_sputnik(testutil::triangle());
    CHECK(sput.vertex_count() == 6);
    CHECK(sput.edge_count() == 6);
    CHECK(gen_sputnik(gen_path(4)).vertex_count() == 4); // no cycle vertices

    // deterministic per seed, connected, different seeds usually differ
    Graph a = gen_random_connected(12, 0.3, 42);
    Graph b = gen_random_connected(12, 0.3, 42);
    CHECK(a.edges() == b.edges());
    CHECK(is_connected(a));
    CHECK(a.edge_count() >= 11);
    Graph c = gen_random_connected(12, 0.3, 43);
    CHECK(a.edges() != c.edges());
    CHECK_THROWS_AS(gen_random_connected(5, 1.5, 1), std::invalid_argument);

    ParsedGraph fixture = gen_fixture_component_b();
    CHECK(fixture.graph.vertex_count() == 8);
    CHECK(fixture.graph.edge_count() == 9);
    CHECK(fixture.original_label == std::vector<int>{1, 2, 6, 8, 9, 10, 11, 13});
}

TEST_CASE("file parsing")
{
    CHECK_THROWS_AS(parse_graph_file("/nonexistent/graph.txt"), ParseError);
}
