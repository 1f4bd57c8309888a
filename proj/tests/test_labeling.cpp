#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmis/io.hpp"
#include "rmis/labeling.hpp"
#include "rmis/oracle.hpp"
#include "testutil.hpp"

#include <random>

using namespace rmis;

namespace {

LabelSet make(bool pi, bool po, bool pe)
{
    LabelSet l;
    l.pi = pi;
    l.po = po;
    l.pe = pe;
    return l;
}

const LabelSet kPi = make(true, false, false);
const LabelSet kPo = make(false, true, false);
const LabelSet kPe = make(false, false, true);
const LabelSet kPiPo = make(true, true, false);
const LabelSet kPiPe = make(true, false, true);

} // namespace

TEST_CASE("pendant rule")
{
    Graph bull = testutil::bull();
    auto tree = build_abc_tree(analyze_blocks(bull), bull);
    REQUIRE(tree.has_value());
    for (int x = 0; x < tree->size(); ++x) {
        if (tree->node(x).kind == NodeKind::Pendant)
            CHECK(label_pendant(*tree, x) == kPiPe);
        else
            CHECK_THROWS_AS(label_pendant(*tree, x), std::invalid_argument);
    }
}

TEST_CASE("articulation rule")
{
    CHECK(label_articulation({kPi}) == kPi);
    CHECK(label_articulation({kPo}) == kPo);
    CHECK(label_articulation({kPe}) == kPe);
    CHECK(label_articulation({kPiPo}) == kPiPo);
    CHECK(label_articulation({kPiPe}) == kPiPe);
    // PI requires every child PI; PO wins over PE among the out children
    CHECK(label_articulation({kPi, kPo}).empty());
    CHECK(label_articulation({kPiPo, kPiPe}) == kPiPo);
    CHECK(label_articulation({kPiPe, kPiPe}) == kPiPe);
    CHECK(label_articulation({kPiPo, kPe}) == kPo);
    CHECK(label_articulation({kPi, kPiPe}) == kPi);
    CHECK_THROWS_AS(label_articulation({}), std::invalid_argument);
}

TEST_CASE("bridge rule")
{
    CHECK(label_bridge(kPi) == kPo);
    CHECK(label_bridge(kPe) == kPi);
    CHECK(label_bridge(kPo) == kPiPe);
    CHECK(label_bridge(kPiPe) == kPiPo);
    CHECK(label_bridge(kPiPo) == kPiPo); // PO+PE collapses to PO
    CHECK(label_bridge(LabelSet{}).empty());
}

TEST_CASE("is_satisfiable on unconstrained components")
{
    // even cycle: bipartite, trivially satisfiable
    ComponentProblem even;
    even.component = testutil::square();
    even.constraints.assign(4, LabelSet{});
    SatResult r = is_satisfiable(even);
    REQUIRE(r.satisfiable);
    CHECK(r.selected == VertexSet::of(4, {0, 2}));

    // odd cycle: not bipartite, no escape through PO edges
    ComponentProblem odd;
    odd.component = testutil::triangle();
    odd.constraints.assign(3, LabelSet{});
    CHECK_FALSE(is_satisfiable(odd).satisfiable);
}

TEST_CASE("is_satisfiable honors exact constraints")
{
    // square with vertex 0 forced in: 0 and 2 selected
    ComponentProblem p;
    p.component = testutil::square();
    p.constraints.assign(4, LabelSet{});
    p.constraints[0] = kPi;
    SatResult r = is_satisfiable(p);
    REQUIRE(r.satisfiable);
    CHECK(r.selected.contains(0));
    CHECK(r.selected.contains(2));

    // forcing adjacent vertices both in is contradictory
    p.constraints[1] = kPi;
    CHECK_FALSE(is_satisfiable(p).satisfiable);

    // vertex 0 out instead: the odd side is selected
    p.constraints[0] = kPo;
    p.constraints[1] = LabelSet{};
    r = is_satisfiable(p);
    REQUIRE(r.satisfiable);
    CHECK(r.selected == VertexSet::of(4, {1, 3}));
}

TEST_CASE("is_satisfiable with PO edges on a triangle")
{
    // two adjacent PO vertices excuse their shared edge from the
    // bipartiteness requirement
    ComponentProblem p;
    p.component = testutil::triangle();
    p.constraints.assign(3, LabelSet{});
    p.constraints[0] = kPiPo;
    p.constraints[1] = kPiPo;
    SatResult r = is_satisfiable(p);
    REQUIRE(r.satisfiable);
    CHECK(r.selected == VertexSet::of(3, {2}));
}

TEST_CASE("attachment flag")
{
    ComponentProblem p;
    p.component = testutil::square();
    p.constraints.assign(4, LabelSet{});
    p.attachment = 1;

    p.flag = StatusFlag::In;
    SatResult r = is_satisfiable(p);
    REQUIRE(r.satisfiable);
    CHECK(r.selected == VertexSet::of(4, {1, 3}));

    p.flag = StatusFlag::Out;
    r = is_satisfiable(p);
    REQUIRE(r.satisfiable);
    CHECK(r.selected == VertexSet::of(4, {0, 2}));
}

TEST_CASE("nine-edge fixture component")
{
    // cycle 1-2-6-8-9-10-11-13 with chord 2-11; articulation constraints
    // from the surrounding tree; attachment vertex 10
    ParsedGraph fixture = gen_fixture_component_b();
    const Graph& g = fixture.graph;
    REQUIRE(g.vertex_count() == 8);
    REQUIRE(g.edge_count() == 9);

    auto local = [&](int original) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (fixture.original_label[v] == original)
                return v;
        FAIL("missing label");
        return -1;
    };

    ComponentProblem p;
    p.component = g;
    p.constraints.assign(8, LabelSet{});
    p.constraints[local(2)] = kPiPo;
    p.constraints[local(6)] = kPiPo;
    p.constraints[local(11)] = kPiPo;
    p.constraints[local(8)] = kPi;
    p.attachment = local(10);

    p.flag = StatusFlag::In;
    SatResult in = is_satisfiable(p);
    REQUIRE(in.satisfiable);
    VertexSet expected(8);
    for (int orig : {2, 8, 10, 13})
        expected.insert(local(orig));
    CHECK(in.selected == expected);
    CHECK(oracle::suitable_rmis_exists(p));

    p.flag = StatusFlag::Out;
    CHECK_FALSE(is_satisfiable(p).satisfiable);
    CHECK_FALSE(oracle::suitable_rmis_exists(p));

    // the aerial variant: artificial PO at the attachment
    p.constraints[p.attachment] = kPo;
    CHECK_FALSE(is_satisfiable(p).satisfiable);
    CHECK_FALSE(oracle::suitable_rmis_exists(p));
}

TEST_CASE("decide on canonical graphs")
{
    CHECK(decide(testutil::bull()).accepted);
    CHECK(decide(testutil::square()).accepted);
    CHECK(decide(gen_complete_bipartite(3, 4)).accepted);
    CHECK(decide(gen_cycle(6)).accepted);

    Decision tri = decide(testutil::triangle());
    CHECK_FALSE(tri.accepted);
    CHECK(tri.rejected_node == -1); // root test failure, not a subtree node
    CHECK_FALSE(decide(gen_cycle(5)).accepted);
    CHECK(decide(gen_sputnik(testutil::triangle())).accepted);
}

TEST_CASE("decide fast paths and errors")
{
    Decision path = decide(gen_path(6));
    CHECK(path.accepted);
    CHECK(path.tree_graph);
    CHECK_FALSE(path.tree.has_value());

    Decision lone = decide(Graph(1, {}));
    CHECK(lone.accepted);
    CHECK(lone.tree_graph);

    Decision empty = decide(Graph(0, {}));
    CHECK(empty.accepted);

    CHECK_THROWS_AS(decide(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("decide matches the brute-force oracle exhaustively")
{
    testutil::for_each_connected_graph(5, [](const Graph& g) {
        bool expected = oracle::exists_rmis_bf(g).has_value();
        CHECK(decide(g).accepted == expected);
    });
}

TEST_CASE("decide matches the brute-force oracle on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = gen_random_connected(7, 0.3, rng());
        CHECK(decide(g).accepted == oracle::exists_rmis_bf(g).has_value());
    }
}

TEST_CASE("every component test agrees with the gadget oracle")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = gen_random_connected(2 + static_cast<int>(rng() % 7), 0.35, rng());
        decide(g, [](const ComponentProblem& p, bool verdict) {
            CHECK(verdict == oracle::suitable_rmis_exists(p));
        });
    }
}
