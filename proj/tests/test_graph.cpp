#include <gtest/gtest.h>

#include "facecolor/error.hpp"
#include "facecolor/graph.hpp"
#include "oracles.hpp"

namespace facecolor {
namespace {

TEST(Graph, NamedGraphsHaveExpectedShape) {
    const Graph p = petersen_graph();
    EXPECT_EQ(p.num_vertices(), 10);
    EXPECT_EQ(p.num_edges(), 15);
    EXPECT_EQ(oracle::girth(p), 5);

    const Graph h = heawood_graph();
    EXPECT_EQ(h.num_vertices(), 14);
    EXPECT_EQ(h.num_edges(), 21);
    EXPECT_EQ(oracle::girth(h), 6);
    EXPECT_TRUE(oracle::bipartite_by_enumeration(h));

    EXPECT_EQ(cube_graph().num_edges(), 12);
    EXPECT_EQ(complete_graph(6).num_edges(), 15);
    EXPECT_EQ(complete_bipartite(3, 3).num_edges(), 9);
}

TEST(Graph, SimplicityFlags) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_TRUE(g.is_simple());
    g.add_edge(1, 0);
    EXPECT_TRUE(g.has_parallel_edges());
    EXPECT_FALSE(g.has_loop());
    g.add_edge(2, 2);
    EXPECT_TRUE(g.has_loop());
    const Graph s = g.simplified();
    EXPECT_EQ(s.num_edges(), 1);
    EXPECT_THROW(g.add_edge(0, 5), Error);
}

TEST(Graph, ThreeConnectivity) {
    EXPECT_TRUE(is_3_connected(complete_graph(4)));
    EXPECT_FALSE(is_3_connected(path_graph(4)));
    EXPECT_TRUE(is_3_connected(complete_graph(6)));
    EXPECT_TRUE(is_3_connected(petersen_graph()));
    EXPECT_FALSE(is_3_connected(cycle_graph(6)));
    try {
        is_3_connected(complete_graph(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::too_small);
    }
}

}  // namespace
}  // namespace facecolor
