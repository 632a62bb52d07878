#include <gtest/gtest.h>

#include <random>

#include "facecolor/coloring.hpp"
#include "facecolor/dual.hpp"
#include "facecolor/error.hpp"
#include "facecolor/generators.hpp"
#include "facecolor/search.hpp"
#include "oracles.hpp"
#include "random_maps.hpp"

namespace facecolor {
namespace {

bool proper_vertex_coloring(const Graph& g, const std::vector<int>& c, int k) {
    if (static_cast<int>(c.size()) != g.num_vertices()) return false;
    for (int x : c)
        if (x < 0 || x >= k) return false;
    for (auto [u, v] : g.edges())
        if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
    return true;
}

TEST(VertexSearch, NamedGraphs) {
    const SearchResult p3 = vertex_chromatic_exact(petersen_graph(), 3);
    ASSERT_TRUE(p3.sat());
    EXPECT_TRUE(proper_vertex_coloring(petersen_graph(), p3.assignment, 3));
    EXPECT_EQ(vertex_chromatic_exact(petersen_graph(), 2).status, SearchStatus::unsat);
    EXPECT_EQ(vertex_chromatic_exact(complete_graph(4), 3).status, SearchStatus::unsat);
    EXPECT_TRUE(vertex_chromatic_exact(complete_graph(4), 4).sat());
    EXPECT_TRUE(vertex_chromatic_exact(cube_graph(), 2).sat());
    EXPECT_EQ(chromatic_number(build_dual(k6_projective()).graph, 8).value, std::optional<int>(3));
    EXPECT_EQ(chromatic_number(complete_graph(7), 8).value, std::optional<int>(7));
    EXPECT_EQ(chromatic_number(cycle_graph(5), 8).value, std::optional<int>(3));
}

// Property: exact search agrees with exhaustive enumeration on small random graphs.
TEST(VertexSearch, RandomAgreesWithEnumeration) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        const Graph g = testing::random_connected_graph(rng, n, trial % 12);
        for (int k = 1; k <= 4; ++k) {
            const SearchResult r = vertex_chromatic_exact(g, k);
            EXPECT_EQ(r.sat(), oracle::k_colorable_by_enumeration(g, k));
            if (r.sat()) EXPECT_TRUE(proper_vertex_coloring(g, r.assignment, k));
        }
    }
}

TEST(EdgeSearch, NamedGraphs) {
    ASSERT_FALSE(oracle::cubic_tait_colorable_by_matchings(petersen_graph()));
    EXPECT_EQ(edge_chromatic_exact(petersen_graph(), 3).status, SearchStatus::unsat);
    const SearchResult p4 = edge_chromatic_exact(petersen_graph(), 4);
    ASSERT_TRUE(p4.sat());
    EXPECT_TRUE(is_proper_edge_coloring(petersen_graph(), p4.assignment));
    ASSERT_TRUE(oracle::cubic_tait_colorable_by_matchings(heawood_graph()));
    EXPECT_TRUE(edge_chromatic_exact(heawood_graph(), 3).sat());
    EXPECT_EQ(edge_chromatic_exact(complete_graph(4), 2).status, SearchStatus::unsat);
    EXPECT_EQ(chromatic_index(complete_graph(5), 8).value, std::optional<int>(5));
    EXPECT_EQ(chromatic_index(complete_graph(6), 8).value, std::optional<int>(5));
}

TEST(GruenbaumExact, SmallMaps) {
    const EmbeddedMap tet = platonic("tetrahedron");
    ASSERT_TRUE(oracle::gruenbaum_by_enumeration(tet, 3));
    const SearchResult t = gruenbaum_exact(tet, 3);
    ASSERT_TRUE(t.sat());
    EXPECT_TRUE(verify_gruenbaum(tet, EdgeColoring{3, t.assignment}, 3).ok);

    const EmbeddedMap k6 = k6_projective();
    EXPECT_EQ(gruenbaum_exact(k6, 3).status, SearchStatus::unsat);

    const SearchResult cube = gruenbaum_exact(platonic("cube"), 4);
    ASSERT_TRUE(cube.sat());
    EXPECT_TRUE(verify_gruenbaum(platonic("cube"), EdgeColoring{4, cube.assignment}, 4).ok);

    try {
        (void)gruenbaum_exact(platonic("cube"), 3);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_d_angulation);
    }
}

TEST(GruenbaumExact, MatchesDualEdgeSearch) {
    for (const EmbeddedMap& m : flip_walk(platonic("octahedron"), 25, 11)) {
        const DualGraph dual = build_dual(m);
        ASSERT_TRUE(dual.simple);
        EXPECT_EQ(gruenbaum_exact(m, 3).sat(), edge_chromatic_exact(dual.graph, 3).sat());
    }
    const EmbeddedMap k6 = k6_projective();
    EXPECT_EQ(gruenbaum_exact(k6, 3).sat(), edge_chromatic_exact(build_dual(k6).graph, 3).sat());
}

TEST(GruenbaumExact, BudgetAndDeterminism) {
    const EmbeddedMap ico = platonic("icosahedron");
    const SearchResult limited = gruenbaum_exact(ico, 3, 1);
    EXPECT_EQ(limited.status, SearchStatus::budget_exceeded);
    EXPECT_TRUE(limited.assignment.empty());
    const SearchResult a = gruenbaum_exact(ico, 3);
    const SearchResult b = gruenbaum_exact(ico, 3);
    ASSERT_TRUE(a.sat());
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.nodes, b.nodes);
    const ChromaticValue cv = chromatic_number(petersen_graph(), 8, 1);
    EXPECT_TRUE(cv.budget_exceeded);
    EXPECT_FALSE(cv.value.has_value());
}

TEST(Scan, NamedCorpus) {
    const std::vector<NamedMap> corpus{{"k6", k6_projective()},
                                       {"k7", k7_torus()},
                                       {"tet", platonic("tetrahedron")},
                                       {"cube", platonic("cube")},
                                       {"grid", torus_grid(3, 4)},
                                       {"ico", platonic("icosahedron")}};
    const ScanReport report = conjecture2_scan(corpus);
    ASSERT_EQ(report.records.size(), corpus.size());
    const ScanRecord& k6 = report.records[0];
    EXPECT_EQ(k6.id, "k6");
    EXPECT_EQ(k6.gruenbaum, Tri::no);
    EXPECT_EQ(k6.face_chromatic, std::optional<int>(3));
    EXPECT_FALSE(k6.face_two_colorable);
    EXPECT_EQ(k6.flag, ScanFlag::conjecture2b_tension);
    EXPECT_EQ(report.records[1].method, ScanMethod::koenig);
    EXPECT_EQ(report.records[1].gruenbaum, Tri::yes);
    EXPECT_EQ(report.records[2].method, ScanMethod::exact);
    EXPECT_EQ(report.records[2].gruenbaum, Tri::yes);
    EXPECT_EQ(report.records[2].face_chromatic, std::optional<int>(4));
    EXPECT_EQ(report.records[3].d, 4);
    EXPECT_EQ(report.records[3].gruenbaum, Tri::yes);
    EXPECT_EQ(report.records[4].d, 4);
    EXPECT_FALSE(report.has_theorem2_violation());
    EXPECT_EQ(report.count(ScanFlag::conjecture2b_tension), 1);
    EXPECT_NE(format_scan_text(report).find("k6"), std::string::npos);
}

TEST(Scan, SphereAndTorusTriangulations) {
    const std::vector<NamedMap> corpus{{"oct", platonic("octahedron")}, {"ico", platonic("icosahedron")}, {"k7", k7_torus()}};
    const ScanReport report = conjecture2_scan(corpus);
    for (const ScanRecord& r : report.records) {
        EXPECT_EQ(r.gruenbaum, Tri::yes) << r.id;
        EXPECT_EQ(r.flag, ScanFlag::none) << r.id;
    }
    EXPECT_EQ(report.records[0].method, ScanMethod::koenig);
    EXPECT_EQ(report.records[1].method, ScanMethod::exact);
}

TEST(Scan, EmptyAndParallel) {
    const ScanReport empty = conjecture2_scan({});
    EXPECT_TRUE(empty.records.empty());
    EXPECT_FALSE(empty.has_theorem2_violation());

    std::vector<NamedMap> corpus;
    int i = 0;
    for (const EmbeddedMap& m : flip_walk(platonic("icosahedron"), 20, 4)) corpus.push_back({"m" + std::to_string(i++), m});
    corpus.push_back({"k6", k6_projective()});
    const ScanReport seq = conjecture2_scan(corpus, default_node_budget, 1);
    const ScanReport par = conjecture2_scan(corpus, default_node_budget, 4);
    EXPECT_EQ(format_scan_table(seq), format_scan_table(par));
}

}  // namespace
}  // namespace facecolor
