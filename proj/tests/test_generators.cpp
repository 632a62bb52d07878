#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <set>

#include "facecolor/coloring.hpp"
#include "facecolor/dual.hpp"
#include "facecolor/error.hpp"
#include "facecolor/generators.hpp"
#include "random_maps.hpp"

namespace facecolor {
namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::internal_contract;
}

TEST(Platonic, Counts) {
    const struct {
        const char* name;
        int v, e, f, d;
    } solids[] = {{"tetrahedron", 4, 6, 4, 3}, {"cube", 8, 12, 6, 4}, {"octahedron", 6, 12, 8, 3},
                  {"dodecahedron", 20, 30, 12, 5}, {"icosahedron", 12, 30, 20, 3}};
    for (const auto& s : solids) {
        const EmbeddedMap m = platonic(s.name);
        EXPECT_EQ(m.num_vertices(), s.v) << s.name;
        EXPECT_EQ(m.num_edges(), s.e) << s.name;
        EXPECT_EQ(m.num_faces(), s.f) << s.name;
        EXPECT_TRUE(is_d_angulation(m, s.d).ok) << s.name;
        EXPECT_EQ(surface_info(m), (SurfaceInfo{2, true, 0})) << s.name;
        EXPECT_TRUE(is_3_connected(m)) << s.name;
    }
    EXPECT_EQ(code_of([] { (void)platonic("hexahedron"); }), ErrorCode::unknown_name);
}

TEST(TorusGrid, CountsAndErrors) {
    const EmbeddedMap g = torus_grid(3, 5);
    EXPECT_EQ(g.num_vertices(), 15);
    EXPECT_EQ(g.num_edges(), 30);
    EXPECT_EQ(g.num_faces(), 15);
    EXPECT_EQ(surface_info(g), (SurfaceInfo{0, true, 1}));
    EXPECT_TRUE(is_d_angulation(g, 4).ok);
    EXPECT_EQ(code_of([] { (void)torus_grid(2, 4); }), ErrorCode::too_small);
    const EmbeddedMap g33 = torus_grid(3, 3);
    EXPECT_EQ(g33.num_vertices() - g33.num_edges() + g33.num_faces(), 0);
    EXPECT_TRUE(is_d_angulation(g33, 4).ok);
    const TwoColorResult odd = face_two_color(build_dual(torus_grid(3, 4)));
    ASSERT_TRUE(std::holds_alternative<OddCycle>(odd));
    EXPECT_EQ(std::get<OddCycle>(odd).faces.size(), 3U);
    EXPECT_TRUE(std::holds_alternative<FaceTwoColoring>(face_two_color(build_dual(torus_grid(4, 4)))));
}

TEST(Latin, CyclicSquares) {
    EXPECT_EQ(latin_cyclic(2, 0).rows(), (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
    EXPECT_EQ(latin_cyclic(3, 1).rows(), (std::vector<std::vector<int>>{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}));
    EXPECT_FALSE(is_latin({{0, 1}, {0, 1}}));
    EXPECT_FALSE(is_latin({{0, 2}, {2, 0}}));
    EXPECT_TRUE(is_latin({{0}}));
    EXPECT_EQ(code_of([] { (void)LatinSquare({{0, 0}, {1, 1}}); }), ErrorCode::bad_argument);
}

TEST(Biembed, SmallOrders) {
    const TripartiteTriangulation two = biembed(latin_cyclic(2, 0), latin_cyclic(2, 1));
    EXPECT_TRUE(is_isomorphic(two.map.graph(), platonic("octahedron").graph()));
    EXPECT_EQ(surface_info(two.map).euler_characteristic, 2);

    const TripartiteTriangulation three = biembed(latin_cyclic(3, 0), latin_cyclic(3, 1));
    EXPECT_EQ(three.map.num_vertices(), 9);
    EXPECT_EQ(three.map.num_edges(), 27);
    EXPECT_EQ(three.map.num_faces(), 18);
    EXPECT_EQ(surface_info(three.map), (SurfaceInfo{0, true, 1}));
    EXPECT_TRUE(is_isomorphic(three.map.graph(), [] {
        Graph k(9);
        for (int u = 0; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v)
                if (u / 3 != v / 3) k.add_edge(u, v);
        return k;
    }()));

    EXPECT_EQ(code_of([] { (void)biembed(latin_cyclic(3, 1), latin_cyclic(3, 1)); }), ErrorCode::edge_multiplicity);
    EXPECT_EQ(code_of([] { (void)biembed(latin_cyclic(4, 0), latin_cyclic(4, 2)); }), ErrorCode::pinched_vertex);
    EXPECT_EQ(code_of([] { (void)biembed(latin_cyclic(3, 0), latin_cyclic(4, 1)); }), ErrorCode::bad_argument);
}

TEST(FindKnnn, FaceClassesAreATwoColoring) {
    for (int n = 2; n <= 6; ++n) {
        KnnnSearchStats stats;
        const TripartiteTriangulation t = find_knnn(n, &stats);
        EXPECT_GE(stats.candidates, stats.biembeddings);
        EXPECT_GE(stats.biembeddings, 1U);
        const SurfaceInfo info = surface_info(t.map);
        EXPECT_EQ(info.euler_characteristic, 3 * n - n * n);
        EXPECT_TRUE(info.orientable);
        EXPECT_EQ(info.genus, (n - 1) * (n - 2) / 2);
        const DualGraph dual = build_dual(t.map);
        ASSERT_EQ(t.face_class.size(), static_cast<std::size_t>(t.map.num_faces()));
        EXPECT_TRUE(is_valid_two_coloring(dual.graph, FaceTwoColoring{t.face_class}));
        EXPECT_TRUE(verify_gruenbaum(t.map, tripartite_gruenbaum(t.map, t.parts), 3).ok);
    }
    EXPECT_TRUE(is_isomorphic(find_knnn(2).map.graph(), platonic("octahedron").graph()));
    EXPECT_EQ(code_of([] { (void)find_knnn(1); }), ErrorCode::bad_argument);
    EXPECT_EQ(code_of([] { (void)find_knnn(9); }), ErrorCode::bad_argument);
}

// Property: any biembedding of two random isotopes is a triangulation of K_{n,n,n} with
// the expected Euler characteristic and a proper three-part coloring.
TEST(Biembed, RandomIsotopes) {
    std::mt19937_64 rng(2718);
    int built = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 5;
        const LatinSquare a = testing::random_latin(rng, n);
        const LatinSquare b = testing::random_latin(rng, n);
        ASSERT_TRUE(is_latin(a.rows()));
        std::optional<TripartiteTriangulation> built_map;
        try {
            built_map.emplace(biembed(a, b));
        } catch (const Error& e) {
            EXPECT_TRUE(e.code() == ErrorCode::edge_multiplicity || e.code() == ErrorCode::pinched_vertex);
            continue;
        }
        ++built;
        const TripartiteTriangulation& t = *built_map;
        EXPECT_EQ(t.map.num_vertices(), 3 * n);
        EXPECT_EQ(t.map.num_edges(), 3 * n * n);
        EXPECT_EQ(t.map.num_faces(), 2 * n * n);
        EXPECT_EQ(surface_info(t.map).euler_characteristic, 3 * n - n * n);
        EXPECT_TRUE(is_d_angulation(t.map, 3).ok);
        EXPECT_TRUE(verify_gruenbaum(t.map, tripartite_gruenbaum(t.map, t.parts), 3).ok);
    }
    EXPECT_GT(built, 0);
}

TEST(FlipWalk, DeterministicAndValid) {
    const auto a = flip_walk(platonic("icosahedron"), 40, 99);
    const auto b = flip_walk(platonic("icosahedron"), 40, 99);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(canonical_faces(a[i]), canonical_faces(b[i]));
    for (const EmbeddedMap& m : a) {
        EXPECT_TRUE(is_d_angulation(m, 3).ok);
        EXPECT_TRUE(m.graph().is_simple());
        EXPECT_EQ(m.num_edges(), 30);
    }
}

}  // namespace
}  // namespace facecolor
