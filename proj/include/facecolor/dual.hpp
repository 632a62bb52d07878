#pragma once

#include <optional>
#include <vector>

#include "facecolor/embedded_map.hpp"
#include "facecolor/graph.hpp"

namespace facecolor {

/// Face adjacency multigraph. Dual vertex i is face i of the map; dual edge e crosses
/// primal edge e, so the two share an identifier.
struct DualGraph {
    Graph graph;
    bool simple = true;
    /// Primal edges with the same face on both sides.
    std::vector<int> loop_edges;

    int num_vertices() const { return graph.num_vertices(); }
    int num_edges() const { return graph.num_edges(); }
};

DualGraph build_dual(const EmbeddedMap& map);

bool check_regularity(const Graph& g, int d);
bool check_regularity(const DualGraph& dual, int d);

inline constexpr int max_isomorphism_vertices = 64;

/// Vertex bijection `phi` with g1 edge {u,v} <-> g2 edge {phi[u],phi[v]}, if any.
/// Both graphs must be simple; throws too_large above 64 vertices.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);
bool is_isomorphic(const Graph& g1, const Graph& g2);

/// Face boundaries of the dual map of an orientable, all-positive map: one face per
/// primal vertex, listing the primal faces around it in rotation order.
std::vector<std::vector<int>> dual_face_list(const EmbeddedMap& map);
EmbeddedMap dual_map(const EmbeddedMap& map);

}  // namespace facecolor
