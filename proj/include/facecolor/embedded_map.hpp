#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "facecolor/graph.hpp"

namespace facecolor {

/// Per-vertex cyclic neighbor orders plus the set of edges carrying sign -1.
struct RotationSpec {
    std::vector<std::vector<int>> rotation;
    std::vector<std::pair<int, int>> negative_edges;
};

/// A traced face: the closed walk of darts that bounds it, and the vertices it visits.
/// `darts[i]` leaves `vertices[i]`.
struct Face {
    std::vector<int> darts;
    std::vector<int> vertices;

    int size() const noexcept { return static_cast<int>(darts.size()); }
};

struct FaceTrace {
    std::vector<Face> faces;
    /// Faces whose boundary repeats a vertex or is shorter than 3.
    std::vector<int> nonsimple;
};

struct SurfaceInfo {
    int euler_characteristic = 0;
    bool orientable = true;
    /// Orientable genus, or crosscap number when nonorientable.
    int genus = 0;

    friend bool operator==(const SurfaceInfo&, const SurfaceInfo&) = default;
};

/// Signed rotation system on a simple connected graph.
///
/// Edge `e` owns darts `2e` (leaving its lower endpoint) and `2e + 1` (leaving the
/// higher one); edges are numbered in lexicographic order of (low, high) endpoints.
/// Faces are traced once at construction and cached, so a map is an immutable value.
class EmbeddedMap {
public:
    int num_vertices() const noexcept { return static_cast<int>(vertex_darts_.size()); }
    int num_edges() const noexcept { return static_cast<int>(sign_.size()); }
    int num_darts() const noexcept { return 2 * num_edges(); }
    int num_faces() const noexcept { return static_cast<int>(trace_.faces.size()); }

    static constexpr int edge_of(int dart) noexcept { return dart >> 1; }
    static constexpr int opposite(int dart) noexcept { return dart ^ 1; }

    int owner(int dart) const { return owner_[static_cast<std::size_t>(dart)]; }
    int head(int dart) const { return owner(opposite(dart)); }
    int rotation_next(int dart) const { return next_[static_cast<std::size_t>(dart)]; }
    int rotation_prev(int dart) const { return prev_[static_cast<std::size_t>(dart)]; }
    int sign(int edge) const { return sign_[static_cast<std::size_t>(edge)]; }
    std::pair<int, int> endpoints(int edge) const { return {owner(2 * edge), owner(2 * edge + 1)}; }

    /// Darts leaving `v` in rotation order.
    std::span<const int> darts_at(int v) const { return vertex_darts_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(darts_at(v).size()); }
    std::optional<int> find_edge(int u, int v) const;

    const FaceTrace& trace() const noexcept { return trace_; }
    const std::vector<Face>& faces() const noexcept { return trace_.faces; }
    /// The two face incidences of an edge (equal when one face runs along both sides).
    std::pair<int, int> edge_faces(int edge) const { return edge_faces_[static_cast<std::size_t>(edge)]; }
    /// Face containing the traversal state (dart, orientation flag).
    int state_face(int dart, int flag) const { return state_face_[static_cast<std::size_t>(2 * dart + (flag < 0 ? 1 : 0))]; }

    /// Underlying simple graph; edge ids coincide with the map's.
    const Graph& graph() const noexcept { return graph_; }

    friend EmbeddedMap from_rotation(const RotationSpec& spec);

private:
    EmbeddedMap() = default;
    void trace_all();

    std::vector<int> owner_;
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<int> sign_;
    std::vector<std::vector<int>> vertex_darts_;
    Graph graph_;
    FaceTrace trace_;
    std::vector<std::pair<int, int>> edge_faces_;
    std::vector<int> state_face_;
};

/// Validates and builds a map. Throws Error with code empty, non_simple,
/// bad_involution, disconnected or bad_argument.
EmbeddedMap from_rotation(const RotationSpec& spec);

/// Builds a map from face boundaries by linking the corners around each vertex.
/// Signs are normalized so that a spanning tree is positive (all positive when
/// the surface is orientable). Throws edge_multiplicity, pinched_vertex, non_simple,
/// empty or disconnected.
EmbeddedMap from_faces(const std::vector<std::vector<int>>& faces);

const FaceTrace& trace_faces(const EmbeddedMap& map);

SurfaceInfo surface_info(const EmbeddedMap& map);

/// Vertex cycle whose edge-sign product is -1, if the signature is unbalanced.
std::optional<std::vector<int>> unbalanced_cycle(const EmbeddedMap& map);

struct DAngulationReport {
    bool ok = false;
    int d = 0;
    std::vector<int> wrong_size_faces;
    std::vector<int> nonsimple_faces;
    /// Warning-level: empty when the graph has fewer than 4 vertices.
    std::optional<bool> three_connected;
};

DAngulationReport is_d_angulation(const EmbeddedMap& map, int d);

bool is_3_connected(const EmbeddedMap& map);

enum class Parity { even, odd };

std::vector<Parity> degree_parities(const EmbeddedMap& map);

/// Diagonal flip inside the two triangles on `edge`. Throws not_triangulation or flip_blocked.
EmbeddedMap flip_edge(const EmbeddedMap& map, int edge);

/// Local switch at `v`: reverse its rotation and negate the signs of its edges.
EmbeddedMap switch_vertex(const EmbeddedMap& map, int v);

RotationSpec rotation_spec(const EmbeddedMap& map);
std::vector<std::vector<int>> face_vertex_lists(const EmbeddedMap& map);

/// Canonical form of a vertex cycle: lexicographically least rotation over both directions.
std::vector<int> canonical_cycle(std::vector<int> cycle);

/// Sorted canonical cycles of all faces; equal for maps with the same face structure.
std::vector<std::vector<int>> canonical_faces(const EmbeddedMap& map);

}  // namespace facecolor
