#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "facecolor/dual.hpp"
#include "facecolor/embedded_map.hpp"
#include "facecolor/graph.hpp"

namespace facecolor {

enum class FaceColor : unsigned char { black, white };

struct FaceTwoColoring {
    std::vector<FaceColor> color;
};

/// Odd closed walk through distinct dual vertices; `edges[i]` joins
/// `faces[i]` and `faces[(i + 1) % size]`.
struct OddCycle {
    std::vector<int> faces;
    std::vector<int> edges;
};

using TwoColorResult = std::variant<FaceTwoColoring, OddCycle>;

/// BFS 2-coloring from vertex 0, or an odd cycle. Throws disconnected.
TwoColorResult face_two_color(const Graph& dual);
TwoColorResult face_two_color(const DualGraph& dual);

bool is_valid_two_coloring(const Graph& g, const FaceTwoColoring& coloring);

/// Partition of dual edges into d perfect matchings; `factor[e]` is in 0..d-1.
struct OneFactorization {
    int d = 0;
    std::vector<int> factor;
};

/// One-factorization of a d-regular bipartite multigraph by repeated perfect-matching
/// extraction. Throws bad_argument when the graph is not d-regular or the coloring is
/// invalid, internal_contract if an extraction round fails.
OneFactorization koenig_factorize(const Graph& dual, const FaceTwoColoring& two_coloring, int d);
OneFactorization koenig_factorize(const DualGraph& dual, const FaceTwoColoring& two_coloring, int d);

bool is_one_factorization(const Graph& g, const OneFactorization& f);

/// Colors of primal edges, each in 0..d-1.
struct EdgeColoring {
    int d = 0;
    std::vector<int> color;
};

EdgeColoring gruenbaum_from_factorization(const EmbeddedMap& map, const OneFactorization& fact);

struct GruenbaumCheck {
    bool ok = true;
    /// First violating face and its boundary colors.
    std::optional<int> face;
    std::vector<int> colors;
};

/// Every face must have exactly d boundary edges with pairwise distinct colors.
/// Throws bad_range for a color outside 0..d-1.
GruenbaumCheck verify_gruenbaum(const EmbeddedMap& map, const EdgeColoring& coloring, int d);

/// Full König route: two-color the dual, factorize, transfer. Empty when the dual is
/// not bipartite or not d-regular.
std::optional<EdgeColoring> koenig_gruenbaum(const EmbeddedMap& map, int d);

enum class Part : unsigned char { a, b, c };

/// Colors A-B edges 0, B-C edges 1, A-C edges 2. Throws not_tripartite or not_triangulation.
EdgeColoring tripartite_gruenbaum(const EmbeddedMap& map, std::span<const Part> parts);

struct ProperEdgeColoring {
    std::vector<int> color;
    int num_colors = 0;
};

/// Misra-Gries edge coloring with at most max_degree + 1 colors. Throws not_simple.
ProperEdgeColoring misra_gries(const Graph& g);

/// Misra-Gries on a simple dual; throws bad_argument when the maximum degree exceeds d.
ProperEdgeColoring vizing_fallback(const DualGraph& dual, int d);

bool is_proper_edge_coloring(const Graph& g, std::span<const int> color);

}  // namespace facecolor
