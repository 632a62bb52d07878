#pragma once

#include <span>
#include <variant>
#include <vector>

#include "facecolor/graph.hpp"

namespace facecolor {

struct Matching {
    /// Matched edge ids, ascending.
    std::vector<int> edges;
    /// Per vertex, the matched edge id or -1.
    std::vector<int> mate_edge;
};

/// Vertex set S on one side with |N(S)| < |S|.
struct HallViolator {
    std::vector<int> vertices;
    std::vector<int> neighborhood;
};

using MatchingResult = std::variant<Matching, HallViolator>;

/// Hopcroft-Karp perfect matching on a bipartite multigraph.
///
/// `side[v]` is 0 or 1 and every edge must join the two sides. Only edges with
/// `active[e]` set are used (all edges when `active` is empty). Incident edges are
/// scanned in ascending id order, so the result depends only on the input.
/// Throws bad_argument if an active edge lies inside a side.
MatchingResult perfect_matching(const Graph& g, std::span<const int> side,
                                std::span<const char> active = {});

/// Maximum matching size, same conventions as `perfect_matching`.
Matching maximum_matching(const Graph& g, std::span<const int> side,
                          std::span<const char> active = {});

}  // namespace facecolor
