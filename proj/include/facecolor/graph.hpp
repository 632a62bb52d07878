#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace facecolor {

/// Undirected multigraph with stable edge identifiers 0..E-1.
///
/// Loops and parallel edges are allowed; `is_simple()` reports whether any are present.
/// Incidence lists keep edge ids in ascending order, and a loop appears twice in the
/// incidence list of its vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int num_vertices);
    Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

    int add_edge(int u, int v);

    int num_vertices() const noexcept { return static_cast<int>(incidence_.size()); }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    std::pair<int, int> endpoints(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    int other(int e, int v) const;
    std::span<const int> incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;

    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool has_loop() const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loop() && !has_parallel_edges(); }
    bool is_connected() const;

    /// Sorted neighbor list with duplicates removed (loops excluded).
    std::vector<int> neighbors(int v) const;

    /// Copy with loops dropped and parallel edges merged.
    Graph simplified() const;

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

bool operator==(const Graph& a, const Graph& b);

/// Connectivity of an arbitrary graph after deleting the vertices flagged in `removed`.
bool connected_without(const Graph& g, const std::vector<bool>& removed);

/// True iff deleting any pair of vertices leaves the graph connected (V >= 4).
/// Throws Error(too_small) for fewer than 4 vertices.
bool is_3_connected(const Graph& g);

// Named reference graphs used by tests and the CLI.
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph heawood_graph();
Graph cube_graph();

}  // namespace facecolor
