#include "facecolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "facecolor/error.hpp"

namespace facecolor {

Graph::Graph(int num_vertices) : incidence_(static_cast<std::size_t>(num_vertices)) {}

Graph::Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) : Graph(num_vertices) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw Error(ErrorCode::bad_argument, "edge endpoint out of range");
    const int e = num_edges();
    edges_.emplace_back(u, v);
    incidence_[static_cast<std::size_t>(u)].push_back(e);
    incidence_[static_cast<std::size_t>(v)].push_back(e);
    return e;
}

int Graph::other(int e, int v) const {
    auto [a, b] = endpoints(e);
    return a == v ? b : a;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& inc : incidence_) best = std::max(best, static_cast<int>(inc.size()));
    return best;
}

bool Graph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](auto e) { return e.first == e.second; });
}

bool Graph::has_parallel_edges() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges_) {
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) return true;
    }
    return false;
}

bool Graph::is_connected() const {
    return connected_without(*this, std::vector<bool>(static_cast<std::size_t>(num_vertices()), false));
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int e : incident(v)) {
        const int w = other(e, v);
        if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph Graph::simplified() const {
    std::set<std::pair<int, int>> seen;
    Graph out(num_vertices());
    for (auto [u, v] : edges_) {
        if (u == v) continue;
        if (seen.emplace(std::min(u, v), std::max(u, v)).second) out.add_edge(u, v);
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges() == b.edges();
}

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
    const int n = g.num_vertices();
    int start = -1;
    int remaining = 0;
    for (int v = 0; v < n; ++v) {
        if (!removed[static_cast<std::size_t>(v)]) {
            ++remaining;
            if (start < 0) start = v;
        }
    }
    if (remaining == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> queue;
    queue.push(start);
    seen[static_cast<std::size_t>(start)] = true;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int e : g.incident(v)) {
            const int w = g.other(e, v);
            if (removed[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            ++reached;
            queue.push(w);
        }
    }
    return reached == remaining;
}

bool is_3_connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n < 4) throw Error(ErrorCode::too_small, "3-connectivity needs at least 4 vertices");
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    if (!connected_without(g, removed)) return false;
    for (int a = 0; a < n; ++a) {
        removed[static_cast<std::size_t>(a)] = true;
        for (int b = a + 1; b < n; ++b) {
            removed[static_cast<std::size_t>(b)] = true;
            const bool ok = connected_without(g, removed);
            removed[static_cast<std::size_t>(b)] = false;
            if (!ok) return false;
        }
        removed[static_cast<std::size_t>(a)] = false;
    }
    return true;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph heawood_graph() {
    // LCF notation [5, -5]^7.
    Graph g(14);
    for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    return g;
}

Graph cube_graph() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int bit = 1; bit < 8; bit <<= 1)
            if ((v & bit) == 0) g.add_edge(v, v | bit);
    return g;
}

}  // namespace facecolor
