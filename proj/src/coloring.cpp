#include "facecolor/coloring.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "facecolor/error.hpp"
#include "facecolor/matching.hpp"

namespace facecolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

TwoColorResult face_two_color(const Graph& dual) {
    const int n = dual.num_vertices();
    if (n == 0) throw Error(ErrorCode::empty, "empty dual");
    if (!dual.is_connected()) throw Error(ErrorCode::disconnected, "dual graph is not connected");
    for (int e = 0; e < dual.num_edges(); ++e) {
        auto [u, v] = dual.endpoints(e);
        if (u == v) return OddCycle{{u}, {e}};
    }

    std::vector<int> color(idx(n), -1);
    std::vector<int> parent_edge(idx(n), -1);
    std::vector<int> depth(idx(n), 0);
    std::queue<int> queue;
    color[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int e : dual.incident(v)) {
            const int w = dual.other(e, v);
            if (color[idx(w)] < 0) {
                color[idx(w)] = 1 - color[idx(v)];
                parent_edge[idx(w)] = e;
                depth[idx(w)] = depth[idx(v)] + 1;
                queue.push(w);
                continue;
            }
            if (color[idx(w)] != color[idx(v)]) continue;

            // Same colour on both ends: tree paths to the common ancestor plus e form an odd cycle.
            std::vector<int> up_v{v};
            std::vector<int> up_w{w};
            std::vector<int> edges_v;
            std::vector<int> edges_w;
            while (up_v.back() != up_w.back()) {
                const bool lift_v = depth[idx(up_v.back())] >= depth[idx(up_w.back())];
                auto& path = lift_v ? up_v : up_w;
                auto& path_edges = lift_v ? edges_v : edges_w;
                const int pe = parent_edge[idx(path.back())];
                path_edges.push_back(pe);
                path.push_back(dual.other(pe, path.back()));
            }
            // Cycle: ancestor ... v, then e to w, then w ... back up to the ancestor.
            OddCycle cycle;
            for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) cycle.faces.push_back(*it);
            for (auto it = edges_v.rbegin(); it != edges_v.rend(); ++it) cycle.edges.push_back(*it);
            cycle.edges.push_back(e);
            for (std::size_t i = 0; i + 1 < up_w.size(); ++i) {
                cycle.faces.push_back(up_w[i]);
                cycle.edges.push_back(edges_w[i]);
            }
            return cycle;
        }
    }
    FaceTwoColoring out;
    out.color.reserve(idx(n));
    for (int c : color) out.color.push_back(c == 0 ? FaceColor::black : FaceColor::white);
    return out;
}

TwoColorResult face_two_color(const DualGraph& dual) { return face_two_color(dual.graph); }

bool is_valid_two_coloring(const Graph& g, const FaceTwoColoring& coloring) {
    if (coloring.color.size() != idx(g.num_vertices())) return false;
    for (auto [u, v] : g.edges())
        if (coloring.color[idx(u)] == coloring.color[idx(v)]) return false;
    return true;
}

OneFactorization koenig_factorize(const Graph& dual, const FaceTwoColoring& two_coloring, int d) {
    if (d < 1) throw Error(ErrorCode::bad_argument, "factor count must be positive");
    if (!check_regularity(dual, d)) throw Error(ErrorCode::bad_argument, "graph is not " + std::to_string(d) + "-regular");
    if (!is_valid_two_coloring(dual, two_coloring)) throw Error(ErrorCode::bad_argument, "invalid two-coloring");

    const int n = dual.num_vertices();
    std::vector<int> side(idx(n));
    for (int v = 0; v < n; ++v) side[idx(v)] = two_coloring.color[idx(v)] == FaceColor::black ? 0 : 1;

    OneFactorization out{d, std::vector<int>(idx(dual.num_edges()), -1)};
    std::vector<char> active(idx(dual.num_edges()), 1);
    std::vector<int> residual_degree(idx(n), d);
    for (int round = 0; round < d; ++round) {
        MatchingResult result = perfect_matching(dual, side, active);
        const auto* matching = std::get_if<Matching>(&result);
        if (matching == nullptr)
            throw Error(ErrorCode::internal_contract,
                        "no perfect matching in a " + std::to_string(d - round) + "-regular bipartite residual");
        for (int e : matching->edges) {
            out.factor[idx(e)] = round;
            active[idx(e)] = 0;
            auto [u, v] = dual.endpoints(e);
            --residual_degree[idx(u)];
            --residual_degree[idx(v)];
        }
        const int expected = d - round - 1;
        if (std::any_of(residual_degree.begin(), residual_degree.end(), [&](int x) { return x != expected; }))
            throw Error(ErrorCode::internal_contract, "residual graph lost regularity after round " + std::to_string(round));
    }
    return out;
}

OneFactorization koenig_factorize(const DualGraph& dual, const FaceTwoColoring& two_coloring, int d) {
    return koenig_factorize(dual.graph, two_coloring, d);
}

bool is_one_factorization(const Graph& g, const OneFactorization& f) {
    if (f.factor.size() != idx(g.num_edges())) return false;
    for (int label = 0; label < f.d; ++label) {
        std::vector<int> hits(idx(g.num_vertices()), 0);
        for (int e = 0; e < g.num_edges(); ++e) {
            if (f.factor[idx(e)] != label) continue;
            auto [u, v] = g.endpoints(e);
            ++hits[idx(u)];
            ++hits[idx(v)];
        }
        if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
    }
    return std::all_of(f.factor.begin(), f.factor.end(), [&](int c) { return c >= 0 && c < f.d; });
}

EdgeColoring gruenbaum_from_factorization(const EmbeddedMap& map, const OneFactorization& fact) {
    if (fact.factor.size() != idx(map.num_edges()))
        throw Error(ErrorCode::bad_argument, "factorization does not match the map's edges");
    // Dual edge e crosses primal edge e.
    return EdgeColoring{fact.d, fact.factor};
}

GruenbaumCheck verify_gruenbaum(const EmbeddedMap& map, const EdgeColoring& coloring, int d) {
    if (coloring.color.size() != idx(map.num_edges())) throw Error(ErrorCode::bad_argument, "coloring size mismatch");
    for (int c : coloring.color)
        if (c < 0 || c >= d) throw Error(ErrorCode::bad_range, "color " + std::to_string(c) + " outside 0.." + std::to_string(d - 1));

    for (int f = 0; f < map.num_faces(); ++f) {
        const Face& face = map.faces()[idx(f)];
        std::vector<int> colors;
        for (int dart : face.darts) colors.push_back(coloring.color[idx(EmbeddedMap::edge_of(dart))]);
        std::vector<int> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (face.size() != d || !distinct) return GruenbaumCheck{false, f, std::move(colors)};
    }
    return {};
}

std::optional<EdgeColoring> koenig_gruenbaum(const EmbeddedMap& map, int d) {
    const DualGraph dual = build_dual(map);
    if (!check_regularity(dual, d)) return std::nullopt;
    TwoColorResult two = face_two_color(dual);
    const auto* coloring = std::get_if<FaceTwoColoring>(&two);
    if (coloring == nullptr) return std::nullopt;
    return gruenbaum_from_factorization(map, koenig_factorize(dual, *coloring, d));
}

EdgeColoring tripartite_gruenbaum(const EmbeddedMap& map, std::span<const Part> parts) {
    if (parts.size() != idx(map.num_vertices())) throw Error(ErrorCode::bad_argument, "partition size mismatch");
    if (!map.trace().nonsimple.empty()) throw Error(ErrorCode::not_triangulation, "map has a non-simple face");
    for (const Face& face : map.faces())
        if (face.size() != 3) throw Error(ErrorCode::not_triangulation, "face of size " + std::to_string(face.size()));

    EdgeColoring out{3, std::vector<int>(idx(map.num_edges()))};
    for (int e = 0; e < map.num_edges(); ++e) {
        auto [u, v] = map.endpoints(e);
        const Part p = parts[idx(u)];
        const Part q = parts[idx(v)];
        if (p == q)
            throw Error(ErrorCode::not_tripartite, "edge " + std::to_string(u) + "-" + std::to_string(v) + " inside one part");
        const auto pair = std::minmax(p, q);
        if (pair == std::minmax(Part::a, Part::b))
            out.color[idx(e)] = 0;
        else if (pair == std::minmax(Part::b, Part::c))
            out.color[idx(e)] = 1;
        else
            out.color[idx(e)] = 2;
    }
    return out;
}

namespace {

// Misra-Gries state: colour table at[v][c] = edge of colour c at v, or -1.
class MisraGries {
public:
    explicit MisraGries(const Graph& g)
        : g_(g), palette_(g.max_degree() + 1), color_(idx(g.num_edges()), -1),
          at_(idx(g.num_vertices()), std::vector<int>(idx(palette_), -1)) {}

    std::vector<int> run() {
        for (int e = 0; e < g_.num_edges(); ++e) color_edge(e);
        return color_;
    }

private:
    bool is_free(int v, int c) const { return at_[idx(v)][idx(c)] < 0; }

    int free_color(int v) const {
        for (int c = 0; c < palette_; ++c)
            if (is_free(v, c)) return c;
        throw Error(ErrorCode::internal_contract, "vertex has no free color");
    }

    void set(int e, int c) {
        auto [u, v] = g_.endpoints(e);
        if (color_[idx(e)] >= 0) {
            at_[idx(u)][idx(color_[idx(e)])] = -1;
            at_[idx(v)][idx(color_[idx(e)])] = -1;
        }
        color_[idx(e)] = c;
        if (c >= 0) {
            at_[idx(u)][idx(c)] = e;
            at_[idx(v)][idx(c)] = e;
        }
    }

    int edge_between(int u, int v) const {
        for (int e : g_.incident(u))
            if (g_.other(e, u) == v) return e;
        return -1;
    }

    // Fan at u starting with the uncoloured edge to v: each next edge's colour is free on the previous leaf.
    std::vector<int> maximal_fan(int u, int v) const {
        std::vector<int> fan{v};
        std::vector<char> in_fan(idx(g_.num_vertices()), 0);
        in_fan[idx(v)] = 1;
        bool extended = true;
        while (extended) {
            extended = false;
            for (int e : g_.incident(u)) {
                const int w = g_.other(e, u);
                const int c = color_[idx(e)];
                if (c < 0 || in_fan[idx(w)] || !is_free(fan.back(), c)) continue;
                fan.push_back(w);
                in_fan[idx(w)] = 1;
                extended = true;
                break;
            }
        }
        return fan;
    }

    void invert_path(int u, int c, int d) {
        std::vector<int> path;
        int v = u;
        int want = d;
        while (true) {
            const int e = at_[idx(v)][idx(want)];
            if (e < 0) break;
            path.push_back(e);
            v = g_.other(e, v);
            want = want == d ? c : d;
        }
        std::vector<int> old;
        for (int e : path) {
            old.push_back(color_[idx(e)]);
            set(e, -1);
        }
        for (std::size_t i = 0; i < path.size(); ++i) set(path[i], old[i] == c ? d : c);
    }

    bool is_fan_prefix(int u, const std::vector<int>& fan, std::size_t last) const {
        for (std::size_t i = 1; i <= last; ++i) {
            const int c = color_[idx(edge_between(u, fan[i]))];
            if (c < 0 || !is_free(fan[i - 1], c)) return false;
        }
        return true;
    }

    void color_edge(int e) {
        auto [u, v] = g_.endpoints(e);
        std::vector<int> fan = maximal_fan(u, v);
        const int c = free_color(u);
        const int d = free_color(fan.back());
        if (c != d) invert_path(u, c, d);

        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (is_free(fan[i], d) && is_fan_prefix(u, fan, i)) {
                w = i;
                break;
            }
        }
        if (w == fan.size()) throw Error(ErrorCode::internal_contract, "no rotatable fan prefix");

        // Rotate: edge (u, fan[i]) takes the colour of (u, fan[i+1]).
        std::vector<int> shifted;
        for (std::size_t i = 0; i < w; ++i) shifted.push_back(color_[idx(edge_between(u, fan[i + 1]))]);
        for (std::size_t i = 0; i <= w; ++i) set(edge_between(u, fan[i]), -1);
        for (std::size_t i = 0; i < w; ++i) set(edge_between(u, fan[i]), shifted[i]);
        set(edge_between(u, fan[w]), d);
    }

    const Graph& g_;
    int palette_;
    std::vector<int> color_;
    std::vector<std::vector<int>> at_;
};

}  // namespace

ProperEdgeColoring misra_gries(const Graph& g) {
    if (!g.is_simple()) throw Error(ErrorCode::not_simple, "edge coloring needs a simple graph");
    ProperEdgeColoring out;
    out.color = MisraGries(g).run();
    for (int c : out.color) out.num_colors = std::max(out.num_colors, c + 1);
    if (!is_proper_edge_coloring(g, out.color)) throw Error(ErrorCode::internal_contract, "misra-gries produced an improper coloring");
    return out;
}

ProperEdgeColoring vizing_fallback(const DualGraph& dual, int d) {
    if (!dual.simple || !dual.graph.is_simple()) throw Error(ErrorCode::not_simple, "dual graph has loops or parallel edges");
    if (dual.graph.max_degree() > d) throw Error(ErrorCode::bad_argument, "dual degree exceeds d");
    return misra_gries(dual.graph);
}

bool is_proper_edge_coloring(const Graph& g, std::span<const int> color) {
    if (color.size() != idx(g.num_edges())) return false;
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::set<int> seen;
        for (int e : g.incident(v)) {
            if (color[idx(e)] < 0 || !seen.insert(color[idx(e)]).second) return false;
        }
    }
    return true;
}

}  // namespace facecolor
