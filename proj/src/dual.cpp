#include "facecolor/dual.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "facecolor/error.hpp"

namespace facecolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(idx(g.num_vertices()), 0);
    for (auto [u, v] : g.edges()) {
        adj[idx(u)] |= Mask{1} << v;
        adj[idx(v)] |= Mask{1} << u;
    }
    return adj;
}

// Colour refinement run on both graphs with one shared signature table, so equal
// colours are comparable across graphs.
bool refine_jointly(const Graph& g1, const Graph& g2, std::vector<int>& c1, std::vector<int>& c2) {
    const int n = g1.num_vertices();
    c1.assign(idx(n), 0);
    c2.assign(idx(n), 0);
    int classes = 1;
    for (int round = 0; round <= n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> table;
        auto signatures = [&](const Graph& g, const std::vector<int>& c) {
            std::vector<std::pair<int, std::vector<int>>> sig(idx(n));
            for (int v = 0; v < n; ++v) {
                sig[idx(v)].first = c[idx(v)];
                for (int w : g.neighbors(v)) sig[idx(v)].second.push_back(c[idx(w)]);
                std::sort(sig[idx(v)].second.begin(), sig[idx(v)].second.end());
                table.emplace(sig[idx(v)], 0);
            }
            return sig;
        };
        auto s1 = signatures(g1, c1);
        auto s2 = signatures(g2, c2);
        int next = 0;
        for (auto& [key, value] : table) value = next++;
        std::vector<int> count1(idx(next), 0);
        std::vector<int> count2(idx(next), 0);
        for (int v = 0; v < n; ++v) {
            c1[idx(v)] = table.at(s1[idx(v)]);
            c2[idx(v)] = table.at(s2[idx(v)]);
            ++count1[idx(c1[idx(v)])];
            ++count2[idx(c2[idx(v)])];
        }
        if (count1 != count2) return false;
        if (next == classes) break;
        classes = next;
    }
    return true;
}

struct IsoSearch {
    const std::vector<Mask>& adj1;
    const std::vector<Mask>& adj2;
    const std::vector<int>& c1;
    const std::vector<int>& c2;
    std::vector<int> order;
    std::vector<int> phi;
    Mask used = 0;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        const int n = static_cast<int>(adj2.size());
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1U) continue;
            if (c1[idx(u)] != c2[idx(w)]) continue;
            bool consistent = true;
            for (std::size_t i = 0; i < depth && consistent; ++i) {
                const int x = order[i];
                const bool e1 = (adj1[idx(u)] >> x) & 1U;
                const bool e2 = (adj2[idx(w)] >> phi[idx(x)]) & 1U;
                consistent = e1 == e2;
            }
            if (!consistent) continue;
            phi[idx(u)] = w;
            used |= Mask{1} << w;
            if (extend(depth + 1)) return true;
            used &= ~(Mask{1} << w);
            phi[idx(u)] = -1;
        }
        return false;
    }
};

}  // namespace

DualGraph build_dual(const EmbeddedMap& map) {
    DualGraph dual;
    dual.graph = Graph(map.num_faces());
    for (int e = 0; e < map.num_edges(); ++e) {
        auto [f, g] = map.edge_faces(e);
        dual.graph.add_edge(std::min(f, g), std::max(f, g));
        if (f == g) dual.loop_edges.push_back(e);
    }
    dual.simple = dual.graph.is_simple();
    return dual;
}

bool check_regularity(const Graph& g, int d) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

bool check_regularity(const DualGraph& dual, int d) { return check_regularity(dual.graph, d); }

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
    if (g1.num_vertices() > max_isomorphism_vertices || g2.num_vertices() > max_isomorphism_vertices)
        throw Error(ErrorCode::too_large, "isomorphism test is limited to 64 vertices");
    if (!g1.is_simple() || !g2.is_simple()) throw Error(ErrorCode::not_simple, "isomorphism test needs simple graphs");
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return std::nullopt;

    std::vector<int> c1;
    std::vector<int> c2;
    if (!refine_jointly(g1, g2, c1, c2)) return std::nullopt;

    const auto adj1 = adjacency_masks(g1);
    const auto adj2 = adjacency_masks(g2);
    const int n = g1.num_vertices();
    IsoSearch search{adj1, adj2, c1, c2, {}, std::vector<int>(idx(n), -1)};

    // BFS order per component keeps every new vertex adjacent to mapped ones where possible.
    std::vector<bool> placed(idx(n), false);
    for (int root = 0; root < n; ++root) {
        if (placed[idx(root)]) continue;
        std::size_t head = search.order.size();
        search.order.push_back(root);
        placed[idx(root)] = true;
        while (head < search.order.size()) {
            const int v = search.order[head++];
            for (int w : g1.neighbors(v)) {
                if (!placed[idx(w)]) {
                    placed[idx(w)] = true;
                    search.order.push_back(w);
                }
            }
        }
    }
    if (!search.extend(0)) return std::nullopt;
    return search.phi;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) { return find_isomorphism(g1, g2).has_value(); }

std::vector<std::vector<int>> dual_face_list(const EmbeddedMap& map) {
    for (int e = 0; e < map.num_edges(); ++e)
        if (map.sign(e) < 0) throw Error(ErrorCode::bad_argument, "dual re-embedding needs an all-positive signature");
    std::vector<std::vector<int>> out(idx(map.num_vertices()));
    for (int v = 0; v < map.num_vertices(); ++v)
        for (int dart : map.darts_at(v)) out[idx(v)].push_back(map.state_face(map.rotation_next(dart), 1));
    return out;
}

EmbeddedMap dual_map(const EmbeddedMap& map) { return from_faces(dual_face_list(map)); }

}  // namespace facecolor
