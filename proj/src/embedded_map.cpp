#include "facecolor/embedded_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "facecolor/error.hpp"

namespace facecolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

// Switching signs: BFS over a spanning tree so that tree edges become balanced.
// Returns per-vertex switches and the first unbalanced non-tree edge, if any.
struct Balance {
    std::vector<int> switch_of;
    std::vector<int> parent_edge;
    std::vector<int> depth;
    int conflict_edge = -1;
};

Balance balance(const Graph& g, const std::vector<int>& sign) {
    const int n = g.num_vertices();
    Balance b{std::vector<int>(idx(n), 0), std::vector<int>(idx(n), -1), std::vector<int>(idx(n), 0), -1};
    for (int root = 0; root < n; ++root) {
        if (b.switch_of[idx(root)] != 0) continue;
        b.switch_of[idx(root)] = 1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int e : g.incident(v)) {
                const int w = g.other(e, v);
                const int want = b.switch_of[idx(v)] * sign[idx(e)];
                if (b.switch_of[idx(w)] == 0) {
                    b.switch_of[idx(w)] = want;
                    b.parent_edge[idx(w)] = e;
                    b.depth[idx(w)] = b.depth[idx(v)] + 1;
                    queue.push(w);
                } else if (b.switch_of[idx(w)] != want && b.conflict_edge < 0) {
                    b.conflict_edge = e;
                }
            }
        }
    }
    return b;
}

}  // namespace

std::optional<int> EmbeddedMap::find_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return std::nullopt;
    for (int d : darts_at(u))
        if (head(d) == v) return edge_of(d);
    return std::nullopt;
}

void EmbeddedMap::trace_all() {
    const int darts = num_darts();
    state_face_.assign(idx(2 * darts), -1);
    edge_faces_.assign(idx(num_edges()), {-1, -1});
    auto state = [](int dart, int flag) { return 2 * dart + (flag < 0 ? 1 : 0); };

    // Positive-flag states first, so an all-positive map is traced along rotation_next only.
    for (int start_flag : {1, -1}) {
        for (int start = 0; start < darts; ++start) {
            if (state_face_[idx(state(start, start_flag))] >= 0) continue;
            const int face_id = static_cast<int>(trace_.faces.size());
            Face face;
            std::vector<std::pair<int, int>> states;
            int dart = start;
            int flag = start_flag;
            do {
                if (state_face_[idx(state(dart, flag))] >= 0)
                    throw Error(ErrorCode::internal_contract, "face orbit collides with a traced state");
                state_face_[idx(state(dart, flag))] = face_id;
                states.emplace_back(dart, flag);
                face.darts.push_back(dart);
                face.vertices.push_back(owner(dart));
                const int arrive = opposite(dart);
                flag *= sign(edge_of(dart));
                dart = flag > 0 ? rotation_next(arrive) : rotation_prev(arrive);
            } while (dart != start || flag != start_flag);

            // Reverse traversal of the same face: state (d_i, s_i) pairs with (d_{i-1}^1, -s_i).
            const std::size_t k = states.size();
            for (std::size_t i = 0; i < k; ++i) {
                const int prev_dart = states[(i + k - 1) % k].first;
                const int rev = state(opposite(prev_dart), -states[i].second);
                if (state_face_[idx(rev)] >= 0)
                    throw Error(ErrorCode::internal_contract, "face orbit is its own reverse");
                state_face_[idx(rev)] = face_id;
            }
            for (int d : face.darts) {
                auto& slot = edge_faces_[idx(edge_of(d))];
                (slot.first < 0 ? slot.first : slot.second) = face_id;
            }

            std::vector<int> sorted = face.vertices;
            std::sort(sorted.begin(), sorted.end());
            const bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
            if (repeats || face.size() < 3) trace_.nonsimple.push_back(face_id);
            trace_.faces.push_back(std::move(face));
        }
    }
}

EmbeddedMap from_rotation(const RotationSpec& spec) {
    const int n = static_cast<int>(spec.rotation.size());
    if (n == 0) throw Error(ErrorCode::empty, "no vertices");

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        const auto& around = spec.rotation[idx(v)];
        std::set<int> seen;
        for (int w : around) {
            if (w < 0 || w >= n)
                throw Error(ErrorCode::bad_involution,
                            "vertex " + std::to_string(v) + " lists unknown vertex " + std::to_string(w));
            if (w == v) throw Error(ErrorCode::non_simple, "loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                throw Error(ErrorCode::non_simple, "parallel edge " + edge_name(v, w));
            if (v < w) edges.emplace_back(v, w);
        }
    }
    for (int v = 0; v < n; ++v) {
        for (int w : spec.rotation[idx(v)]) {
            const auto& back = spec.rotation[idx(w)];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw Error(ErrorCode::bad_involution, "vertex " + std::to_string(v) + " lists " +
                                                           std::to_string(w) + " but not conversely");
        }
    }
    if (edges.empty()) throw Error(ErrorCode::empty, "no edges");
    std::sort(edges.begin(), edges.end());

    EmbeddedMap map;
    const int m = static_cast<int>(edges.size());
    map.graph_ = Graph(n, edges);
    if (!map.graph_.is_connected()) throw Error(ErrorCode::disconnected, "graph is not connected");

    map.owner_.resize(idx(2 * m));
    map.next_.resize(idx(2 * m));
    map.prev_.resize(idx(2 * m));
    map.sign_.assign(idx(m), 1);
    map.vertex_darts_.resize(idx(n));
    std::map<std::pair<int, int>, int> edge_id;
    for (int e = 0; e < m; ++e) {
        edge_id[edges[idx(e)]] = e;
        map.owner_[idx(2 * e)] = edges[idx(e)].first;
        map.owner_[idx(2 * e + 1)] = edges[idx(e)].second;
    }
    for (int v = 0; v < n; ++v) {
        auto& darts = map.vertex_darts_[idx(v)];
        for (int w : spec.rotation[idx(v)]) {
            const int e = edge_id.at({std::min(v, w), std::max(v, w)});
            darts.push_back(v < w ? 2 * e : 2 * e + 1);
        }
        const std::size_t k = darts.size();
        for (std::size_t i = 0; i < k; ++i) {
            map.next_[idx(darts[i])] = darts[(i + 1) % k];
            map.prev_[idx(darts[i])] = darts[(i + k - 1) % k];
        }
    }
    for (auto [u, v] : spec.negative_edges) {
        auto it = edge_id.find({std::min(u, v), std::max(u, v)});
        if (it == edge_id.end())
            throw Error(ErrorCode::bad_argument, "sign given for non-edge " + edge_name(u, v));
        map.sign_[idx(it->second)] = -1;
    }
    map.trace_all();
    return map;
}

EmbeddedMap from_faces(const std::vector<std::vector<int>>& faces) {
    if (faces.empty()) throw Error(ErrorCode::empty, "no faces");
    int n = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        if (face.size() < 3) throw Error(ErrorCode::non_simple, "face " + std::to_string(f) + " has fewer than 3 vertices");
        std::set<int> distinct(face.begin(), face.end());
        if (distinct.size() != face.size())
            throw Error(ErrorCode::non_simple, "face " + std::to_string(f) + " repeats a vertex");
        if (*distinct.begin() < 0) throw Error(ErrorCode::bad_argument, "negative vertex id");
        n = std::max(n, *distinct.rbegin() + 1);
    }

    std::map<std::pair<int, int>, int> multiplicity;
    for (const auto& face : faces) {
        for (std::size_t i = 0; i < face.size(); ++i) {
            const int u = face[i];
            const int v = face[(i + 1) % face.size()];
            ++multiplicity[{std::min(u, v), std::max(u, v)}];
        }
    }
    for (auto [edge, count] : multiplicity) {
        if (count != 2)
            throw Error(ErrorCode::edge_multiplicity, "edge " + edge_name(edge.first, edge.second) + " lies on " +
                                                          std::to_string(count) + " face sides");
    }

    // Corners around each vertex: (previous, next, face).
    struct Corner {
        int prev;
        int next;
        int face;
    };
    std::vector<std::vector<Corner>> corners(idx(n));
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i)
            corners[idx(face[i])].push_back({face[(i + k - 1) % k], face[(i + 1) % k], static_cast<int>(f)});
    }

    RotationSpec spec;
    spec.rotation.resize(idx(n));
    // local[f][v] = +1 if face f runs through v along the rotation, -1 against it.
    std::map<std::pair<int, int>, int> local;
    for (int v = 0; v < n; ++v) {
        const auto& cs = corners[idx(v)];
        if (cs.empty()) throw Error(ErrorCode::disconnected, "vertex " + std::to_string(v) + " lies on no face");
        // Link graph on the neighbors of v: each corner is an edge prev -- next.
        std::map<int, std::vector<int>> link;
        for (std::size_t c = 0; c < cs.size(); ++c) {
            link[cs[c].prev].push_back(static_cast<int>(c));
            link[cs[c].next].push_back(static_cast<int>(c));
        }
        std::vector<bool> used(cs.size(), false);
        const int first = link.begin()->first;
        int current = first;
        auto& order = spec.rotation[idx(v)];
        do {
            order.push_back(current);
            int pick = -1;
            for (int c : link[current]) {
                if (!used[idx(c)]) {
                    pick = c;
                    break;
                }
            }
            if (pick < 0) break;
            used[idx(pick)] = true;
            const Corner& corner = cs[idx(pick)];
            const int step_to = corner.prev == current ? corner.next : corner.prev;
            local[{corner.face, v}] = corner.prev == current ? 1 : -1;
            current = step_to;
        } while (current != first);
        if (order.size() != link.size() || std::find(used.begin(), used.end(), false) != used.end())
            throw Error(ErrorCode::pinched_vertex, "faces around vertex " + std::to_string(v) + " do not form a single cycle");
    }

    // Edge sign = product of the local orientations of a face at both ends.
    std::map<std::pair<int, int>, int> edge_sign;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            const int u = face[i];
            const int v = face[(i + 1) % face.size()];
            const int s = local.at({static_cast<int>(f), u}) * local.at({static_cast<int>(f), v});
            auto [it, inserted] = edge_sign.emplace(std::make_pair(std::min(u, v), std::max(u, v)), s);
            if (!inserted && it->second != s)
                throw Error(ErrorCode::internal_contract, "inconsistent sign on edge " + edge_name(u, v));
        }
    }

    // Normalize: switch vertices so that a BFS spanning tree is positive.
    std::vector<std::pair<int, int>> edge_list;
    std::vector<int> signs;
    for (auto [edge, s] : edge_sign) {
        edge_list.push_back(edge);
        signs.push_back(s);
    }
    const Graph g(n, edge_list);
    if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph is not connected");
    const Balance b = balance(g, signs);
    for (int v = 0; v < n; ++v) {
        if (b.switch_of[idx(v)] < 0) std::reverse(spec.rotation[idx(v)].begin(), spec.rotation[idx(v)].end());
    }
    for (std::size_t e = 0; e < edge_list.size(); ++e) {
        auto [u, v] = edge_list[e];
        if (b.switch_of[idx(u)] * b.switch_of[idx(v)] * signs[e] < 0) spec.negative_edges.push_back(edge_list[e]);
    }

    EmbeddedMap map = from_rotation(spec);
    std::vector<std::vector<int>> expected;
    for (const auto& face : faces) expected.push_back(canonical_cycle(face));
    std::sort(expected.begin(), expected.end());
    if (canonical_faces(map) != expected)
        throw Error(ErrorCode::internal_contract, "traced faces differ from the input face list");
    return map;
}

const FaceTrace& trace_faces(const EmbeddedMap& map) { return map.trace(); }

SurfaceInfo surface_info(const EmbeddedMap& map) {
    SurfaceInfo info;
    info.euler_characteristic = map.num_vertices() - map.num_edges() + map.num_faces();
    info.orientable = !unbalanced_cycle(map).has_value();
    info.genus = info.orientable ? (2 - info.euler_characteristic) / 2 : 2 - info.euler_characteristic;
    return info;
}

std::optional<std::vector<int>> unbalanced_cycle(const EmbeddedMap& map) {
    std::vector<int> signs(idx(map.num_edges()));
    for (int e = 0; e < map.num_edges(); ++e) signs[idx(e)] = map.sign(e);
    const Graph& g = map.graph();
    const Balance b = balance(g, signs);
    if (b.conflict_edge < 0) return std::nullopt;

    // Tree paths from both ends of the conflict edge up to their common ancestor.
    auto [u, v] = g.endpoints(b.conflict_edge);
    std::vector<int> up_u{u};
    std::vector<int> up_v{v};
    while (up_u.back() != up_v.back()) {
        auto& deeper = b.depth[idx(up_u.back())] >= b.depth[idx(up_v.back())] ? up_u : up_v;
        deeper.push_back(g.other(b.parent_edge[idx(deeper.back())], deeper.back()));
    }
    std::vector<int> cycle = up_u;
    for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it) cycle.push_back(*it);
    return cycle;
}

DAngulationReport is_d_angulation(const EmbeddedMap& map, int d) {
    if (d < 3) throw Error(ErrorCode::bad_argument, "face size must be at least 3");
    DAngulationReport report;
    report.d = d;
    for (int f = 0; f < map.num_faces(); ++f)
        if (map.faces()[idx(f)].size() != d) report.wrong_size_faces.push_back(f);
    report.nonsimple_faces = map.trace().nonsimple;
    report.ok = report.wrong_size_faces.empty() && report.nonsimple_faces.empty();
    if (map.num_vertices() >= 4) report.three_connected = is_3_connected(map.graph());
    return report;
}

bool is_3_connected(const EmbeddedMap& map) { return is_3_connected(map.graph()); }

std::vector<Parity> degree_parities(const EmbeddedMap& map) {
    std::vector<Parity> out;
    out.reserve(idx(map.num_vertices()));
    for (int v = 0; v < map.num_vertices(); ++v) out.push_back(map.degree(v) % 2 == 0 ? Parity::even : Parity::odd);
    return out;
}

EmbeddedMap flip_edge(const EmbeddedMap& map, int edge) {
    if (edge < 0 || edge >= map.num_edges()) throw Error(ErrorCode::bad_argument, "no such edge");
    if (!map.trace().nonsimple.empty()) throw Error(ErrorCode::not_triangulation, "map has a non-simple face");
    for (const Face& face : map.faces())
        if (face.size() != 3) throw Error(ErrorCode::not_triangulation, "map has a face of size " + std::to_string(face.size()));

    auto [f1, f2] = map.edge_faces(edge);
    if (f1 == f2) throw Error(ErrorCode::flip_blocked, "same face on both sides");
    auto [a, b] = map.endpoints(edge);
    auto apex = [&](int f) {
        for (int v : map.faces()[idx(f)].vertices)
            if (v != a && v != b) return v;
        return -1;
    };
    const int c = apex(f1);
    const int d = apex(f2);
    if (c == d) throw Error(ErrorCode::flip_blocked, "both triangles share the apex");
    if (map.find_edge(c, d)) throw Error(ErrorCode::flip_blocked, "diagonal " + edge_name(c, d) + " already exists");

    std::vector<std::vector<int>> faces;
    for (int f = 0; f < map.num_faces(); ++f) {
        if (f == f1 || f == f2) continue;
        faces.push_back(map.faces()[idx(f)].vertices);
    }
    faces.push_back({c, b, d});
    faces.push_back({c, d, a});
    return from_faces(faces);
}

EmbeddedMap switch_vertex(const EmbeddedMap& map, int v) {
    if (v < 0 || v >= map.num_vertices()) throw Error(ErrorCode::bad_argument, "no such vertex");
    RotationSpec spec = rotation_spec(map);
    std::reverse(spec.rotation[idx(v)].begin(), spec.rotation[idx(v)].end());
    std::vector<std::pair<int, int>> flipped;
    std::set<int> negative;
    for (int e = 0; e < map.num_edges(); ++e) {
        auto [a, b] = map.endpoints(e);
        const int s = (a == v || b == v) ? -map.sign(e) : map.sign(e);
        if (s < 0) flipped.emplace_back(a, b);
    }
    spec.negative_edges = std::move(flipped);
    return from_rotation(spec);
}

RotationSpec rotation_spec(const EmbeddedMap& map) {
    RotationSpec spec;
    spec.rotation.resize(idx(map.num_vertices()));
    for (int v = 0; v < map.num_vertices(); ++v)
        for (int d : map.darts_at(v)) spec.rotation[idx(v)].push_back(map.head(d));
    for (int e = 0; e < map.num_edges(); ++e)
        if (map.sign(e) < 0) spec.negative_edges.push_back(map.endpoints(e));
    return spec;
}

std::vector<std::vector<int>> face_vertex_lists(const EmbeddedMap& map) {
    std::vector<std::vector<int>> out;
    out.reserve(idx(map.num_faces()));
    for (const Face& face : map.faces()) out.push_back(face.vertices);
    return out;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    if (cycle.empty()) return cycle;
    std::vector<int> best = cycle;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < cycle.size(); ++r) {
            std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
            best = std::min(best, cycle);
        }
        std::reverse(cycle.begin(), cycle.end());
    }
    return best;
}

std::vector<std::vector<int>> canonical_faces(const EmbeddedMap& map) {
    std::vector<std::vector<int>> out;
    for (const Face& face : map.faces()) out.push_back(canonical_cycle(face.vertices));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace facecolor
