#include "facecolor/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "facecolor/error.hpp"

namespace facecolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr int unreached = std::numeric_limits<int>::max();

class HopcroftKarp {
public:
    HopcroftKarp(const Graph& g, std::span<const int> side, std::span<const char> active)
        : g_(g), side_(side), active_(active), mate_(idx(g.num_vertices()), -1), dist_(idx(g.num_vertices()), unreached) {
        if (side.size() != idx(g.num_vertices())) throw Error(ErrorCode::bad_argument, "side map has wrong size");
        if (!active.empty() && active.size() != idx(g.num_edges()))
            throw Error(ErrorCode::bad_argument, "edge mask has wrong size");
        for (int e = 0; e < g.num_edges(); ++e) {
            if (!is_active(e)) continue;
            auto [u, v] = g.endpoints(e);
            if (side[idx(u)] == side[idx(v)]) throw Error(ErrorCode::bad_argument, "edge inside one side");
        }
        cursor_.resize(idx(g.num_vertices()));
    }

    void run() {
        while (layer()) {
            std::fill(cursor_.begin(), cursor_.end(), 0);
            for (int u = 0; u < g_.num_vertices(); ++u)
                if (side_[idx(u)] == 0 && mate_[idx(u)] < 0) augment(u);
        }
    }

    bool is_active(int e) const { return active_.empty() || active_[idx(e)] != 0; }
    const std::vector<int>& mates() const { return mate_; }

private:
    bool layer() {
        std::queue<int> queue;
        for (int u = 0; u < g_.num_vertices(); ++u) {
            if (side_[idx(u)] != 0) continue;
            if (mate_[idx(u)] < 0) {
                dist_[idx(u)] = 0;
                queue.push(u);
            } else {
                dist_[idx(u)] = unreached;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (int e : g_.incident(u)) {
                if (!is_active(e) || e == mate_[idx(u)]) continue;
                const int w = g_.other(e, u);
                const int back = mate_[idx(w)];
                if (back < 0) {
                    found = true;
                    continue;
                }
                const int x = g_.other(back, w);
                if (dist_[idx(x)] == unreached) {
                    dist_[idx(x)] = dist_[idx(u)] + 1;
                    queue.push(x);
                }
            }
        }
        return found;
    }

    bool augment(int u) {
        const auto inc = g_.incident(u);
        for (auto& i = cursor_[idx(u)]; i < inc.size(); ++i) {
            const int e = inc[i];
            if (!is_active(e) || e == mate_[idx(u)]) continue;
            const int w = g_.other(e, u);
            const int back = mate_[idx(w)];
            bool ok = back < 0;
            if (!ok) {
                const int x = g_.other(back, w);
                ok = dist_[idx(x)] == dist_[idx(u)] + 1 && augment(x);
            }
            if (ok) {
                mate_[idx(u)] = e;
                mate_[idx(w)] = e;
                ++i;
                return true;
            }
        }
        dist_[idx(u)] = unreached;
        return false;
    }

    const Graph& g_;
    std::span<const int> side_;
    std::span<const char> active_;
    std::vector<int> mate_;
    std::vector<int> dist_;
    std::vector<std::size_t> cursor_;
};

HallViolator deficiency_set(const Graph& g, std::span<const int> side, const HopcroftKarp& hk, int from_side) {
    const auto& mate = hk.mates();
    std::vector<char> seen(idx(g.num_vertices()), 0);
    std::queue<int> queue;
    HallViolator out;
    for (int u = 0; u < g.num_vertices(); ++u) {
        if (side[idx(u)] == from_side && mate[idx(u)] < 0) {
            seen[idx(u)] = 1;
            queue.push(u);
        }
    }
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        out.vertices.push_back(u);
        for (int e : g.incident(u)) {
            if (!hk.is_active(e)) continue;
            const int w = g.other(e, u);
            if (seen[idx(w)]) continue;
            seen[idx(w)] = 1;
            out.neighborhood.push_back(w);
            if (mate[idx(w)] >= 0) {
                const int x = g.other(mate[idx(w)], w);
                if (!seen[idx(x)]) {
                    seen[idx(x)] = 1;
                    queue.push(x);
                }
            }
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.neighborhood.begin(), out.neighborhood.end());
    return out;
}

Matching collect(const Graph& g, const HopcroftKarp& hk) {
    Matching m;
    m.mate_edge = hk.mates();
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (m.mate_edge[idx(u)] == e && m.mate_edge[idx(v)] == e) m.edges.push_back(e);
    }
    return m;
}

}  // namespace

Matching maximum_matching(const Graph& g, std::span<const int> side, std::span<const char> active) {
    HopcroftKarp hk(g, side, active);
    hk.run();
    return collect(g, hk);
}

MatchingResult perfect_matching(const Graph& g, std::span<const int> side, std::span<const char> active) {
    HopcroftKarp hk(g, side, active);
    hk.run();
    Matching m = collect(g, hk);
    if (m.edges.size() * 2 == idx(g.num_vertices())) return m;

    HallViolator best = deficiency_set(g, side, hk, 0);
    HallViolator other = deficiency_set(g, side, hk, 1);
    auto deficiency = [](const HallViolator& h) {
        return static_cast<long>(h.vertices.size()) - static_cast<long>(h.neighborhood.size());
    };
    if (deficiency(other) > deficiency(best) ||
        (deficiency(other) == deficiency(best) && other.vertices.size() > best.vertices.size()))
        best = std::move(other);
    return best;
}

}  // namespace facecolor
