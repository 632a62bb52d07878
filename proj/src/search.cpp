#include "facecolor/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <thread>

#include "facecolor/dual.hpp"
#include "facecolor/error.hpp"

namespace facecolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

using ColorMask = std::uint32_t;

struct BudgetExhausted {};

void check_k(int k) {
    if (k < 1 || k > max_search_colors) throw Error(ErrorCode::bad_argument, "color count must be in 1..8");
}

class VertexSearch {
public:
    VertexSearch(const Graph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), color_(idx(g.num_vertices()), -1) {
        for (int v = 0; v < g.num_vertices(); ++v) neighbors_.push_back(g.neighbors(v));
    }

    SearchResult run() {
        SearchResult result;
        try {
            result.status = solve(0, -1) ? SearchStatus::sat : SearchStatus::unsat;
        } catch (const BudgetExhausted&) {
            result.status = SearchStatus::budget_exceeded;
        }
        if (result.status == SearchStatus::sat) result.assignment = color_;
        result.nodes = nodes_;
        return result;
    }

private:
    ColorMask forbidden(int v) const {
        ColorMask mask = 0;
        for (int w : neighbors_[idx(v)])
            if (color_[idx(w)] >= 0) mask |= ColorMask{1} << color_[idx(w)];
        return mask;
    }

    // DSATUR choice: most distinct neighbour colours, then highest degree, then lowest id.
    int pick() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (color_[idx(v)] >= 0) continue;
            const int sat = std::popcount(forbidden(v));
            const int deg = static_cast<int>(neighbors_[idx(v)].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used) {
        if (colored == g_.num_vertices()) return true;
        const int v = pick();
        const ColorMask blocked = forbidden(v);
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if ((blocked >> c) & 1U) continue;
            if (++nodes_ > budget_) throw BudgetExhausted{};
            color_[idx(v)] = c;
            if (solve(colored + 1, std::max(max_used, c))) return true;
            color_[idx(v)] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<int>> neighbors_;
};

// Proper edge colouring of a loopless multigraph; edges sharing an endpoint differ.
class EdgeSearch {
public:
    EdgeSearch(const Graph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), color_(idx(g.num_edges()), -1), used_(idx(g.num_vertices()), 0) {
        rank_ = degeneracy_rank();
    }

    SearchResult run() {
        SearchResult result;
        if (g_.has_loop() || g_.max_degree() > k_) {
            result.status = SearchStatus::unsat;
            return result;
        }
        try {
            result.status = solve(0, -1) ? SearchStatus::sat : SearchStatus::unsat;
        } catch (const BudgetExhausted&) {
            result.status = SearchStatus::budget_exceeded;
        }
        if (result.status == SearchStatus::sat) result.assignment = color_;
        result.nodes = nodes_;
        return result;
    }

private:
    // Smallest-last order on the line graph; edges removed last get the lowest rank.
    std::vector<int> degeneracy_rank() const {
        const int m = g_.num_edges();
        std::vector<int> line_degree(idx(m));
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g_.endpoints(e);
            line_degree[idx(e)] = g_.degree(u) + g_.degree(v) - 2;
        }
        std::vector<char> removed(idx(m), 0);
        std::vector<int> removal;
        for (int step = 0; step < m; ++step) {
            int best = -1;
            for (int e = 0; e < m; ++e)
                if (!removed[idx(e)] && (best < 0 || line_degree[idx(e)] < line_degree[idx(best)])) best = e;
            removed[idx(best)] = 1;
            removal.push_back(best);
            auto [u, v] = g_.endpoints(best);
            for (int x : {u, v})
                for (int f : g_.incident(x))
                    if (!removed[idx(f)]) --line_degree[idx(f)];
        }
        std::vector<int> rank(idx(m));
        for (int i = 0; i < m; ++i) rank[idx(removal[idx(i)])] = m - 1 - i;
        return rank;
    }

    ColorMask forbidden(int e) const {
        auto [u, v] = g_.endpoints(e);
        return used_[idx(u)] | used_[idx(v)];
    }

    int pick() const {
        int best = -1;
        int best_sat = -1;
        for (int e = 0; e < g_.num_edges(); ++e) {
            if (color_[idx(e)] >= 0) continue;
            const int sat = std::popcount(forbidden(e));
            if (sat > best_sat || (sat == best_sat && rank_[idx(e)] < rank_[idx(best)])) {
                best = e;
                best_sat = sat;
            }
        }
        return best;
    }

    void assign(int e, int c) {
        auto [u, v] = g_.endpoints(e);
        color_[idx(e)] = c;
        used_[idx(u)] |= ColorMask{1} << c;
        used_[idx(v)] |= ColorMask{1} << c;
    }

    void unassign(int e) {
        auto [u, v] = g_.endpoints(e);
        const ColorMask bit = ColorMask{1} << color_[idx(e)];
        used_[idx(u)] &= ~bit;
        used_[idx(v)] &= ~bit;
        color_[idx(e)] = -1;
    }

    bool solve(int colored, int max_used) {
        if (colored == g_.num_edges()) return true;
        const int e = pick();
        const ColorMask blocked = forbidden(e);
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if ((blocked >> c) & 1U) continue;
            if (++nodes_ > budget_) throw BudgetExhausted{};
            assign(e, c);
            if (solve(colored + 1, std::max(max_used, c))) return true;
            unassign(e);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<ColorMask> used_;
    std::vector<int> rank_;
};

void check_size(const Graph& g, bool edges_too) {
    if (g.num_vertices() > max_search_vertices) throw Error(ErrorCode::too_large, "exact search is limited to 64 vertices");
    if (edges_too && g.num_edges() > max_search_edges) throw Error(ErrorCode::too_large, "exact edge search is limited to 120 edges");
}

}  // namespace

SearchResult vertex_chromatic_exact(const Graph& g, int k, std::uint64_t budget) {
    check_k(k);
    check_size(g, false);
    if (!g.is_simple()) throw Error(ErrorCode::not_simple, "vertex search needs a simple graph");
    return VertexSearch(g, k, budget).run();
}

SearchResult edge_chromatic_exact(const Graph& g, int k, std::uint64_t budget) {
    check_k(k);
    check_size(g, true);
    if (!g.is_simple()) throw Error(ErrorCode::not_simple, "edge search needs a simple graph");
    return EdgeSearch(g, k, budget).run();
}

SearchResult gruenbaum_exact(const EmbeddedMap& map, int d, std::uint64_t budget) {
    check_k(d);
    if (!is_d_angulation(map, d).ok) throw Error(ErrorCode::not_d_angulation, "map is not a " + std::to_string(d) + "-angulation");
    const DualGraph dual = build_dual(map);
    check_size(dual.graph, true);
    // Dual edge ids are primal edge ids, so the assignment is the primal coloring.
    return EdgeSearch(dual.graph, d, budget).run();
}

ChromaticValue chromatic_number(const Graph& g, int max_k, std::uint64_t budget) {
    ChromaticValue out;
    const Graph simple = g.simplified();
    for (int k = 1; k <= std::min(max_k, max_search_colors); ++k) {
        const SearchResult r = vertex_chromatic_exact(simple, k, budget);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::budget_exceeded) {
            out.budget_exceeded = true;
            return out;
        }
        if (r.sat()) {
            out.value = k;
            return out;
        }
    }
    return out;
}

ChromaticValue chromatic_index(const Graph& g, int max_k, std::uint64_t budget) {
    ChromaticValue out;
    for (int k = std::max(1, g.max_degree()); k <= std::min(max_k, max_search_colors); ++k) {
        const SearchResult r = edge_chromatic_exact(g, k, budget);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::budget_exceeded) {
            out.budget_exceeded = true;
            return out;
        }
        if (r.sat()) {
            out.value = k;
            return out;
        }
    }
    return out;
}

std::string to_string(ScanMethod m) {
    switch (m) {
    case ScanMethod::koenig: return "koenig";
    case ScanMethod::tripartite: return "tripartite";
    case ScanMethod::exact: return "exact";
    case ScanMethod::fallback: return "fallback";
    case ScanMethod::none: return "none";
    }
    return "none";
}

std::string to_string(Tri t) {
    switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(ScanFlag f) {
    switch (f) {
    case ScanFlag::none: return "-";
    case ScanFlag::conjecture2a_tension: return "conjecture-2a-tension";
    case ScanFlag::conjecture2b_tension: return "conjecture-2b-tension";
    case ScanFlag::theorem2_violation: return "THEOREM-2-VIOLATION";
    case ScanFlag::not_d_angulation: return "not-d-angulation";
    case ScanFlag::budget_exceeded: return "budget-exceeded";
    case ScanFlag::load_error: return "load-error";
    }
    return "-";
}

int ScanReport::count(ScanFlag f) const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [&](const ScanRecord& r) { return r.flag == f; }));
}

int ScanReport::count(ScanMethod m) const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [&](const ScanRecord& r) { return r.method == m; }));
}

ScanRecord scan_map(const NamedMap& entry, std::uint64_t budget) {
    const auto started = std::chrono::steady_clock::now();
    const EmbeddedMap& map = entry.map;
    ScanRecord rec;
    rec.id = entry.id;
    const SurfaceInfo info = surface_info(map);
    rec.euler_characteristic = info.euler_characteristic;
    rec.orientable = info.orientable;

    auto finish = [&]() {
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        return rec;
    };

    const int d = map.faces().front().size();
    const bool uniform = std::all_of(map.faces().begin(), map.faces().end(), [&](const Face& f) { return f.size() == d; });
    if (!uniform || !map.trace().nonsimple.empty() || d < 3) {
        rec.flag = ScanFlag::not_d_angulation;
        rec.note = "faces are not simple cycles of one size";
        return finish();
    }
    rec.d = d;

    const DualGraph dual = build_dual(map);
    const TwoColorResult two = face_two_color(dual);
    if (std::holds_alternative<FaceTwoColoring>(two)) {
        rec.face_two_colorable = true;
        rec.face_chromatic = 2;
        rec.method = ScanMethod::koenig;
        const auto coloring = koenig_gruenbaum(map, d);
        if (coloring && verify_gruenbaum(map, *coloring, d).ok) {
            rec.gruenbaum = Tri::yes;
        } else {
            rec.gruenbaum = Tri::no;
            rec.flag = ScanFlag::theorem2_violation;
            rec.note = "König route failed on a bipartite dual";
        }
        return finish();
    }

    bool out_of_budget = false;
    if (dual.num_vertices() <= max_search_vertices) {
        const ChromaticValue chi = chromatic_number(dual.graph, std::min(d + 1, max_search_colors), budget);
        rec.nodes += chi.nodes;
        rec.face_chromatic = chi.value;
        out_of_budget = chi.budget_exceeded;
    }

    if (dual.num_vertices() <= max_search_vertices && dual.num_edges() <= max_search_edges && d <= max_search_colors) {
        rec.method = ScanMethod::exact;
        const SearchResult r = gruenbaum_exact(map, d, budget);
        rec.nodes += r.nodes;
        if (r.status == SearchStatus::budget_exceeded) {
            out_of_budget = true;
        } else {
            rec.gruenbaum = r.sat() ? Tri::yes : Tri::no;
        }
    } else if (dual.simple) {
        rec.method = ScanMethod::fallback;
        const ProperEdgeColoring near = vizing_fallback(dual, d);
        rec.gruenbaum = near.num_colors <= d ? Tri::yes : Tri::unknown;
        rec.note = "dual too large for exact search; Misra-Gries used " + std::to_string(near.num_colors) + " colors";
    } else {
        rec.note = "dual too large for exact search";
    }

    if (out_of_budget) {
        rec.flag = ScanFlag::budget_exceeded;
    } else if (d == 3 && rec.face_chromatic && *rec.face_chromatic <= 3 && rec.gruenbaum == Tri::no) {
        rec.flag = info.orientable ? ScanFlag::conjecture2a_tension : ScanFlag::conjecture2b_tension;
    }
    return finish();
}

ScanReport conjecture2_scan(std::span<const NamedMap> corpus, std::uint64_t budget, int jobs) {
    ScanReport report;
    report.records.resize(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < corpus.size(); i = next++) report.records[i] = scan_map(corpus[i], budget);
    };
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    return report;
}

std::string format_scan_text(const ScanReport& report) {
    std::ostringstream out;
    for (const ScanRecord& r : report.records) {
        out << r.id << ": d=" << r.d << " chi=" << r.euler_characteristic << (r.orientable ? " orientable" : " nonorientable")
            << " face_chromatic=" << (r.face_chromatic ? std::to_string(*r.face_chromatic) : std::string("?"))
            << " face2=" << (r.face_two_colorable ? "yes" : "no") << " gruenbaum=" << to_string(r.gruenbaum)
            << " method=" << to_string(r.method) << " flag=" << to_string(r.flag) << " nodes=" << r.nodes
            << " time_ms=" << r.elapsed_ms;
        if (!r.note.empty()) out << " note=\"" << r.note << '"';
        out << '\n';
    }
    out << "summary: maps=" << report.records.size() << " koenig=" << report.count(ScanMethod::koenig)
        << " tripartite=" << report.count(ScanMethod::tripartite) << " exact=" << report.count(ScanMethod::exact)
        << " fallback=" << report.count(ScanMethod::fallback) << " none=" << report.count(ScanMethod::none)
        << " conjecture2a_tension=" << report.count(ScanFlag::conjecture2a_tension)
        << " conjecture2b_tension=" << report.count(ScanFlag::conjecture2b_tension)
        << " theorem2_violations=" << report.count(ScanFlag::theorem2_violation)
        << " budget_exceeded=" << report.count(ScanFlag::budget_exceeded)
        << " not_d_angulation=" << report.count(ScanFlag::not_d_angulation)
        << " load_errors=" << report.count(ScanFlag::load_error) << '\n';
    return out.str();
}

std::string format_scan_table(const ScanReport& report) {
    std::ostringstream out;
    out << "id\td\teuler\torientable\tface_chromatic\tface_two_colorable\tgruenbaum\tmethod\tflag\tnodes\n";
    for (const ScanRecord& r : report.records) {
        out << r.id << '\t' << r.d << '\t' << r.euler_characteristic << '\t' << (r.orientable ? "yes" : "no") << '\t'
            << (r.face_chromatic ? std::to_string(*r.face_chromatic) : std::string("?")) << '\t'
            << (r.face_two_colorable ? "yes" : "no") << '\t' << to_string(r.gruenbaum) << '\t' << to_string(r.method)
            << '\t' << to_string(r.flag) << '\t' << r.nodes << '\n';
    }
    return out.str();
}

}  // namespace facecolor
