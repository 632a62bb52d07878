// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "facecolor/coloring.hpp"
#include "facecolor/dual.hpp"
#include "facecolor/error.hpp"
#include "facecolor/generators.hpp"
#include "facecolor/io.hpp"
#include "facecolor/search.hpp"

namespace {

using namespace facecolor;
namespace fs = std::filesystem;

// Wall-clock limits in seconds.
constexpr double limit_koenig_s = 10.0;
constexpr double limit_petersen_s = 1.0;
constexpr double limit_k7_s = 1.0;
constexpr double limit_knnn_s = 30.0;

// Corpus sizes.
constexpr int flips_per_seed = 200;
constexpr std::uint64_t flip_seed_octahedron = 1;
constexpr std::uint64_t flip_seed_icosahedron = 2;
constexpr int oracle_dual_max_vertices = 30;

struct Entry {
    std::string id;
    EmbeddedMap map;
    int d;
};

std::vector<Entry> load_fixtures() {
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(FACECOLOR_FIXTURE_DIR))
        if (e.is_regular_file()) paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    std::vector<Entry> out;
    for (const auto& p : paths) {
        EmbeddedMap m = load_map(p).map;
        const int d = m.faces().front().size();
        out.push_back({p.filename().string(), std::move(m), d});
    }
    return out;
}

std::vector<Entry> flip_corpus() {
    std::vector<Entry> out;
    int i = 0;
    for (auto& m : flip_walk(platonic("octahedron"), flips_per_seed, flip_seed_octahedron))
        out.push_back({"flip-oct-" + std::to_string(i++), std::move(m), 3});
    i = 0;
    for (auto& m : flip_walk(platonic("icosahedron"), flips_per_seed, flip_seed_icosahedron))
        out.push_back({"flip-ico-" + std::to_string(i++), std::move(m), 3});
    return out;
}

// Even torus grids 2k x 2m; side 2 is below the grid minimum, so k and m start at 2.
std::vector<Entry> grid_corpus() {
    std::vector<Entry> out;
    for (int k = 2; k <= 4; ++k)
        for (int m = 2; m <= 4; ++m)
            out.push_back({"grid-" + std::to_string(2 * k) + "x" + std::to_string(2 * m), torus_grid(2 * k, 2 * m), 4});
    return out;
}

std::vector<Entry> knnn_corpus() {
    std::vector<Entry> out;
    for (int n = 2; n <= 5; ++n) out.push_back({"knnn-" + std::to_string(n), find_knnn(n).map, 3});
    return out;
}

void append(std::vector<Entry>& to, const std::vector<Entry>& from) { to.insert(to.end(), from.begin(), from.end()); }

bool two_colorable(const EmbeddedMap& m) { return std::holds_alternative<FaceTwoColoring>(face_two_color(build_dual(m))); }

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.pass = false;
        o.detail += " over time limit";
    }
    if (!o.pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << o.detail << "; "
              << timing;
    if (limit_s > 0) std::cout << " < " << limit_s << "s";
    std::cout << "]\n" << std::flush;
}

}  // namespace

int main() {
    const std::vector<Entry> fixtures = load_fixtures();

    criterion(1, "bipartite dual implies Koenig coloring", limit_koenig_s, [&] {
        std::vector<Entry> corpus = fixtures;
        append(corpus, flip_corpus());
        append(corpus, grid_corpus());
        int bipartite = 0;
        int bad = 0;
        for (const Entry& e : corpus) {
            if (!two_colorable(e.map)) continue;
            ++bipartite;
            const auto coloring = koenig_gruenbaum(e.map, e.d);
            if (!coloring || !verify_gruenbaum(e.map, *coloring, e.d).ok) ++bad;
        }
        std::ostringstream s;
        s << corpus.size() << " maps, " << bipartite << " bipartite duals, " << bad << " failures";
        return Outcome{bad == 0 && bipartite > 0, s.str()};
    });

    criterion(2, "Petersen dual of K6", limit_petersen_s, [] {
        const EmbeddedMap k6 = k6_projective();
        const bool iso = is_isomorphic(build_dual(k6).graph, petersen_graph());
        const SearchResult p3 = edge_chromatic_exact(petersen_graph(), 3);
        const SearchResult p4 = edge_chromatic_exact(petersen_graph(), 4);
        const SearchResult g = gruenbaum_exact(k6, 3);
        std::ostringstream s;
        s << "iso=" << iso << " petersen3=" << (p3.status == SearchStatus::unsat ? "UNSAT" : "other")
          << " petersen4=" << (p4.sat() ? "SAT" : "other")
          << " k6=" << (g.status == SearchStatus::unsat ? "UNSAT" : "other");
        return Outcome{iso && p3.status == SearchStatus::unsat && p4.sat() && g.status == SearchStatus::unsat, s.str()};
    });

    criterion(3, "K7 on the torus", limit_k7_s, [] {
        const EmbeddedMap k7 = k7_torus();
        const SurfaceInfo info = surface_info(k7);
        const DualGraph dual = build_dual(k7);
        const bool bip = std::holds_alternative<FaceTwoColoring>(face_two_color(dual));
        const bool iso = is_isomorphic(dual.graph, heawood_graph());
        const auto coloring = koenig_gruenbaum(k7, 3);
        const bool ok = coloring && verify_gruenbaum(k7, *coloring, 3).ok;
        std::ostringstream s;
        s << "euler=" << info.euler_characteristic << " orientable=" << info.orientable << " bipartite=" << bip
          << " heawood=" << iso << " verified=" << ok;
        return Outcome{info.euler_characteristic == 0 && info.orientable && bip && iso && ok, s.str()};
    });

    criterion(4, "two-colorable dual implies even degrees", 0, [&] {
        std::vector<Entry> corpus = fixtures;
        append(corpus, flip_corpus());
        append(corpus, grid_corpus());
        append(corpus, knnn_corpus());
        int violations = 0;
        int checked = 0;
        for (const Entry& e : corpus) {
            if (!two_colorable(e.map)) continue;
            ++checked;
            for (Parity p : degree_parities(e.map))
                if (p != Parity::even) {
                    ++violations;
                    break;
                }
        }
        const EmbeddedMap k6 = k6_projective();
        bool k6_odd = true;
        for (Parity p : degree_parities(k6)) k6_odd = k6_odd && p == Parity::odd;
        const bool k6_fails = !two_colorable(k6);
        std::ostringstream s;
        s << checked << " two-colorable maps, " << violations << " violations, K6 odd=" << k6_odd
          << " K6 two-colorable=" << !k6_fails;
        return Outcome{violations == 0 && checked > 0 && k6_odd && k6_fails, s.str()};
    });

    criterion(5, "K_{n,n,n} biembeddings for n = 2..5", limit_knnn_s, [] {
        std::ostringstream s;
        bool all = true;
        for (int n = 2; n <= 5; ++n) {
            const TripartiteTriangulation t = find_knnn(n);
            const SurfaceInfo info = surface_info(t.map);
            bool ok = t.map.num_vertices() == 3 * n && t.map.num_edges() == 3 * n * n &&
                      is_d_angulation(t.map, 3).ok;
            for (int u = 0; u < 3 * n && ok; ++u)
                for (int v = u + 1; v < 3 * n && ok; ++v) ok = t.map.find_edge(u, v).has_value() == (u / n != v / n);
            const TwoColorResult two = face_two_color(build_dual(t.map));
            ok = ok && std::holds_alternative<FaceTwoColoring>(two);
            if (info.orientable) ok = ok && info.genus == (n - 1) * (n - 2) / 2;
            ok = ok && verify_gruenbaum(t.map, tripartite_gruenbaum(t.map, t.parts), 3).ok;
            s << (n > 2 ? " " : "") << "n=" << n << (ok ? ":ok" : ":bad") << "/genus=" << info.genus;
            all = all && ok;
        }
        return Outcome{all, s.str()};
    });

    criterion(6, "exact search agrees with dual oracles", 0, [&] {
        std::vector<Entry> corpus = fixtures;
        append(corpus, flip_corpus());
        append(corpus, grid_corpus());
        append(corpus, knnn_corpus());
        int compared = 0;
        int skipped = 0;
        int disagreements = 0;
        for (const Entry& e : corpus) {
            const DualGraph dual = build_dual(e.map);
            if (dual.num_vertices() > oracle_dual_max_vertices) continue;
            if (!dual.simple) {
                ++skipped;
                continue;
            }
            ++compared;
            const SearchResult g = gruenbaum_exact(e.map, e.d);
            const SearchResult edge = edge_chromatic_exact(dual.graph, e.d);
            const bool two = std::holds_alternative<FaceTwoColoring>(face_two_color(dual));
            const SearchResult v2 = vertex_chromatic_exact(dual.graph, 2);
            if (g.status == SearchStatus::budget_exceeded || edge.status == SearchStatus::budget_exceeded ||
                g.sat() != edge.sat() || two != v2.sat())
                ++disagreements;
        }
        std::ostringstream s;
        s << compared << " maps compared, " << skipped << " nonsimple duals skipped, " << disagreements
          << " disagreements";
        return Outcome{disagreements == 0 && compared > 0, s.str()};
    });

    criterion(7, "Misra-Gries within d+1 colors on simple duals", 0, [&] {
        int checked = 0;
        int violations = 0;
        for (const Entry& e : fixtures) {
            const DualGraph dual = build_dual(e.map);
            if (!dual.simple) continue;
            ++checked;
            const ProperEdgeColoring c = vizing_fallback(dual, e.d);
            if (c.num_colors > e.d + 1 || !is_proper_edge_coloring(dual.graph, c.color)) ++violations;
        }
        std::ostringstream s;
        s << checked << " simple dual fixtures, " << violations << " violations";
        return Outcome{violations == 0 && checked > 0, s.str()};
    });

    criterion(8, "generator surfaces", 0, [] {
        struct Expect {
            std::string id;
            EmbeddedMap map;
            int euler;
            bool orientable;
        };
        std::vector<Expect> cases;
        for (const char* name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"})
            cases.push_back({name, platonic(name), 2, true});
        cases.push_back({"k6-projective", k6_projective(), 1, false});
        cases.push_back({"k7-torus", k7_torus(), 0, true});
        for (int m = 3; m <= 8; ++m)
            for (int n = 3; n <= 8; ++n)
                cases.push_back({"torus-grid", torus_grid(m, n), 0, true});
        int bad = 0;
        for (const auto& c : cases) {
            const SurfaceInfo info = surface_info(c.map);
            if (info.euler_characteristic != c.euler || info.orientable != c.orientable) ++bad;
        }
        std::ostringstream s;
        s << cases.size() << " generator outputs, " << bad << " mismatches";
        return Outcome{bad == 0, s.str()};
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
