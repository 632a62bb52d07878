// Command-line front end: check, dual, color, gruenbaum, exact, gen, scan.
//
// Exit codes: 0 success / SAT, 1 UNSAT or validation failure, 2 parse or usage
// error, 3 search budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "facecolor/coloring.hpp"
#include "facecolor/dual.hpp"
#include "facecolor/error.hpp"
#include "facecolor/generators.hpp"
#include "facecolor/io.hpp"
#include "facecolor/search.hpp"

namespace fs = std::filesystem;
using namespace facecolor;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("FACECOLOR_BUDGET")) {
        try {
            const auto value = std::stoull(env);
            if (value > 0) return value;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid FACECOLOR_BUDGET='" << env << "'\n";
    }
    return default_node_budget;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::bad_argument, "cannot write " + path);
    out << text;
}

int infer_d(const EmbeddedMap& map, int requested) { return requested > 0 ? requested : map.faces().front().size(); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& path, int d_opt) {
    const LoadedMap loaded = load_map(path);
    const EmbeddedMap& map = loaded.map;
    const int d = infer_d(map, d_opt);
    const SurfaceInfo info = surface_info(map);
    const DAngulationReport report = is_d_angulation(map, std::max(d, 3));
    const DualGraph dual = build_dual(map);

    std::cout << "format: " << (loaded.format == MapFormat::rotation ? "rotation" : "faces") << '\n';
    std::cout << "vertices: " << map.num_vertices() << "\nedges: " << map.num_edges() << "\nfaces: " << map.num_faces() << '\n';
    std::cout << "euler_characteristic: " << info.euler_characteristic << '\n';
    std::cout << "orientable: " << yes_no(info.orientable) << '\n';
    std::cout << (info.orientable ? "genus: " : "crosscaps: ") << info.genus << '\n';
    std::cout << "d: " << d << '\n';
    std::cout << "d_angulation: " << yes_no(report.ok) << '\n';
    if (!report.wrong_size_faces.empty()) std::cout << "wrong_size_faces: " << report.wrong_size_faces.size() << '\n';
    if (!report.nonsimple_faces.empty()) std::cout << "nonsimple_faces: " << report.nonsimple_faces.size() << '\n';
    std::cout << "three_connected: "
              << (report.three_connected ? yes_no(*report.three_connected) : std::string("n/a")) << '\n';
    if (report.three_connected && !*report.three_connected) std::cout << "warning: graph is not 3-connected\n";
    std::cout << "dual_simple: " << yes_no(dual.simple) << '\n';
    const auto parities = degree_parities(map);
    const auto odd = std::count(parities.begin(), parities.end(), Parity::odd);
    std::cout << "odd_degree_vertices: " << odd << '\n';
    std::cout << "degrees_all_even: " << yes_no(odd == 0) << '\n';
    return report.ok && d >= 3 ? exit_ok : exit_fail;
}

int cmd_dual(const std::string& path, const std::string& out) {
    const EmbeddedMap map = load_map(path).map;
    emit(write_dual(map, build_dual(map)), out);
    return exit_ok;
}

int cmd_color(const std::string& path, const std::string& out) {
    const EmbeddedMap map = load_map(path).map;
    const TwoColorResult result = face_two_color(build_dual(map));
    if (const auto* coloring = std::get_if<FaceTwoColoring>(&result)) {
        std::ostringstream text;
        for (std::size_t f = 0; f < coloring->color.size(); ++f)
            text << f << " : " << (coloring->color[f] == FaceColor::black ? "black" : "white") << '\n';
        emit(text.str(), out);
        std::cerr << "face 2-coloring found\n";
        return exit_ok;
    }
    const auto& cycle = std::get<OddCycle>(result);
    std::cout << "not face 2-colorable\nodd_cycle_length: " << cycle.faces.size() << "\nodd_cycle_faces:";
    for (int f : cycle.faces) std::cout << ' ' << f;
    std::cout << '\n';
    return exit_fail;
}

std::vector<std::string> split_names(const std::string& names) {
    std::vector<std::string> out;
    std::stringstream in(names);
    for (std::string item; std::getline(in, item, ',');) out.push_back(item);
    return out;
}

int cmd_gruenbaum(const std::string& path, int d_opt, const std::string& parts_path, const std::string& names,
                  std::uint64_t budget, const std::string& out) {
    const EmbeddedMap map = load_map(path).map;
    const int d = infer_d(map, d_opt);
    if (d < 3) throw Error(ErrorCode::bad_argument, "d must be at least 3");
    if (!is_d_angulation(map, d).ok) {
        std::cout << "method: none\nresult: not a " << d << "-angulation\n";
        return exit_fail;
    }

    std::optional<EdgeColoring> coloring;
    std::string method;
    if (!parts_path.empty()) {
        const auto parts = parse_parts(read_file(parts_path), map.num_vertices());
        coloring = tripartite_gruenbaum(map, parts);
        method = "tripartite";
    } else if ((coloring = koenig_gruenbaum(map, d))) {
        method = "koenig";
    } else {
        method = "exact";
        const SearchResult r = gruenbaum_exact(map, d, budget);
        if (r.status == SearchStatus::budget_exceeded) {
            std::cout << "method: exact\nresult: budget exceeded after " << r.nodes << " nodes\n";
            return exit_budget;
        }
        if (!r.sat()) {
            std::cout << "method: exact\nresult: UNSAT (no Gruenbaum coloring; " << r.nodes << " nodes)\n";
            return exit_fail;
        }
        coloring = EdgeColoring{d, r.assignment};
    }

    const GruenbaumCheck check = verify_gruenbaum(map, *coloring, d);
    std::cout << "method: " << method << '\n' << write_gruenbaum_check(map, check);
    if (!check.ok) return exit_fail;
    std::vector<std::string> labels;
    if (!names.empty()) {
        if (d != 3) throw Error(ErrorCode::bad_argument, "--names applies to d = 3 only");
        labels = split_names(names);
        if (labels.size() != 3) throw Error(ErrorCode::bad_argument, "--names needs three comma-separated labels");
    }
    const std::string text = write_coloring(map, *coloring, labels);
    if (out.empty())
        std::cout << text;
    else
        emit(text, out);
    return exit_ok;
}

int cmd_exact(const std::string& path, int d_opt, std::uint64_t budget) {
    const EmbeddedMap map = load_map(path).map;
    const int d = infer_d(map, d_opt);
    const DualGraph dual = build_dual(map);
    bool exceeded = false;

    const ChromaticValue chi = chromatic_number(dual.graph, max_search_colors, budget);
    exceeded |= chi.budget_exceeded;
    std::cout << "face_chromatic_number: " << (chi.value ? std::to_string(*chi.value) : std::string("unknown")) << '\n';

    if (dual.simple && dual.num_edges() <= max_search_edges && dual.num_vertices() <= max_search_vertices) {
        const ChromaticValue index = chromatic_index(dual.graph, max_search_colors, budget);
        exceeded |= index.budget_exceeded;
        std::cout << "dual_chromatic_index: " << (index.value ? std::to_string(*index.value) : std::string("unknown")) << '\n';
    } else {
        std::cout << "dual_chromatic_index: skipped (dual not simple or too large)\n";
    }

    if (!is_d_angulation(map, d).ok) {
        std::cout << "gruenbaum: skipped (not a " << d << "-angulation)\n";
        return exceeded ? exit_budget : exit_fail;
    }
    const SearchResult r = gruenbaum_exact(map, d, budget);
    const char* label = r.status == SearchStatus::sat ? "SAT" : (r.status == SearchStatus::unsat ? "UNSAT" : "BUDGET_EXCEEDED");
    std::cout << "gruenbaum: " << label << " (" << r.nodes << " nodes)\n";
    if (exceeded || r.status == SearchStatus::budget_exceeded) return exit_budget;
    return r.sat() ? exit_ok : exit_fail;
}

int cmd_gen(const std::string& name, const std::string& format, int rows, int cols, int order, int flips,
            std::uint64_t seed, const std::string& out, const std::string& parts_out) {
    const MapFormat fmt = format == "rotation" ? MapFormat::rotation : MapFormat::faces;
    std::optional<EmbeddedMap> map;
    if (name == "k6-projective") {
        map = k6_projective();
    } else if (name == "k7-torus") {
        map = k7_torus();
    } else if (name == "torus-grid") {
        map = torus_grid(rows, cols);
    } else if (name == "knnn") {
        TripartiteTriangulation t = find_knnn(order);
        if (!parts_out.empty()) emit(write_parts(t.parts), parts_out);
        map = std::move(t.map);
    } else if (name.rfind("flip-", 0) == 0) {
        const auto walk = flip_walk(platonic(name.substr(5)), flips, seed);
        map = walk.back();
    } else {
        map = platonic(name);
    }
    emit(write_map(*map, fmt), out);
    return exit_ok;
}

struct ScanInput {
    std::string id;
    std::optional<EmbeddedMap> map;
    std::string error;
};

int cmd_scan(const std::string& dir, std::uint64_t budget, int jobs, const std::string& table) {
    if (!fs::is_directory(dir)) throw Error(ErrorCode::bad_argument, dir + " is not a directory");
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());

    std::vector<ScanInput> inputs;
    for (const auto& p : paths) {
        ScanInput in{p.filename().string(), std::nullopt, {}};
        try {
            in.map = load_map(p).map;
        } catch (const Error& e) {
            in.error = e.what();
        }
        inputs.push_back(std::move(in));
    }

    std::vector<NamedMap> corpus;
    for (const auto& in : inputs)
        if (in.map) corpus.push_back({in.id, *in.map});
    const ScanReport scanned = conjecture2_scan(corpus, budget, jobs);

    ScanReport report;
    std::size_t next = 0;
    for (const auto& in : inputs) {
        if (in.map) {
            report.records.push_back(scanned.records[next++]);
        } else {
            ScanRecord rec;
            rec.id = in.id;
            rec.flag = ScanFlag::load_error;
            rec.note = in.error;
            report.records.push_back(rec);
        }
    }
    std::cout << format_scan_text(report);
    if (!table.empty()) emit(format_scan_table(report), table);
    return report.has_theorem2_violation() ? exit_fail : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Face 2-colorability and Gruenbaum colorings of d-angulations"};
    app.require_subcommand(1);

    std::string path;
    std::string out;
    int d = 0;
    std::uint64_t budget = default_budget();

    auto* check = app.add_subcommand("check", "Validate a map and report its surface and d-angulation properties");
    check->add_option("file", path, "Map file")->required();
    check->add_option("-d", d, "Face size (default: size of the first face)");

    auto* dual = app.add_subcommand("dual", "Write the dual graph as an adjacency list");
    dual->add_option("file", path, "Map file")->required();
    dual->add_option("-o,--output", out, "Output file (default stdout)");

    auto* color = app.add_subcommand("color", "Face 2-coloring, or an odd dual cycle");
    color->add_option("file", path, "Map file")->required();
    color->add_option("-o,--output", out, "Output file (default stdout)");

    std::string parts;
    std::string names;
    auto* gruen = app.add_subcommand("gruenbaum", "Produce and verify a Gruenbaum edge coloring");
    gruen->add_option("file", path, "Map file")->required();
    gruen->add_option("-d", d, "Face size (default: size of the first face)");
    gruen->add_option("--parts", parts, "Vertex 3-partition file (A:, B:, C: lines) for the tripartite coloring");
    gruen->add_option("--names", names, "Color labels for d = 3, e.g. red,blue,green");
    gruen->add_option("--budget", budget, "Node budget for the exact fallback");
    gruen->add_option("-o,--output", out, "Coloring output file (default stdout)");

    auto* exact = app.add_subcommand("exact", "Exact face chromatic number, dual chromatic index and Gruenbaum decision");
    exact->add_option("file", path, "Map file")->required();
    exact->add_option("-d", d, "Face size (default: size of the first face)");
    exact->add_option("--budget", budget, "Node budget per search");

    std::string name;
    std::string format = "faces";
    int rows = 4;
    int cols = 4;
    int order = 3;
    int flips = 200;
    std::uint64_t seed = 1;
    std::string parts_out;
    auto* gen = app.add_subcommand("gen", "Emit a generated map");
    gen->add_option("name", name,
                    "tetrahedron|cube|octahedron|dodecahedron|icosahedron|k6-projective|k7-torus|torus-grid|knnn|"
                    "flip-<solid>")
        ->required();
    gen->add_option("--format", format, "rotation or faces")->check(CLI::IsMember({"rotation", "faces"}));
    gen->add_option("--rows", rows, "torus-grid rows");
    gen->add_option("--cols", cols, "torus-grid columns");
    gen->add_option("--order", order, "knnn part size n");
    gen->add_option("--flips", flips, "flip-<solid>: number of random flips");
    gen->add_option("--seed", seed, "flip-<solid>: random seed");
    gen->add_option("--parts-out", parts_out, "knnn: write the vertex 3-partition here");
    gen->add_option("-o,--output", out, "Output file (default stdout)");

    std::string dir;
    int jobs = 1;
    std::string table;
    auto* scan = app.add_subcommand("scan", "Scan a directory of maps for Gruenbaum colorability");
    scan->add_option("dir", dir, "Directory of map files")->required();
    scan->add_option("--budget", budget, "Node budget per search");
    scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--table", table, "Write the tab-separated record table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (budget == 0) {
        std::cerr << "error: budget must be positive\n";
        return exit_usage;
    }

    try {
        if (*check) return cmd_check(path, d);
        if (*dual) return cmd_dual(path, out);
        if (*color) return cmd_color(path, out);
        if (*gruen) return cmd_gruenbaum(path, d, parts, names, budget, out);
        if (*exact) return cmd_exact(path, d, budget);
        if (*gen) return cmd_gen(name, format, rows, cols, order, flips, seed, out, parts_out);
        if (*scan) return cmd_scan(dir, budget, jobs, table);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::parse_error || e.code() == ErrorCode::bad_argument ||
                       e.code() == ErrorCode::unknown_name
                   ? exit_usage
                   : exit_fail;
    }
    return exit_usage;
}
