#include "facecolor/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "facecolor/error.hpp"

namespace facecolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(int line, const std::string& what) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        std::string line(text.substr(pos, end - pos));
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back({number, std::move(line)});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

int parse_int(const std::string& token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        fail(line, "expected a nonnegative integer, got '" + token + "'");
    return value;
}

std::vector<int> parse_ints(const std::vector<std::string>& toks, std::size_t from, int line) {
    std::vector<int> out;
    for (std::size_t i = from; i < toks.size(); ++i) out.push_back(parse_int(toks[i], line));
    return out;
}

int last_line(std::string_view text) { return static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1; }

LoadedMap parse_rotation(const std::vector<Line>& lines, std::size_t first, std::optional<int> declared, int end_line) {
    std::map<int, std::vector<int>> rows;
    std::vector<std::pair<int, int>> negative;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const Line& line = lines[i];
        auto toks = tokens(line.text);
        if (toks[0] == "~") {
            if (toks.size() != 3) fail(line.number, "sign line needs exactly two vertices");
            negative.emplace_back(parse_int(toks[1], line.number), parse_int(toks[2], line.number));
            continue;
        }
        const auto colon = line.text.find(':');
        if (colon == std::string::npos) fail(line.number, "expected 'v: n1 n2 ...'");
        auto head = tokens(line.text.substr(0, colon));
        if (head.size() != 1) fail(line.number, "expected a single vertex id before ':'");
        const int v = parse_int(head[0], line.number);
        if (declared && v >= *declared) fail(line.number, "vertex " + std::to_string(v) + " exceeds declared count");
        if (rows.count(v) != 0) fail(line.number, "vertex " + std::to_string(v) + " listed twice");
        rows[v] = parse_ints(tokens(line.text.substr(colon + 1)), 0, line.number);
    }
    const int count = declared ? *declared : (rows.empty() ? 0 : rows.rbegin()->first + 1);
    if (static_cast<int>(rows.size()) != count)
        fail(end_line, "expected " + std::to_string(count) + " vertex lines, found " + std::to_string(rows.size()) +
                           " (truncated input?)");
    RotationSpec spec;
    for (auto& [v, row] : rows) spec.rotation.push_back(std::move(row));
    spec.negative_edges = std::move(negative);
    return LoadedMap{from_rotation(spec), MapFormat::rotation};
}

LoadedMap parse_face_list(const std::vector<Line>& lines, std::size_t first, std::optional<int> declared, int end_line) {
    std::vector<std::vector<int>> faces;
    for (std::size_t i = first; i < lines.size(); ++i) {
        faces.push_back(parse_ints(tokens(lines[i].text), 0, lines[i].number));
        if (declared && static_cast<int>(faces.size()) > *declared) fail(lines[i].number, "more faces than declared");
    }
    if (declared && static_cast<int>(faces.size()) != *declared)
        fail(end_line, "expected " + std::to_string(*declared) + " faces, found " + std::to_string(faces.size()) +
                           " (truncated input?)");
    return LoadedMap{from_faces(faces), MapFormat::faces};
}

}  // namespace

LoadedMap parse_map(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) fail(1, "no content");
    const int end_line = last_line(text);
    const auto head = tokens(lines[0].text);
    if (head[0] == "rotation" || head[0] == "faces") {
        if (head.size() > 2) fail(lines[0].number, "header takes at most one count");
        std::optional<int> declared;
        if (head.size() == 2) declared = parse_int(head[1], lines[0].number);
        return head[0] == "rotation" ? parse_rotation(lines, 1, declared, end_line)
                                     : parse_face_list(lines, 1, declared, end_line);
    }
    if (lines[0].text.find(':') != std::string::npos) return parse_rotation(lines, 0, std::nullopt, end_line);
    return parse_face_list(lines, 0, std::nullopt, end_line);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

LoadedMap load_map(const std::filesystem::path& path) { return parse_map(read_file(path)); }

std::string write_rotation(const EmbeddedMap& map) {
    std::ostringstream out;
    out << "rotation " << map.num_vertices() << '\n';
    const RotationSpec spec = rotation_spec(map);
    for (int v = 0; v < map.num_vertices(); ++v) {
        out << v << ':';
        for (int w : spec.rotation[idx(v)]) out << ' ' << w;
        out << '\n';
    }
    for (auto [u, v] : spec.negative_edges) out << "~ " << u << ' ' << v << '\n';
    return out.str();
}

std::string write_faces(const EmbeddedMap& map) {
    std::ostringstream out;
    out << "faces " << map.num_faces() << '\n';
    for (const Face& face : map.faces()) {
        for (std::size_t i = 0; i < face.vertices.size(); ++i) out << (i ? " " : "") << face.vertices[i];
        out << '\n';
    }
    return out.str();
}

std::string write_map(const EmbeddedMap& map, MapFormat format) {
    return format == MapFormat::rotation ? write_rotation(map) : write_faces(map);
}

std::string write_dual(const EmbeddedMap& map, const DualGraph& dual) {
    std::ostringstream out;
    out << "dual " << dual.num_vertices() << ' ' << dual.num_edges() << (dual.simple ? " simple" : " multigraph") << '\n';
    for (int f = 0; f < map.num_faces(); ++f) {
        out << "# f" << f << " =";
        for (int v : map.faces()[idx(f)].vertices) out << ' ' << v;
        out << '\n';
    }
    for (int f = 0; f < map.num_faces(); ++f) {
        out << f << ':';
        for (int dart : map.faces()[idx(f)].darts) {
            const int e = EmbeddedMap::edge_of(dart);
            out << ' ' << dual.graph.other(e, f);
        }
        out << '\n';
    }
    return out.str();
}

std::string write_coloring(const EmbeddedMap& map, const EdgeColoring& coloring, std::span<const std::string> names) {
    std::ostringstream out;
    for (int e = 0; e < map.num_edges(); ++e) {
        auto [u, v] = map.endpoints(e);
        const int c = coloring.color[idx(e)];
        out << u << ' ' << v << " : ";
        if (!names.empty() && c >= 0 && idx(c) < names.size())
            out << names[idx(c)];
        else
            out << c;
        out << '\n';
    }
    return out.str();
}

std::string write_gruenbaum_check(const EmbeddedMap& map, const GruenbaumCheck& check) {
    std::ostringstream out;
    if (check.ok) {
        out << "gruenbaum: ok\n";
        return out.str();
    }
    out << "gruenbaum: violation\n";
    out << "face: " << *check.face << '\n';
    out << "boundary:";
    for (int v : map.faces()[idx(*check.face)].vertices) out << ' ' << v;
    out << "\ncolors:";
    for (int c : check.colors) out << ' ' << c;
    out << '\n';
    return out.str();
}

std::vector<Part> parse_parts(std::string_view text, int num_vertices) {
    std::vector<int> assigned(idx(num_vertices), -1);
    for (const Line& line : content_lines(text)) {
        const auto colon = line.text.find(':');
        if (colon == std::string::npos) fail(line.number, "expected 'A: v ...'");
        const auto head = tokens(line.text.substr(0, colon));
        if (head.size() != 1 || (head[0] != "A" && head[0] != "B" && head[0] != "C"))
            fail(line.number, "part name must be A, B or C");
        const int part = head[0][0] - 'A';
        for (int v : parse_ints(tokens(line.text.substr(colon + 1)), 0, line.number)) {
            if (v >= num_vertices) fail(line.number, "vertex " + std::to_string(v) + " out of range");
            if (assigned[idx(v)] >= 0) fail(line.number, "vertex " + std::to_string(v) + " assigned twice");
            assigned[idx(v)] = part;
        }
    }
    std::vector<Part> out;
    for (int v = 0; v < num_vertices; ++v) {
        if (assigned[idx(v)] < 0) fail(last_line(text), "vertex " + std::to_string(v) + " has no part");
        out.push_back(static_cast<Part>(assigned[idx(v)]));
    }
    return out;
}

std::string write_parts(std::span<const Part> parts) {
    std::ostringstream out;
    for (int p = 0; p < 3; ++p) {
        out << static_cast<char>('A' + p) << ':';
        for (std::size_t v = 0; v < parts.size(); ++v)
            if (static_cast<int>(parts[v]) == p) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace facecolor
