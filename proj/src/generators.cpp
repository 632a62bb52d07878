#include "facecolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "facecolor/dual.hpp"
#include "facecolor/error.hpp"

namespace facecolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<std::vector<int>> icosahedron_faces() {
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 5; ++i) {
        const int u = 1 + i;
        const int u_next = 1 + (i + 1) % 5;
        const int l = 6 + i;
        const int l_next = 6 + (i + 1) % 5;
        faces.push_back({0, u, u_next});
        faces.push_back({u, l, u_next});
        faces.push_back({u_next, l, l_next});
        faces.push_back({11, l_next, l});
    }
    return faces;
}

}  // namespace

EmbeddedMap platonic(std::string_view name) {
    if (name == "tetrahedron") return from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    if (name == "cube") {
        // Vertex bits (x, y, z).
        return from_faces({{0, 2, 6, 4}, {1, 5, 7, 3}, {0, 4, 5, 1}, {2, 3, 7, 6}, {0, 1, 3, 2}, {4, 6, 7, 5}});
    }
    if (name == "octahedron") {
        // 0/1 = +x/-x, 2/3 = +y/-y, 4/5 = +z/-z.
        std::vector<std::vector<int>> faces;
        for (int x : {0, 1})
            for (int y : {2, 3})
                for (int z : {4, 5}) faces.push_back({x, y, z});
        return from_faces(faces);
    }
    if (name == "icosahedron") return from_faces(icosahedron_faces());
    if (name == "dodecahedron") return dual_map(from_faces(icosahedron_faces()));
    throw Error(ErrorCode::unknown_name, "unknown solid '" + std::string(name) + "'");
}

std::vector<std::vector<int>> k6_projective_faces() {
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

std::vector<std::vector<int>> k7_torus_faces() {
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 7; ++i) faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    for (int i = 0; i < 7; ++i) faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    return faces;
}

EmbeddedMap k6_projective() { return from_faces(k6_projective_faces()); }

EmbeddedMap k7_torus() { return from_faces(k7_torus_faces()); }

EmbeddedMap torus_grid(int m, int n) {
    if (m < 3 || n < 3) throw Error(ErrorCode::too_small, "torus grid needs at least 3 rows and 3 columns");
    auto at = [n](int i, int j) { return i * n + j; };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const int i1 = (i + 1) % m;
            const int j1 = (j + 1) % n;
            faces.push_back({at(i, j), at(i, j1), at(i1, j1), at(i1, j)});
        }
    }
    return from_faces(faces);
}

bool is_latin(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return false;
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) return false;
        std::vector<char> row_seen(n, 0);
        std::vector<char> col_seen(n, 0);
        for (std::size_t c = 0; c < n; ++c) {
            const int x = rows[r][c];
            const int y = rows[c].size() == n ? rows[c][r] : -1;
            if (x < 0 || static_cast<std::size_t>(x) >= n || row_seen[idx(x)]) return false;
            if (y < 0 || static_cast<std::size_t>(y) >= n || col_seen[idx(y)]) return false;
            row_seen[idx(x)] = 1;
            col_seen[idx(y)] = 1;
        }
    }
    return true;
}

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (!is_latin(rows_)) throw Error(ErrorCode::bad_argument, "not a Latin square");
}

LatinSquare latin_cyclic(int n, int shift) {
    if (n < 2 || shift < 0 || shift >= n) throw Error(ErrorCode::bad_argument, "latin_cyclic needs n >= 2 and 0 <= shift < n");
    std::vector<std::vector<int>> rows(idx(n), std::vector<int>(idx(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[idx(i)][idx(j)] = (i + j + shift) % n;
    return LatinSquare(std::move(rows));
}

TripartiteTriangulation biembed(const LatinSquare& black, const LatinSquare& white) {
    const int n = black.order();
    if (white.order() != n) throw Error(ErrorCode::bad_argument, "Latin squares differ in order");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (black(i, j) == white(i, j))
                throw Error(ErrorCode::edge_multiplicity, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                                              ") gives the same black and white triangle");

    std::vector<std::vector<int>> faces;
    for (const LatinSquare* square : {&black, &white})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) faces.push_back({i, n + j, 2 * n + (*square)(i, j)});

    EmbeddedMap map = from_faces(faces);
    std::vector<Part> parts(idx(3 * n));
    for (int v = 0; v < 3 * n; ++v) parts[idx(v)] = v < n ? Part::a : (v < 2 * n ? Part::b : Part::c);

    std::vector<FaceColor> face_class;
    for (const Face& face : map.faces()) {
        int i = -1;
        int j = -1;
        int k = -1;
        for (int v : face.vertices) {
            if (v < n)
                i = v;
            else if (v < 2 * n)
                j = v - n;
            else
                k = v - 2 * n;
        }
        face_class.push_back(black(i, j) == k ? FaceColor::black : FaceColor::white);
    }
    return TripartiteTriangulation{std::move(map), black, white, std::move(parts), std::move(face_class)};
}

TripartiteTriangulation find_knnn(int n, KnnnSearchStats* stats) {
    if (n < 2 || n > 8) throw Error(ErrorCode::bad_argument, "find_knnn supports 2 <= n <= 8");
    KnnnSearchStats local;
    KnnnSearchStats& st = stats != nullptr ? *stats : local;
    st = {};

    auto attempt = [&](const LatinSquare& black, const LatinSquare& white) -> std::optional<TripartiteTriangulation> {
        ++st.candidates;
        try {
            TripartiteTriangulation t = biembed(black, white);
            ++st.biembeddings;
            if (surface_info(t.map).orientable) return t;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::pinched_vertex && e.code() != ErrorCode::edge_multiplicity) throw;
        }
        return std::nullopt;
    };

    for (int s1 = 0; s1 < n; ++s1)
        for (int s2 = 0; s2 < n; ++s2)
            if (s1 != s2)
                if (auto t = attempt(latin_cyclic(n, s1), latin_cyclic(n, s2))) return std::move(*t);

    // Row permutations of the second cyclic square.
    const LatinSquare black = latin_cyclic(n, 0);
    std::vector<int> perm(idx(n));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<std::vector<int>> rows;
        for (int r : perm) rows.push_back(latin_cyclic(n, 0).rows()[idx(r)]);
        if (auto t = attempt(black, LatinSquare(std::move(rows)))) return std::move(*t);
    }
    throw Error(ErrorCode::not_found, "no orientable biembedding among " + std::to_string(st.candidates) +
                                          " candidates (cyclic shift pairs and row permutations)");
}

std::vector<EmbeddedMap> flip_walk(const EmbeddedMap& seed, int steps, std::uint64_t rng_seed) {
    std::vector<EmbeddedMap> out;
    out.reserve(idx(steps));
    std::mt19937_64 rng(rng_seed);
    EmbeddedMap current = seed;
    int attempts = 0;
    while (static_cast<int>(out.size()) < steps) {
        if (++attempts > 100 * steps + 100) throw Error(ErrorCode::flip_blocked, "flip walk stuck");
        std::uniform_int_distribution<int> pick(0, current.num_edges() - 1);
        try {
            EmbeddedMap next = flip_edge(current, pick(rng));
            out.push_back(next);
            current = std::move(next);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::flip_blocked) throw;
        }
    }
    return out;
}

}  // namespace facecolor
