#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "facecolor/coloring.hpp"
#include "facecolor/embedded_map.hpp"

namespace facecolor {

/// tetrahedron, cube, octahedron, dodecahedron or icosahedron. Throws unknown_name.
EmbeddedMap platonic(std::string_view name);

std::vector<std::vector<int>> k6_projective_faces();
std::vector<std::vector<int>> k7_torus_faces();

/// K6 on the projective plane, 10 triangles.
EmbeddedMap k6_projective();
/// K7 on the torus, faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
EmbeddedMap k7_torus();
/// m x n quadrangulated torus; vertex (i, j) is i * n + j. Throws too_small below 3.
EmbeddedMap torus_grid(int m, int n);

class LatinSquare {
public:
    /// Throws bad_argument unless every row and column is a permutation of 0..n-1.
    explicit LatinSquare(std::vector<std::vector<int>> rows);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int operator()(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

bool is_latin(const std::vector<std::vector<int>>& rows);

/// cell(i, j) = (i + j + shift) mod n.
LatinSquare latin_cyclic(int n, int shift);

/// Triangulation by K_{n,n,n}: rows a_i = i, columns b_j = n + j, symbols c_k = 2n + k.
struct TripartiteTriangulation {
    EmbeddedMap map;
    LatinSquare black;
    LatinSquare white;
    std::vector<Part> parts;
    /// Construction class of each traced face.
    std::vector<FaceColor> face_class;
};

/// Black faces {a_i, b_j, c_L1(i,j)}, white faces {a_i, b_j, c_L2(i,j)}.
/// Throws edge_multiplicity when a black and white face coincide, pinched_vertex
/// when some vertex link is not a single cycle.
TripartiteTriangulation biembed(const LatinSquare& black, const LatinSquare& white);

struct KnnnSearchStats {
    std::uint64_t candidates = 0;
    std::uint64_t biembeddings = 0;
};

/// First orientable biembedding found over cyclic shift pairs, then row permutations
/// of the second square. Throws not_found when the space is exhausted, bad_argument
/// outside 2..8.
TripartiteTriangulation find_knnn(int n, KnnnSearchStats* stats = nullptr);

/// Maps visited by a random walk of `steps` successful diagonal flips.
std::vector<EmbeddedMap> flip_walk(const EmbeddedMap& seed, int steps, std::uint64_t rng_seed);

}  // namespace facecolor
