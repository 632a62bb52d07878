#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facecolor/coloring.hpp"
#include "facecolor/embedded_map.hpp"
#include "facecolor/graph.hpp"

namespace facecolor {

inline constexpr std::uint64_t default_node_budget = 10'000'000;
inline constexpr int max_search_vertices = 64;
inline constexpr int max_search_edges = 120;
inline constexpr int max_search_colors = 8;

enum class SearchStatus { sat, unsat, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::unsat;
    /// Color per vertex (vertex search) or per edge (edge searches) when sat.
    std::vector<int> assignment;
    std::uint64_t nodes = 0;

    bool sat() const noexcept { return status == SearchStatus::sat; }
};

/// Exhaustive k-coloring of a simple graph. Colors are introduced in order, which
/// removes the k! relabelings. Throws too_large or not_simple on bad input.
SearchResult vertex_chromatic_exact(const Graph& g, int k, std::uint64_t budget = default_node_budget);

/// Exhaustive proper k-edge-coloring of a simple graph.
SearchResult edge_chromatic_exact(const Graph& g, int k, std::uint64_t budget = default_node_budget);

/// Grünbaum coloring by direct search on the dual multigraph. Throws
/// not_d_angulation or too_large.
SearchResult gruenbaum_exact(const EmbeddedMap& map, int d, std::uint64_t budget = default_node_budget);

struct ChromaticValue {
    /// Exact value, empty if undefined (loop) or a search ran out of budget.
    std::optional<int> value;
    bool budget_exceeded = false;
    std::uint64_t nodes = 0;
};

/// Smallest k in [1, max_k] with a proper vertex coloring; loops are ignored and
/// parallel edges merged.
ChromaticValue chromatic_number(const Graph& g, int max_k, std::uint64_t budget = default_node_budget);
ChromaticValue chromatic_index(const Graph& g, int max_k, std::uint64_t budget = default_node_budget);

enum class ScanMethod { koenig, tripartite, exact, fallback, none };
enum class Tri { yes, no, unknown };

enum class ScanFlag {
    none,
    conjecture2a_tension,  // orientable, face chromatic number <= 3, not Grünbaum colorable
    conjecture2b_tension,  // same, nonorientable
    theorem2_violation,    // face 2-colorable yet the König route failed
    not_d_angulation,
    budget_exceeded,
    load_error,
};

std::string to_string(ScanMethod m);
std::string to_string(Tri t);
std::string to_string(ScanFlag f);

struct ScanRecord {
    std::string id;
    int d = 0;
    int euler_characteristic = 0;
    bool orientable = true;
    std::optional<int> face_chromatic;
    bool face_two_colorable = false;
    Tri gruenbaum = Tri::unknown;
    ScanMethod method = ScanMethod::none;
    ScanFlag flag = ScanFlag::none;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
    std::string note;
};

struct ScanReport {
    std::vector<ScanRecord> records;

    int count(ScanFlag f) const;
    int count(ScanMethod m) const;
    bool has_theorem2_violation() const { return count(ScanFlag::theorem2_violation) > 0; }
};

struct NamedMap {
    std::string id;
    EmbeddedMap map;
};

ScanRecord scan_map(const NamedMap& entry, std::uint64_t budget = default_node_budget);

/// Runs `scan_map` over the corpus with up to `jobs` worker threads; record order
/// follows corpus order.
ScanReport conjecture2_scan(std::span<const NamedMap> corpus, std::uint64_t budget = default_node_budget,
                            int jobs = 1);

/// Human-readable report, with timings.
std::string format_scan_text(const ScanReport& report);
/// Tab-separated table, one row per record, no timings.
std::string format_scan_table(const ScanReport& report);

}  // namespace facecolor
