#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "facecolor/coloring.hpp"
#include "facecolor/dual.hpp"
#include "facecolor/embedded_map.hpp"

namespace facecolor {

enum class MapFormat { rotation, faces };

struct LoadedMap {
    EmbeddedMap map;
    MapFormat format;
};

/// Parses the rotation-system or face-list text format (see README). Syntax errors
/// throw Error(parse_error) with the line number; map validation errors propagate.
LoadedMap parse_map(std::string_view text);
LoadedMap load_map(const std::filesystem::path& path);

std::string write_rotation(const EmbeddedMap& map);
std::string write_faces(const EmbeddedMap& map);
std::string write_map(const EmbeddedMap& map, MapFormat format);

std::string write_dual(const EmbeddedMap& map, const DualGraph& dual);

/// One `u v : c` line per edge in edge id order. Non-empty `names` replaces color c by names[c].
std::string write_coloring(const EmbeddedMap& map, const EdgeColoring& coloring,
                           std::span<const std::string> names = {});

std::string write_gruenbaum_check(const EmbeddedMap& map, const GruenbaumCheck& check);

/// Lines `A: v ...`, `B: ...`, `C: ...`; every vertex must be listed exactly once.
std::vector<Part> parse_parts(std::string_view text, int num_vertices);
std::string write_parts(std::span<const Part> parts);

std::string read_file(const std::filesystem::path& path);

}  // namespace facecolor
