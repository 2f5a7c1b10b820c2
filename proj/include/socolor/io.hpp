#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "socolor/coloring.hpp"
#include "socolor/embedding.hpp"
#include "socolor/graph.hpp"

namespace soc {

// Wire formats. Vertices are 1-indexed on disk and 0-indexed in memory.
//
//   graph     "p edge V E", then E lines "e u v" with u < v; "c" comments
//   labels    "l <vertex> <role>"
//   coloring  "<vertex> <color>", every vertex exactly once; "#" comments
//   rotation  "p rotation V", then one line "r <v> <u1> <u2> ..." per vertex

std::string to_dimacs(const Graph& g, std::string_view comment = {});
/// Labels lines ("l ...") are accepted inline as well.
Graph from_dimacs(std::string_view text);

std::string to_labels(const Graph& g);
void apply_labels(Graph& g, std::string_view text);

std::string to_coloring_text(const Coloring& c);
Coloring from_coloring_text(std::string_view text, std::size_t num_vertices);

std::string to_rotation_text(const RotationSystem& rot);
RotationSystem from_rotation_text(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace soc
