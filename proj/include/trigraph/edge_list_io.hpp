#pragma once

#include <filesystem>
#include <iosfwd>

#include "trigraph/graph.hpp"

namespace trigraph {

// Text edge lists: one "u v" pair per line, '#' lines are comments except the
// directive "# n <count>", which fixes the vertex count.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

// Writes the "# n" directive followed by canonical edges (u < v, sorted).
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace trigraph
