#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "glrank/graph.hpp"

namespace glrank {

/// Edge-list text format:
///   p <count>        first non-comment line
///   e <i> <j>        one per edge, 0-based
/// '#' starts a comment; blank lines are ignored. Throws ParseError with the line number
/// on malformed lines, self-loops, duplicates and out-of-range endpoints.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace glrank
