#pragma once

#include <iosfwd>
#include <string>

#include "blockspectra/graph.hpp"

namespace blockspectra {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. ASCII, LF-terminated.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Undirected DOT with default styling; every vertex is declared so isolated
// vertices survive the round trip through visualization tools.
std::string to_dot(const Graph& g);

}  // namespace blockspectra
