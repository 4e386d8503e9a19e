#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "chromadist/colouring.hpp"
#include "chromadist/graph.hpp"

namespace chromadist {

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0 <= u < v < n)
//
// Blank lines and lines starting with '#' are ignored. A graph stream is a
// concatenation of such blocks. Readers throw Error(Parse, "line L: ...").

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

std::vector<Graph> read_graph_stream(std::istream& in);
std::vector<Graph> read_graph_stream(const std::filesystem::path& path);

// Colouring file: one "edge-id colour" line per edge, ascending edge ids on
// write; any order on read as long as every edge appears exactly once.

EdgeColouring read_colouring(std::istream& in, const Graph& g);
EdgeColouring read_colouring(const std::filesystem::path& path, const Graph& g);
void write_colouring(std::ostream& out, const EdgeColouring& c);

}  // namespace chromadist
