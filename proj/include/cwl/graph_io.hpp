#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cwl/graph.hpp"

namespace cwl {

/// Edge-list text: one edge per line as "label1 label2"; a line holding a single
/// label declares a vertex (isolated vertices, or to pin the index order).
/// '#' starts a comment. Vertices are indexed in order of first appearance.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Writes every vertex as a lone label first, then the edges, so parsing the
/// output reproduces the graph exactly (labels and indices).
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// graph6 (McKay); vertices get the default labels x1..xn.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Reads graph6 lines, skipping blanks and a leading ">>graph6<<" header.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace cwl
