#pragma once

// Text formats.
//
// Hypergraph: first line `n m`, then m lines `i j k` with 1-indexed vertices sorted ascending
// within a line and lines sorted lexicographically. Lines starting with `#` are comments.
// A family file is several such blocks back to back.
//
// Point set: optional header `dim d`, then one point per line with coordinates as decimal
// literals separated by single spaces. `#` starts a comment line.

#include "simtri/geometry.hpp"
#include "simtri/hypergraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace simtri::io {

std::string format_hypergraph(const ThreeGraph& g);
ThreeGraph parse_hypergraph(std::string_view text, const std::string& source = "<input>");
std::vector<ThreeGraph> parse_hypergraph_family(std::string_view text, const std::string& source = "<input>");

/// Writes the dim header followed by shortest round-trip decimal coordinates.
std::string format_point_set(const PointSet& points);
PointSet parse_point_set(std::string_view text, const std::string& source = "<input>");

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace simtri::io
