#pragma once

#include <iosfwd>
#include <string>

#include "dispersion/clique.hpp"
#include "dispersion/geom.hpp"

namespace dispersion {

/// Rows of d finite numbers separated by whitespace and/or commas; '#' starts a
/// comment line. d is taken from the first data row. Throws ParseError.
PointSet parse_points(std::istream& in);
PointSet read_points_file(const std::string& path);  // "-" reads stdin

/// Writes one point per line with round-trip precision.
void write_points(std::ostream& out, const PointSet& points);

enum class GraphFormat { automatic, matrix, edge_list };

/// Either an n x n matrix (diagonal ignored) or "i j w" lines covering every
/// pair of vertices 0..n-1. `automatic` prefers the matrix reading and falls
/// back to an edge list when a square matrix would be asymmetric.
WeightedCompleteGraph parse_graph(std::istream& in, GraphFormat format = GraphFormat::automatic);
WeightedCompleteGraph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::automatic);

GraphFormat parse_graph_format(const std::string& name);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace dispersion
