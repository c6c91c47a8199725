#pragma once

#include <iosfwd>
#include <string>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

enum class GraphFormat { edgelist, json };

/// Edge-list text: one "u v" pair per line, 0-based ids, '#' comments and
/// blank lines ignored. An optional "p <n> <m>" header fixes the vertex
/// count; otherwise it is max id + 1. Malformed lines raise
/// std::invalid_argument naming the line number.
Graph read_graph(std::istream& in, GraphFormat format);

/// Reads by extension: ".json" as JSON, everything else as edge list.
Graph read_graph_file(const std::string& path);

void write_graph(const Graph& g, std::ostream& out, GraphFormat format);

/// Parsed coloring file; assignment slots align with g's edge ids.
struct ColoringFile {
  PartialColoring coloring;
  std::string branch;
  int bound_claimed = 0;
};

/// JSON with keys n, num_colors, bound_claimed, branch and one
/// {u, v, color} object per edge in edge-id order; color 0 marks an
/// uncolored edge. Output is byte-stable for identical inputs.
void write_coloring(const Graph& g, const PartialColoring& c, const std::string& branch,
                    int bound_claimed, std::ostream& out);

/// Inverse of write_coloring against the same graph. Rejects colorings whose
/// vertex count or edge set do not match g.
ColoringFile read_coloring(std::istream& in, const Graph& g);

}  // namespace strongedge
