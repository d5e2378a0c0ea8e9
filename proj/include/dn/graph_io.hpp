#pragma once

#include "dn/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dn {

// Edge-list text format:
//   n m
//   [bipartition a]      vertices 0..a-1 form side A
//   u v                  m lines, 0 <= u < v < n
// Lines starting with '#' and blank lines are ignored.

Graph load_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Consecutive edge-list blocks, as used for graph family files.
std::vector<Graph> load_graphs(std::istream& in);

/// Writes `g` in edge-list format. A bipartition is emitted only in prefix
/// form; any other bipartition is an error (relabel first).
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// Relabels vertices so side A occupies the prefix 0..|A|-1, preserving the
/// relative order within each side. Returns the graph and new_to_old map.
InducedSubgraph prefix_relabel(const Graph& g);

}  // namespace dn
