#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "qcentrality/graph.hpp"

namespace qcentrality {

/// A loaded graph plus what the loader had to discard to honor the graph invariants.
struct LoadResult {
  DirectedGraph graph;
  std::size_t dropped_self_loops = 0;
  std::size_t duplicate_edges = 0;   // repeated pairs collapsed into one edge
  std::size_t explicit_zeros = 0;    // Matrix Market entries whose value is 0
  bool weakly_connected = true;      // advisory only
};

/// Reads whitespace-separated "src dst" pairs with 1-based ids.
///
/// Lines starting with '#' are comments. An optional "n=<k>" line fixes the
/// node count; otherwise n is the largest id mentioned. Self-loops are
/// dropped and counted. Throws ParseError on malformed lines or empty input.
LoadResult load_edgelist(std::istream& in);

/// Reads a `%%MatrixMarket matrix coordinate (pattern|real|integer) general`
/// file. Every nonzero off-diagonal entry (i,j) becomes edge i→j; values are
/// discarded. Diagonal entries are dropped and counted.
LoadResult load_matrix_market(std::istream& in);

enum class GraphFormat { edgelist, matrix_market };

/// `.mtx` selects Matrix Market, anything else the edge-list format.
GraphFormat format_from_path(const std::filesystem::path& path);

LoadResult load_graph_file(const std::filesystem::path& path, GraphFormat format);

/// Writes "n=<k>" followed by one "src dst" line per edge; load_edgelist reads it back exactly.
void write_edgelist(std::ostream& out, const DirectedGraph& g);

/// Key-value text block describing the graph ("key=value" per line).
std::string graph_metadata(const LoadResult& loaded);
std::string graph_metadata(const DirectedGraph& g);

}  // namespace qcentrality
