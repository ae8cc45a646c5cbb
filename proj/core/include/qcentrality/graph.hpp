#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcentrality {

/// Node identifier as it appears in files and printed tables (1-based).
using NodeId = std::size_t;

struct Edge {
  NodeId source;
  NodeId target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unweighted, loop-free directed graph on nodes 1..n.
///
/// Immutable after construction. Storage is a compressed successor list; the
/// dense 0-1 adjacency matrix returned by adjacency() is the reference
/// semantics for every computation in the library.
class DirectedGraph {
 public:
  /// Builds a graph from 1-based edges. Duplicate edges collapse to a single
  /// edge; out-of-range ids and self-loops throw InvalidArgument.
  static DirectedGraph from_edges(std::size_t n, std::span<const Edge> edges,
                                  std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  /// Successors of the node at 0-based position `index`, sorted ascending (0-based).
  std::span<const std::size_t> successors(std::size_t index) const;

  bool has_edge(NodeId source, NodeId target) const;

  /// Dense n×n matrix with A(i,j) = 1 iff edge i→j (0-based indices).
  Eigen::MatrixXd adjacency() const;

  /// The graph with every edge reversed (adjacency Aᵀ).
  DirectedGraph reversed() const;

  /// All edges, 1-based, sorted by (source, target).
  std::vector<Edge> edges() const;

  /// Node labels, empty when the graph was built without names.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Label of node `id`, falling back to the decimal id.
  std::string label(NodeId id) const;

 private:
  DirectedGraph(std::size_t n, std::vector<std::size_t> offsets,
                std::vector<std::size_t> targets, std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> targets_;
  std::vector<std::string> labels_;
};

struct DegreeVector {
  std::vector<std::size_t> out_deg;
  std::vector<std::size_t> in_deg;
};

DegreeVector degrees(const DirectedGraph& g);

/// Symmetric [[0, B], [Bᵀ, 0]] for a square block B.
Eigen::MatrixXd bipartite_block_matrix(const Eigen::MatrixXd& block);

/// Adjacency of the undirected bipartite graph on hub copies 1..n and
/// authority copies n+1..2n.
struct BipartiteAdjacency {
  std::size_t node_count = 0;  // n of the underlying directed graph
  Eigen::MatrixXd matrix;      // 2n × 2n

  std::size_t size() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
};

BipartiteAdjacency bipartite_adjacency(const DirectedGraph& g);

/// Connected components of the undirected graph described by `b.matrix`.
/// Each component lists flat 1-based ids (1..2n) in ascending order; the
/// components are ordered by their smallest member.
std::vector<std::vector<std::size_t>> connected_components_undirected(const BipartiteAdjacency& b);

/// Same count as connected_components_undirected(bipartite_adjacency(g)).size(),
/// computed from the edge list without forming the 2n×2n matrix.
std::size_t bipartite_component_count(const DirectedGraph& g);

bool is_weakly_connected(const DirectedGraph& g);

}  // namespace qcentrality
