#pragma once

#include <cstddef>
#include <cstdint>

#include "qcentrality/graph.hpp"

namespace qcentrality {

/// 1→2→…→n. Requires n ≥ 2.
DirectedGraph path_graph(std::size_t n);

/// Node 1 points to 2..n-1, each of which points to n. Requires n ≥ 3.
DirectedGraph diamond_graph(std::size_t n);

/// Node 1 points to every other node. Requires n ≥ 2.
DirectedGraph star_graph(std::size_t n);

/// Path on 1..n1, node n1 pointing into a complete directed subgraph on
/// n1+1..n1+n2. Requires n1 ≥ 1 and n2 ≥ 2.
DirectedGraph tailed_graph(std::size_t n1, std::size_t n2);

/// Four-node strongly connected graph whose bipartization splits into three
/// components: 1→3, 2→1, 2→4, 3→2, 4→2.
DirectedGraph example5_graph();

/// Parameters of the directed preferential-attachment model. Each step adds
///   - with probability alpha_g: a new node with an edge to an existing node
///     chosen by in-degree + delta_in,
///   - with probability beta_g: an edge between existing nodes (source by
///     out-degree + delta_out, target by in-degree + delta_in),
///   - with probability gamma_g: a new node with an edge from an existing
///     node chosen by out-degree + delta_out.
struct ScaleFreeParams {
  double alpha_g = 0.41;
  double beta_g = 0.54;
  double gamma_g = 0.05;
  double delta_in = 0.2;
  double delta_out = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Grows the model from the 3-cycle 1→2→3→1 until n_target nodes exist, then
/// drops self-loops and collapses repeated edges. Deterministic for a fixed seed.
DirectedGraph scale_free(std::size_t n_target, const ScaleFreeParams& p);

}  // namespace qcentrality
