#pragma once

#include <cstddef>
#include <vector>

#include "qcentrality/centrality.hpp"
#include "qcentrality/graph.hpp"

namespace qcentrality {

struct IterationConfig {
  double tol = 1e-12;  // max-norm change between successive iterates
  std::size_t max_iter = 100000;
  double alpha = 0.85;  // PageRank teleportation

  void validate() const;
};

/// Full HITS outcome including the convergence and degeneracy diagnostics.
struct HitsOutcome {
  std::vector<double> hub;        // y, unit 2-norm
  std::vector<double> authority;  // x, unit 2-norm
  std::size_t iterations = 0;
  bool converged = false;
  /// Top two eigenvalues of AAᵀ coincide (within 1e-10 relative): the limit
  /// depends on the uniform start rather than on the graph alone.
  bool degenerate = false;
  double dominant_eigenvalue = 0.0;
  double second_eigenvalue = 0.0;  // estimate from a deflated power iteration
};

/// x ← Aᵀy, y ← Ax with 2-norm normalization, from the uniform vector.
/// Throws InvalidArgument for a graph without edges.
HitsOutcome hits_iterate(const DirectedGraph& g, const IterationConfig& cfg = {});

/// hits_iterate wrapped as a CentralityResult; diagnostics become warnings.
CentralityResult hits_scores(const DirectedGraph& g, const IterationConfig& cfg = {});

/// Stationary vector of the Google matrix (authority scores), summing to 1.
/// Throws NumericalError if max_iter is reached before convergence.
std::vector<double> pagerank_scores(const DirectedGraph& g, const IterationConfig& cfg = {});

/// PageRank on the reversed graph (hub scores).
std::vector<double> reverse_pagerank_scores(const DirectedGraph& g, const IterationConfig& cfg = {});

/// hub = reverse PageRank, authority = PageRank.
CentralityResult pagerank_centrality(const DirectedGraph& g, const IterationConfig& cfg = {});

/// Diagonal of exp of the bipartite adjacency: hub[i] = [e^𝒜]_{ii}, authority[i] = [e^𝒜]_{n+i,n+i}.
CentralityResult bek_scores(const DirectedGraph& g);

}  // namespace qcentrality
