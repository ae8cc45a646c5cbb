#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "qcentrality/centrality.hpp"
#include "qcentrality/graph.hpp"

namespace qcentrality {

struct WalkConfig {
  double alpha = 0.85;
  double degeneracy_rel_tol = 1e-8;

  /// Throws InvalidArgument unless 0 ≤ alpha ≤ 1 and degeneracy_rel_tol > 0.
  void validate() const;
};

enum class HamiltonianRecipe { cqa, cqg_authority, cqg_hub };

/// Real symmetric 2n×2n operator [[0, B], [Bᵀ, 0]] on hub copies (first n
/// coordinates) and authority copies (last n coordinates).
struct Hamiltonian {
  Eigen::MatrixXd matrix;
  HamiltonianRecipe recipe;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
  std::size_t node_count() const noexcept { return dim() / 2; }
};

enum class InitialStateKind { uniform, degree_weighted };

/// Unit-norm real amplitude vector of length 2n.
struct InitialState {
  Eigen::VectorXd amplitudes;
  InitialStateKind kind;
};

/// αA + ((1-α)/n)·𝟙𝟙ᵀ. No row normalization and no dangling-node patch.
Eigen::MatrixXd rank_one_correction(const Eigen::MatrixXd& a, double alpha);

/// Row-stochastic Google matrix: rows of A scaled by 1/out-degree, empty rows
/// replaced by the uniform row, then mixed with uniform teleportation.
Eigen::MatrixXd google_matrix(const Eigen::MatrixXd& a, double alpha);

/// H = [[0, Ã], [Ãᵀ, 0]] with Ã = rank_one_correction(A, α).
Hamiltonian build_cqa_hamiltonian(const DirectedGraph& g, const WalkConfig& cfg);

struct CqgHamiltonians {
  Hamiltonian authority;  // built from google_matrix(A)
  Hamiltonian hub;        // built from google_matrix(Aᵀ), not the transpose of the former
};

CqgHamiltonians build_cqg_hamiltonians(const DirectedGraph& g, const WalkConfig& cfg);

InitialState initial_uniform(std::size_t n);

/// Amplitude √(d_k / Σd) with d_k the out-degree (k ≤ n) or in-degree (k > n)
/// of the raw adjacency. Throws InvalidArgument for a graph without edges.
InitialState initial_degree_weighted(const DirectedGraph& g);

/// Infinite-time average of the walker occupation on every basis state.
///
/// With H = Σ_j θ_j φ_j φ_jᵀ and a = Φᵀψ₀, cross terms between different
/// energies average out, so the limit at coordinate m is
///
///   Σ_groups ( Σ_{j ∈ group} a_j Φ(m,j) )²
///
/// where a group collects (numerically) equal eigenvalues. The result depends
/// on the eigenvectors and on which eigenvalues coincide, not on their values.
Eigen::VectorXd limiting_occupation(const Hamiltonian& h, const InitialState& psi0,
                                    const WalkConfig& cfg);

/// Uniform start on the CQA walk; hub = first n occupations, authority = last n.
CentralityResult cqau_scores(const DirectedGraph& g, const WalkConfig& cfg = {});

/// Degree-weighted start on the CQA walk.
CentralityResult cqaw_scores(const DirectedGraph& g, const WalkConfig& cfg = {});

/// Two uniform-start walks: authority from the lower half under the Google
/// Hamiltonian, hub from the lower half under the reversed-graph Google Hamiltonian.
CentralityResult cqg_scores(const DirectedGraph& g, const WalkConfig& cfg = {});

}  // namespace qcentrality
