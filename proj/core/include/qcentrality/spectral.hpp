#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qcentrality {

/// H = Φ diag(θ) Φᵀ with θ nondecreasing and Φ orthogonal (column j is φ_j).
struct SymmetricEigendecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
};

/// Dense symmetric eigensolver. Throws InvalidArgument when H deviates from
/// symmetry by more than 1e-12 in any entry, NumericalError on non-convergence.
SymmetricEigendecomposition sym_eig(const Eigen::MatrixXd& h);

/// Half-open index range [begin, end) into the sorted spectrum.
struct IndexRange {
  std::size_t begin;
  std::size_t end;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Partition of the sorted spectrum into runs of (numerically) equal eigenvalues.
struct EigenvalueGroups {
  std::vector<IndexRange> groups;
  double tolerance;  // absolute gap threshold that was applied
};

/// Chains consecutive sorted eigenvalues whose gap is at most
/// rel_tol · max(1, max|θ|) into one group.
EigenvalueGroups group_degenerate(const SymmetricEigendecomposition& eig, double rel_tol);

/// Diagonal of exp(H) from its decomposition: d[m] = Σ_k e^{θ_k} Φ(m,k)².
/// Throws NumericalError if e^{max θ} is not representable.
Eigen::VectorXd exp_diag(const SymmetricEigendecomposition& eig);

/// Finite-horizon time average (1/T)∫₀ᵀ |⟨m|e^{-iHt}ψ₀⟩|² dt by the composite
/// trapezoid rule on `steps` uniform intervals (steps + 1 samples).
///
/// This is the brute-force counterpart of the closed-form limit; the
/// propagator is applied through the eigendecomposition with complex phases.
Eigen::VectorXd time_average_quadrature(const Eigen::MatrixXd& h, const Eigen::VectorXd& psi0,
                                        double horizon, std::size_t steps);

}  // namespace qcentrality
