#include "qcentrality/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcentrality/error.hpp"

namespace qcentrality {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kUnitNormTol = 1e-10;

}  // namespace

SymmetricEigendecomposition sym_eig(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) {
    throw InvalidArgument("sym_eig: matrix is not square");
  }
  if (h.size() > 0) {
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (!(asym <= kSymmetryTol)) {
      throw InvalidArgument("sym_eig: matrix is not symmetric (max |H - Hᵀ| = " +
                            std::to_string(asym) + ")");
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("sym_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenvalueGroups group_degenerate(const SymmetricEigendecomposition& eig, double rel_tol) {
  if (!(rel_tol > 0.0)) {
    throw InvalidArgument("group_degenerate: rel_tol must be positive");
  }
  const Eigen::VectorXd& theta = eig.eigenvalues;
  const std::size_t n = eig.dim();
  const double scale = n == 0 ? 1.0 : std::max(1.0, theta.cwiseAbs().maxCoeff());
  const double tol = rel_tol * scale;

  EigenvalueGroups out{{}, tol};
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == n || theta[static_cast<Eigen::Index>(k)] - theta[static_cast<Eigen::Index>(k - 1)] > tol) {
      out.groups.push_back({begin, k});
      begin = k;
    }
  }
  return out;
}

Eigen::VectorXd exp_diag(const SymmetricEigendecomposition& eig) {
  if (eig.dim() == 0) return {};
  const double max_theta = eig.eigenvalues.maxCoeff();
  if (max_theta >= std::log(std::numeric_limits<double>::max())) {
    throw NumericalError("exp_diag: exp(" + std::to_string(max_theta) + ") overflows");
  }
  const Eigen::VectorXd weights = eig.eigenvalues.array().exp().matrix();
  Eigen::VectorXd d = eig.eigenvectors.cwiseAbs2() * weights;
  if (!d.allFinite()) {
    throw NumericalError("exp_diag: result is not finite");
  }
  return d;
}

Eigen::VectorXd time_average_quadrature(const Eigen::MatrixXd& h, const Eigen::VectorXd& psi0,
                                        double horizon, std::size_t steps) {
  if (psi0.size() != h.rows()) {
    throw InvalidArgument("time_average_quadrature: state dimension mismatch");
  }
  if (std::abs(psi0.norm() - 1.0) > kUnitNormTol) {
    throw InvalidArgument("time_average_quadrature: initial state is not unit norm");
  }
  if (!(horizon > 0.0)) {
    throw InvalidArgument("time_average_quadrature: horizon must be positive");
  }
  if (steps == 0) {
    throw InvalidArgument("time_average_quadrature: steps must be positive");
  }

  const SymmetricEigendecomposition eig = sym_eig(h);
  const Eigen::MatrixXd& phi = eig.eigenvectors;
  const Eigen::VectorXd coeffs = phi.transpose() * psi0;
  const Eigen::Index dim = coeffs.size();

  // ψ(t) = Φ (a ⊙ e^{-iθt}); real and imaginary parts evaluated separately.
  Eigen::VectorXd re(dim);
  Eigen::VectorXd im(dim);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
  const double dt = horizon / static_cast<double>(steps);
  for (std::size_t s = 0; s <= steps; ++s) {
    const double t = dt * static_cast<double>(s);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double phase = eig.eigenvalues[j] * t;
      re[j] = coeffs[j] * std::cos(phase);
      im[j] = -coeffs[j] * std::sin(phase);
    }
    const Eigen::VectorXd amp_re = phi * re;
    const Eigen::VectorXd amp_im = phi * im;
    const double w = (s == 0 || s == steps) ? 0.5 : 1.0;
    acc.array() += w * (amp_re.array().square() + amp_im.array().square());
  }
  return acc / static_cast<double>(steps);
}

}  // namespace qcentrality
