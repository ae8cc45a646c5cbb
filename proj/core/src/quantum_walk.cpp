#include "qcentrality/quantum_walk.hpp"

#include <cmath>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "qcentrality/error.hpp"
#include "qcentrality/spectral.hpp"

namespace qcentrality {
namespace {

constexpr double kUnitNormTol = 1e-10;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

void WalkConfig::validate() const {
  check_alpha(alpha);
  if (!(degeneracy_rel_tol > 0.0)) {
    throw InvalidArgument("degeneracy_rel_tol must be positive");
  }
}

Eigen::MatrixXd rank_one_correction(const Eigen::MatrixXd& a, double alpha) {
  check_alpha(alpha);
  const double n = static_cast<double>(a.rows());
  return (alpha * a).array() + (1.0 - alpha) / n;
}

Eigen::MatrixXd google_matrix(const Eigen::MatrixXd& a, double alpha) {
  check_alpha(alpha);
  if (a.rows() != a.cols()) throw InvalidArgument("google_matrix: adjacency must be square");
  const Eigen::Index n = a.rows();
  const double uniform = 1.0 / static_cast<double>(n);
  Eigen::MatrixXd patched(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double out = a.row(i).sum();
    if (out > 0.0) {
      patched.row(i) = a.row(i) / out;
    } else {
      patched.row(i).setConstant(uniform);
    }
  }
  return (alpha * patched).array() + (1.0 - alpha) * uniform;
}

Hamiltonian build_cqa_hamiltonian(const DirectedGraph& g, const WalkConfig& cfg) {
  cfg.validate();
  return {bipartite_block_matrix(rank_one_correction(g.adjacency(), cfg.alpha)),
          HamiltonianRecipe::cqa};
}

CqgHamiltonians build_cqg_hamiltonians(const DirectedGraph& g, const WalkConfig& cfg) {
  cfg.validate();
  const Eigen::MatrixXd a = g.adjacency();
  return {{bipartite_block_matrix(google_matrix(a, cfg.alpha)), HamiltonianRecipe::cqg_authority},
          {bipartite_block_matrix(google_matrix(a.transpose(), cfg.alpha)),
           HamiltonianRecipe::cqg_hub}};
}

InitialState initial_uniform(std::size_t n) {
  if (n == 0) throw InvalidArgument("initial_uniform: n must be positive");
  const auto dim = static_cast<Eigen::Index>(2 * n);
  return {Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))),
          InitialStateKind::uniform};
}

InitialState initial_degree_weighted(const DirectedGraph& g) {
  const DegreeVector d = degrees(g);
  const std::size_t n = g.node_count();
  const double total = 2.0 * static_cast<double>(g.edge_count());
  if (total == 0.0) {
    throw InvalidArgument("initial_degree_weighted: graph has no edges");
  }
  Eigen::VectorXd amp(static_cast<Eigen::Index>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    amp[static_cast<Eigen::Index>(i)] = std::sqrt(static_cast<double>(d.out_deg[i]) / total);
    amp[static_cast<Eigen::Index>(n + i)] = std::sqrt(static_cast<double>(d.in_deg[i]) / total);
  }
  return {std::move(amp), InitialStateKind::degree_weighted};
}

Eigen::VectorXd limiting_occupation(const Hamiltonian& h, const InitialState& psi0,
                                    const WalkConfig& cfg) {
  cfg.validate();
  if (psi0.amplitudes.size() != h.matrix.rows()) {
    throw InvalidArgument("limiting_occupation: state dimension does not match Hamiltonian");
  }
  if (std::abs(psi0.amplitudes.norm() - 1.0) > kUnitNormTol) {
    throw InvalidArgument("limiting_occupation: initial state is not unit norm");
  }

  const SymmetricEigendecomposition eig = sym_eig(h.matrix);
  const Eigen::VectorXd coeffs = eig.eigenvectors.transpose() * psi0.amplitudes;
  const EigenvalueGroups groups = group_degenerate(eig, cfg.degeneracy_rel_tol);

  Eigen::VectorXd occ = Eigen::VectorXd::Zero(h.matrix.rows());
  for (const IndexRange& grp : groups.groups) {
    const auto begin = static_cast<Eigen::Index>(grp.begin);
    const auto size = static_cast<Eigen::Index>(grp.size());
    // Projection of ψ₀ onto this eigenspace; its squared entries are the
    // time-averaged occupation contributed by the eigenspace.
    const Eigen::VectorXd proj =
        eig.eigenvectors.middleCols(begin, size) * coeffs.segment(begin, size);
    occ.array() += proj.array().square();
  }
  return occ;
}

CentralityResult cqau_scores(const DirectedGraph& g, const WalkConfig& cfg) {
  const std::size_t n = g.node_count();
  const Eigen::VectorXd occ =
      limiting_occupation(build_cqa_hamiltonian(g, cfg), initial_uniform(n), cfg);
  return {Method::cqau, to_std(occ.head(static_cast<Eigen::Index>(n))),
          to_std(occ.tail(static_cast<Eigen::Index>(n))), Normalization::occupation, {}};
}

CentralityResult cqaw_scores(const DirectedGraph& g, const WalkConfig& cfg) {
  const std::size_t n = g.node_count();
  const Eigen::VectorXd occ =
      limiting_occupation(build_cqa_hamiltonian(g, cfg), initial_degree_weighted(g), cfg);
  return {Method::cqaw, to_std(occ.head(static_cast<Eigen::Index>(n))),
          to_std(occ.tail(static_cast<Eigen::Index>(n))), Normalization::occupation, {}};
}

CentralityResult cqg_scores(const DirectedGraph& g, const WalkConfig& cfg) {
  const std::size_t n = g.node_count();
  const CqgHamiltonians hams = build_cqg_hamiltonians(g, cfg);
  const InitialState psi0 = initial_uniform(n);

  auto hub_run = std::async(std::launch::async,
                            [&] { return limiting_occupation(hams.hub, psi0, cfg); });
  const Eigen::VectorXd auth_occ = limiting_occupation(hams.authority, psi0, cfg);
  const Eigen::VectorXd hub_occ = hub_run.get();

  return {Method::cqg, to_std(hub_occ.tail(static_cast<Eigen::Index>(n))),
          to_std(auth_occ.tail(static_cast<Eigen::Index>(n))), Normalization::occupation, {}};
}

}  // namespace qcentrality
