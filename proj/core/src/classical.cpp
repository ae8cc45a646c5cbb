#include "qcentrality/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "qcentrality/error.hpp"
#include "qcentrality/spectral.hpp"

namespace qcentrality {
namespace {

constexpr double kDegenerateGap = 1e-10;

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void scale(std::vector<double>& v, double factor) {
  for (double& x : v) x *= factor;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// out = Aᵀ y
void mul_transpose(const DirectedGraph& g, const std::vector<double>& y, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t j : g.successors(i)) out[j] += y[i];
  }
}

// out = A x
void mul(const DirectedGraph& g, const std::vector<double>& x, std::vector<double>& out) {
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    double s = 0.0;
    for (std::size_t j : g.successors(i)) s += x[j];
    out[i] = s;
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Largest eigenvalue of AAᵀ restricted to the complement of `hub`.
double deflated_second_eigenvalue(const DirectedGraph& g, const std::vector<double>& hub,
                                  double lambda1, const IterationConfig& cfg) {
  const std::size_t n = g.node_count();
  if (n < 2) return 0.0;
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = unif(rng);

  const auto orthonormalize = [&hub](std::vector<double>& w) {
    const double c = dot(w, hub);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * hub[i];
    const double nrm = norm2(w);
    if (nrm > 0.0) scale(w, 1.0 / nrm);
    return nrm;
  };
  if (orthonormalize(v) == 0.0) return 0.0;

  const double scale_ref = std::max(1.0, lambda1);
  std::vector<double> tmp(n);
  std::vector<double> w(n);
  double mu = 0.0;
  for (std::size_t it = 0; it < cfg.max_iter; ++it) {
    mul_transpose(g, v, tmp);
    mul(g, tmp, w);
    const double c = dot(w, hub);
    for (std::size_t i = 0; i < n; ++i) w[i] -= c * hub[i];
    const double next = dot(v, w);
    const double nrm = norm2(w);
    if (nrm == 0.0) return 0.0;
    scale(w, 1.0 / nrm);
    v.swap(w);
    const bool settled = it > 0 && std::abs(next - mu) <= cfg.tol * scale_ref;
    mu = next;
    if (lambda1 - mu <= kDegenerateGap * scale_ref || settled) break;
  }
  return mu;
}

// One step of x ↦ Gᵀx for the Google matrix of g, without forming G.
void google_transpose_step(const DirectedGraph& g, const std::vector<std::size_t>& out_deg,
                           double alpha, const std::vector<double>& x, std::vector<double>& out) {
  const std::size_t n = g.node_count();
  const double inv_n = 1.0 / static_cast<double>(n);
  double dangling = 0.0;
  double total = 0.0;
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    total += x[i];
    if (out_deg[i] == 0) {
      dangling += x[i];
      continue;
    }
    const double share = x[i] / static_cast<double>(out_deg[i]);
    for (std::size_t j : g.successors(i)) out[j] += share;
  }
  const double base = alpha * dangling * inv_n + (1.0 - alpha) * total * inv_n;
  for (std::size_t j = 0; j < n; ++j) out[j] = alpha * out[j] + base;
}

}  // namespace

void IterationConfig::validate() const {
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in [0, 1]");
}

HitsOutcome hits_iterate(const DirectedGraph& g, const IterationConfig& cfg) {
  cfg.validate();
  if (g.edge_count() == 0) throw InvalidArgument("HITS needs at least one edge");
  const std::size_t n = g.node_count();

  HitsOutcome out;
  std::vector<double> y(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> x(n, 0.0);
  std::vector<double> x_next(n);
  std::vector<double> y_next(n);
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    mul_transpose(g, y, x_next);
    scale(x_next, 1.0 / norm2(x_next));
    mul(g, x_next, y_next);
    scale(y_next, 1.0 / norm2(y_next));
    const double change = std::max(max_abs_diff(x, x_next), max_abs_diff(y, y_next));
    x.swap(x_next);
    y.swap(y_next);
    out.iterations = it;
    if (change <= cfg.tol) {
      out.converged = true;
      break;
    }
  }

  mul_transpose(g, y, x_next);
  out.dominant_eigenvalue = dot(x_next, x_next);  // Rayleigh quotient yᵀAAᵀy
  out.second_eigenvalue = deflated_second_eigenvalue(g, y, out.dominant_eigenvalue, cfg);
  out.degenerate = out.dominant_eigenvalue - out.second_eigenvalue <=
                   kDegenerateGap * std::max(1.0, out.dominant_eigenvalue);
  out.hub = std::move(y);
  out.authority = std::move(x);
  return out;
}

CentralityResult hits_scores(const DirectedGraph& g, const IterationConfig& cfg) {
  HitsOutcome h = hits_iterate(g, cfg);
  CentralityResult r{Method::hits, std::move(h.hub), std::move(h.authority),
                     Normalization::two_norm, {}};
  if (!h.converged) {
    r.warnings.push_back("HITS did not converge within " + std::to_string(cfg.max_iter) +
                         " iterations; returning the last iterate");
  }
  if (h.degenerate) {
    r.warnings.push_back(
        "HITS dominant eigenvalue is degenerate; scores depend on the uniform start vector");
  }
  return r;
}

std::vector<double> pagerank_scores(const DirectedGraph& g, const IterationConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.node_count();
  const DegreeVector d = degrees(g);
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::size_t it = 0; it < cfg.max_iter; ++it) {
    google_transpose_step(g, d.out_deg, cfg.alpha, x, next);
    double sum = 0.0;
    for (double v : next) sum += v;
    scale(next, 1.0 / sum);
    const double change = max_abs_diff(x, next);
    x.swap(next);
    if (change <= cfg.tol) return x;
  }
  throw NumericalError("PageRank did not converge within " + std::to_string(cfg.max_iter) +
                       " iterations");
}

std::vector<double> reverse_pagerank_scores(const DirectedGraph& g, const IterationConfig& cfg) {
  return pagerank_scores(g.reversed(), cfg);
}

CentralityResult pagerank_centrality(const DirectedGraph& g, const IterationConfig& cfg) {
  return {Method::pagerank, reverse_pagerank_scores(g, cfg), pagerank_scores(g, cfg),
          Normalization::one_norm, {}};
}

CentralityResult bek_scores(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  const Eigen::VectorXd d = exp_diag(sym_eig(bipartite_adjacency(g).matrix));
  return {Method::bek, {d.data(), d.data() + n}, {d.data() + n, d.data() + 2 * n},
          Normalization::raw_diagonal, {}};
}

}  // namespace qcentrality
