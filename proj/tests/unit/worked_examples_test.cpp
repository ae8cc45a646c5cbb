#include <qcentrality/centrality.hpp>
#include <qcentrality/classical.hpp>
#include <qcentrality/generators.hpp>
#include <qcentrality/quantum_walk.hpp>
#include <qcentrality/ranking.hpp>
#include <qcentrality/spectral.hpp>

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qcentrality {
namespace {

DirectedGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  return DirectedGraph::from_edges(n, edges);
}

DirectedGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = 1; j <= n; ++j) {
      if (i != j) edges.push_back({i, j});
    }
  }
  return DirectedGraph::from_edges(n, edges);
}

TEST(Examples, DegreesOfToyGraphs) {
  EXPECT_EQ(degrees(path_graph(4)).out_deg, (std::vector<std::size_t>{1, 1, 1, 0}));
  EXPECT_EQ(degrees(diamond_graph(5)).out_deg, (std::vector<std::size_t>{3, 1, 1, 1, 0}));
  EXPECT_EQ(degrees(tailed_graph(4, 4)).out_deg,
            (std::vector<std::size_t>{1, 1, 1, 4, 3, 3, 3, 3}));
  const auto empty = degrees(DirectedGraph::from_edges(3, {}));
  EXPECT_EQ(empty.out_deg, (std::vector<std::size_t>{0, 0, 0}));
  const std::vector<Edge> small{{1, 2}, {1, 3}, {2, 3}, {3, 2}};
  EXPECT_EQ(tailed_graph(1, 2).edges(), small);
}

TEST(Examples, SingleEdgeBipartization) {
  const Edge e[] = {{1, 2}};
  const auto b = bipartite_adjacency(DirectedGraph::from_edges(2, e));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(4, 4);
  expected(0, 3) = expected(3, 0) = 1.0;
  EXPECT_EQ(b.matrix, expected);
}

TEST(Examples, CompleteGraphBipartizationIsConnected) {
  const auto comps = connected_components_undirected(bipartite_adjacency(complete(5)));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), 10u);
}

TEST(Examples, SpectraOfSmallHamiltonians) {
  Eigen::MatrixXd x(2, 2);
  x << 0, 1, 1, 0;
  const auto eig = sym_eig(x);
  EXPECT_NEAR(eig.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(eig.eigenvalues[1], 1.0, 1e-15);
  EXPECT_NEAR(std::abs(eig.eigenvectors(0, 0)), 1 / std::sqrt(2.0), 1e-15);

  const auto zero = sym_eig(Eigen::MatrixXd::Zero(2, 2));
  EXPECT_EQ(zero.eigenvalues, Eigen::VectorXd::Zero(2));

  const auto e5 = sym_eig(bipartite_adjacency(example5_graph()).matrix).eigenvalues;
  for (double target : {-std::sqrt(2.0), -1.0, 1.0, std::sqrt(2.0)}) {
    EXPECT_LT((e5.array() - target).abs().minCoeff(), 1e-12) << target;
  }

  const auto star = sym_eig(bipartite_adjacency(star_graph(4)).matrix);
  const auto groups = group_degenerate(star, 1e-8).groups;
  ASSERT_EQ(groups.size(), 3u);
  EXPECT_EQ(groups[1].size(), 6u);
  EXPECT_NEAR(star.eigenvalues[7], std::sqrt(3.0), 1e-12);

  SymmetricEigendecomposition distinct{Eigen::Vector3d(1, 2, 3), Eigen::Matrix3d::Identity()};
  EXPECT_EQ(group_degenerate(distinct, 1e-8).groups.size(), 3u);
  SymmetricEigendecomposition chained{Eigen::Vector3d(1, 1 + 1e-12, 5), Eigen::Matrix3d::Identity()};
  EXPECT_EQ(group_degenerate(chained, 1e-8).groups, (std::vector<IndexRange>{{0, 2}, {2, 3}}));
}

TEST(Examples, ExpDiagOfSmallStar) {
  EXPECT_EQ(exp_diag(sym_eig(Eigen::MatrixXd::Zero(3, 3))), Eigen::VectorXd::Ones(3));
  const auto d = exp_diag(sym_eig(bipartite_adjacency(star_graph(3)).matrix));
  EXPECT_NEAR(d[0], std::cosh(std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(d[4], (std::cosh(std::sqrt(2.0)) + 1) / 2, 1e-12);
}

TEST(Examples, QuadratureOnPath) {
  const auto g = path_graph(4);
  const auto h = build_cqa_hamiltonian(g, {});
  const auto avg = time_average_quadrature(h.matrix, initial_uniform(4).amplitudes, 2000.0, 200000);
  EXPECT_NEAR(avg[0], 0.13413, 1e-3);

  const auto eig = sym_eig(h.matrix);
  const Eigen::VectorXd phi = eig.eigenvectors.col(5);
  const auto stationary = time_average_quadrature(h.matrix, phi, 37.0, 1000);
  EXPECT_LT((stationary - phi.cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Examples, RankOneCorrectionLimits) {
  const Eigen::MatrixXd a = path_graph(4).adjacency();
  EXPECT_EQ(rank_one_correction(a, 1.0), a);
  EXPECT_EQ(rank_one_correction(Eigen::MatrixXd::Zero(2, 2), 0.0), Eigen::MatrixXd::Constant(2, 2, 0.5));
  const Eigen::MatrixXd c = rank_one_correction(a, 0.85);
  EXPECT_NEAR(c(0, 1), 0.8875, 1e-15);
  EXPECT_NEAR(c(0, 0), 0.0375, 1e-15);

  const auto h1 = build_cqa_hamiltonian(path_graph(4), {1.0, 1e-8});
  EXPECT_EQ(h1.matrix, bipartite_adjacency(path_graph(4)).matrix);
  const auto star = build_cqa_hamiltonian(star_graph(4), {});
  const Eigen::RowVectorXd row = star.matrix.block(0, 4, 1, 4);
  EXPECT_LT((row - Eigen::RowVector4d(0.0375, 0.8875, 0.8875, 0.8875)).norm(), 1e-15);
}

TEST(Examples, GoogleMatrixArithmetic) {
  EXPECT_EQ(google_matrix(Eigen::MatrixXd::Ones(3, 3), 0.0), Eigen::MatrixXd::Constant(3, 3, 1.0 / 3));
  Eigen::MatrixXd two(2, 2);
  two << 0, 1, 1, 0;
  Eigen::MatrixXd expected(2, 2);
  expected << 0.075, 0.925, 0.925, 0.075;
  EXPECT_LT((google_matrix(two, 0.85) - expected).norm(), 1e-15);

  const Eigen::MatrixXd a = star_graph(4).adjacency();
  const Eigen::MatrixXd g = google_matrix(a, 0.85);
  const Eigen::MatrixXd gr = google_matrix(a.transpose(), 0.85);
  EXPECT_LT((g.row(2) - Eigen::RowVectorXd::Constant(4, 0.25)).norm(), 1e-15);
  EXPECT_LT((gr.row(0) - Eigen::RowVectorXd::Constant(4, 0.25)).norm(), 1e-15);
  EXPECT_GT((gr.row(1) - Eigen::RowVectorXd::Constant(4, 0.25)).norm(), 0.5);
}

TEST(Examples, SymmetricGraphHasMatchingCqgWalks) {
  const auto h = build_cqg_hamiltonians(complete(4), {});
  EXPECT_LT((h.hub.matrix - h.authority.matrix).norm(), 1e-15);
}

TEST(Examples, InitialStates) {
  EXPECT_EQ(initial_uniform(2).amplitudes, Eigen::VectorXd::Constant(4, 0.5));
  EXPECT_NEAR(initial_uniform(4).amplitudes[3], 0.35355, 1e-5);
  EXPECT_EQ(initial_degree_weighted(path_graph(4)).amplitudes[3], 0.0);
}

TEST(Examples, DistinctSpectrumReducesToSquaredOverlaps) {
  const auto g = cycle(5);
  const Hamiltonian h{build_cqa_hamiltonian(g, {}).matrix + Eigen::MatrixXd(Eigen::VectorXd::LinSpaced(10, 0.0, 0.9).asDiagonal()),
                      HamiltonianRecipe::cqa};
  const auto eig = sym_eig(h.matrix);
  ASSERT_EQ(group_degenerate(eig, 1e-8).groups.size(), 10u);
  const auto psi = initial_uniform(5);
  const Eigen::VectorXd a = eig.eigenvectors.transpose() * psi.amplitudes;
  const Eigen::VectorXd expected = eig.eigenvectors.cwiseAbs2() * a.cwiseAbs2();
  EXPECT_LT((limiting_occupation(h, psi, {}) - expected).cwiseAbs().maxCoeff(), 1e-14);

  const InitialState eigenstate{eig.eigenvectors.col(3), InitialStateKind::uniform};
  EXPECT_LT((limiting_occupation(h, eigenstate, {}) - eig.eigenvectors.col(3).cwiseAbs2())
                .cwiseAbs()
                .maxCoeff(),
            1e-14);
}

TEST(Examples, PageRankSymmetries) {
  for (double v : pagerank_scores(cycle(6))) EXPECT_NEAR(v, 1.0 / 6, 1e-12);
  const Edge e[] = {{1, 2}, {2, 1}, {2, 3}, {3, 2}};
  const auto sym = DirectedGraph::from_edges(3, e);
  EXPECT_LT(testing::max_abs_diff(pagerank_scores(sym), reverse_pagerank_scores(sym)), 1e-14);
}

TEST(Examples, BekIsolatedNodeScoresOne) {
  const Edge e[] = {{1, 2}};
  const auto r = bek_scores(DirectedGraph::from_edges(3, e));
  EXPECT_EQ(r.hub[2], 1.0);
  EXPECT_EQ(r.authority[2], 1.0);
  for (double v : r.hub) EXPECT_GE(v, 1.0);
}

TEST(Examples, HitsPathRanking) {
  const auto r = hits_scores(path_graph(4));
  const std::vector<std::vector<NodeId>> expected{{1, 2, 3}, {4}};
  EXPECT_EQ(rank_with_ties(r.hub).groups, expected);
  const std::vector<double> s{0.5, 0.5, 0.1};
  EXPECT_EQ(rank_with_ties(s).groups, (std::vector<std::vector<NodeId>>{{1, 2}, {3}}));
}

TEST(Examples, LargerGammaGrowsOutDegreeTail) {
  const auto median_max_out = [](double gamma) {
    std::vector<std::size_t> maxima;
    for (std::uint64_t seed = 1; seed <= 21; ++seed) {
      const double beta = 0.55;
      const auto g = scale_free(256, {1.0 - beta - gamma, beta, gamma, 0.2, 0.0, seed});
      const auto out = degrees(g).out_deg;
      maxima.push_back(*std::max_element(out.begin(), out.end()));
    }
    std::sort(maxima.begin(), maxima.end());
    return maxima[maxima.size() / 2];
  };
  EXPECT_LT(median_max_out(0.05), median_max_out(0.3));
}

}  // namespace
}  // namespace qcentrality
