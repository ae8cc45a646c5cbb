#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcentrality/centrality.hpp"
#include "qcentrality/graph.hpp"

namespace qcentrality {

/// Absolute score gap below which two nodes are reported as ex aequo.
inline constexpr double kDefaultTieTol = 1e-8;

/// Nodes in descending score order, grouped into ties.
struct Ranking {
  std::vector<std::vector<NodeId>> groups;  // ids ascending within a group
  double tie_tol = kDefaultTieTol;

  /// Group position (0 = best) of every node, indexed by id - 1.
  std::vector<std::size_t> group_of_node() const;
};

/// Sorts descending and chain-merges neighbours whose scores differ by at most tie_tol.
Ranking rank_with_ties(std::span<const double> scores, double tie_tol = kDefaultTieTol);

/// Kendall's τ-b between two score vectors; equal values count as ties.
/// O(n log n). Throws InvalidArgument on length mismatch or when either
/// vector is constant (τ-b undefined).
double kendall_tau(std::span<const double> a, std::span<const double> b);

/// Number of nodes shared by the two top-k lists. A list is the first k
/// nodes in descending score order, equal scores broken by smaller id.
std::size_t topk_overlap(std::span<const double> a, std::span<const double> b, std::size_t k);

enum class Side { hub, authority };

std::string_view side_name(Side s);

struct ComparisonReport {
  Side side;
  std::vector<std::string> methods;
  Eigen::MatrixXd tau;          // NaN where τ-b is undefined (a constant ranking)
  Eigen::MatrixXi topk_overlap;
  std::size_t k;
};

/// Pairwise τ-b on tie-grouped rankings and top-k overlaps for one side.
ComparisonReport comparison_report(std::span<const CentralityResult> results, Side side,
                                   std::size_t k, double tie_tol = kDefaultTieTol);

}  // namespace qcentrality
