#include "qcentrality/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <string>

#include "qcentrality/error.hpp"

namespace qcentrality {
namespace {

// Indices sorted by descending score, equal scores by ascending index.
std::vector<std::size_t> descending_order(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return scores[i] > scores[j]; });
  return order;
}

void require_finite(std::span<const double> v, const char* who) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string(who) + ": scores must be finite");
  }
}

std::int64_t tied_pairs(std::int64_t run) { return run * (run - 1) / 2; }

// Sum of t(t-1)/2 over runs of equal values in an already sorted sequence.
template <typename Equal>
std::int64_t count_ties(std::size_t n, Equal equal) {
  std::int64_t ties = 0;
  std::int64_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (equal(i - 1, i)) {
      ++run;
    } else {
      ties += tied_pairs(run);
      run = 1;
    }
  }
  return ties + tied_pairs(run);
}

// Stable merge sort of `idx` by key; returns the number of inversions
// (pairs that a strict "<" puts out of order).
std::int64_t sort_counting_swaps(std::vector<std::size_t>& idx, std::span<const double> key) {
  const std::size_t n = idx.size();
  std::vector<std::size_t> buf(n);
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t out = lo;
      while (i < mid && j < hi) {
        if (key[idx[j]] < key[idx[i]]) {
          swaps += static_cast<std::int64_t>(mid - i);
          buf[out++] = idx[j++];
        } else {
          buf[out++] = idx[i++];
        }
      }
      while (i < mid) buf[out++] = idx[i++];
      while (j < hi) buf[out++] = idx[j++];
    }
    idx.swap(buf);
  }
  return swaps;
}

}  // namespace

std::vector<std::size_t> Ranking::group_of_node() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (NodeId id : groups[gi]) pos[id - 1] = gi;
  }
  return pos;
}

Ranking rank_with_ties(std::span<const double> scores, double tie_tol) {
  if (!(tie_tol >= 0.0)) throw InvalidArgument("rank_with_ties: tie_tol must be nonnegative");
  require_finite(scores, "rank_with_ties");
  Ranking r{{}, tie_tol};
  const auto order = descending_order(scores);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || scores[order[k - 1]] - scores[order[k]] > tie_tol) {
      r.groups.emplace_back();
    }
    r.groups.back().push_back(order[k] + 1);
  }
  for (auto& g : r.groups) std::sort(g.begin(), g.end());
  return r;
}

double kendall_tau(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("kendall_tau: length mismatch");
  require_finite(a, "kendall_tau");
  require_finite(b, "kendall_tau");
  const std::size_t n = a.size();
  const auto pairs = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;

  // Knight's algorithm: sort by (a, b), count ties in a and joint ties, then
  // count the swaps a merge sort on b needs; those are the discordant pairs.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return a[i] != a[j] ? a[i] < a[j] : b[i] < b[j];
  });
  const std::int64_t ties_a = count_ties(n, [&](std::size_t i, std::size_t j) {
    return a[idx[i]] == a[idx[j]];
  });
  const std::int64_t ties_joint = count_ties(n, [&](std::size_t i, std::size_t j) {
    return a[idx[i]] == a[idx[j]] && b[idx[i]] == b[idx[j]];
  });
  const std::int64_t discordant = sort_counting_swaps(idx, b);
  const std::int64_t ties_b = count_ties(n, [&](std::size_t i, std::size_t j) {
    return b[idx[i]] == b[idx[j]];
  });

  const std::int64_t untied_a = pairs - ties_a;
  const std::int64_t untied_b = pairs - ties_b;
  if (untied_a == 0 || untied_b == 0) {
    throw InvalidArgument("kendall_tau: undefined when every score in a vector is tied");
  }
  const std::int64_t numerator = pairs - ties_a - ties_b + ties_joint - 2 * discordant;
  return static_cast<double>(numerator) /
         std::sqrt(static_cast<double>(untied_a) * static_cast<double>(untied_b));
}

std::size_t topk_overlap(std::span<const double> a, std::span<const double> b, std::size_t k) {
  if (a.size() != b.size()) throw InvalidArgument("topk_overlap: length mismatch");
  if (k > a.size()) throw InvalidArgument("topk_overlap: k exceeds the number of nodes");
  require_finite(a, "topk_overlap");
  require_finite(b, "topk_overlap");
  auto top_a = descending_order(a);
  auto top_b = descending_order(b);
  top_a.resize(k);
  top_b.resize(k);
  std::sort(top_a.begin(), top_a.end());
  std::sort(top_b.begin(), top_b.end());
  std::vector<std::size_t> common;
  std::set_intersection(top_a.begin(), top_a.end(), top_b.begin(), top_b.end(),
                        std::back_inserter(common));
  return common.size();
}

std::string_view side_name(Side s) { return s == Side::hub ? "hub" : "authority"; }

ComparisonReport comparison_report(std::span<const CentralityResult> results, Side side,
                                   std::size_t k, double tie_tol) {
  const std::size_t m = results.size();
  if (m == 0) throw InvalidArgument("comparison_report: no results");
  const std::size_t n = results.front().hub.size();

  // τ is taken on group positions, so ex-aequo nodes tie exactly even when
  // their raw scores differ in the last bits.
  std::vector<std::vector<double>> rank_keys;
  std::vector<std::span<const double>> raw;
  ComparisonReport report{side, {}, Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                                              static_cast<Eigen::Index>(m)),
                          Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(m),
                                                static_cast<Eigen::Index>(m)),
                          k};
  for (const CentralityResult& r : results) {
    const std::vector<double>& scores = side == Side::hub ? r.hub : r.authority;
    if (scores.size() != n) throw InvalidArgument("comparison_report: results differ in size");
    const auto groups = rank_with_ties(scores, tie_tol).group_of_node();
    std::vector<double> key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = -static_cast<double>(groups[i]);
    rank_keys.push_back(std::move(key));
    raw.emplace_back(scores);
    report.methods.emplace_back(method_name(r.method));
  }

  for (std::size_t i = 0; i < m; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    report.topk_overlap(ii, ii) = static_cast<int>(k);
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      double tau = std::numeric_limits<double>::quiet_NaN();
      try {
        tau = kendall_tau(rank_keys[i], rank_keys[j]);
      } catch (const InvalidArgument&) {
        // constant ranking: τ-b undefined, reported as NaN
      }
      report.tau(ii, jj) = report.tau(jj, ii) = tau;
      const int overlap = static_cast<int>(topk_overlap(raw[i], raw[j], k));
      report.topk_overlap(ii, jj) = report.topk_overlap(jj, ii) = overlap;
    }
  }
  return report;
}

}  // namespace qcentrality
