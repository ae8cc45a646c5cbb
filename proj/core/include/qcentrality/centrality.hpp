#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcentrality/graph.hpp"

namespace qcentrality {

enum class Method { cqau, cqaw, cqg, hits, pagerank, bek };

inline constexpr Method kAllMethods[] = {Method::cqau, Method::cqaw,     Method::cqg,
                                         Method::hits, Method::pagerank, Method::bek};

/// Lower-case identifier used on the command line and in csv/json ("cqau", "pagerank", ...).
std::string_view method_name(Method m);

/// Column heading used in score tables ("CQAu", "PR", ...).
std::string_view method_label(Method m);

std::optional<Method> parse_method(std::string_view name);

/// Native scale of a score vector; methods are only comparable through rankings.
enum class Normalization {
  occupation,    // time-averaged walker occupation, hub + authority sum to 1 per run
  two_norm,      // each vector has unit Euclidean norm
  one_norm,      // each vector is a probability distribution
  raw_diagonal,  // unnormalized diagonal of a matrix function
};

std::string_view normalization_name(Normalization n);

struct CentralityResult {
  Method method;
  std::vector<double> hub;
  std::vector<double> authority;
  Normalization normalization;
  std::vector<std::string> warnings;
};

/// Knobs shared by every method; each method reads the ones it needs.
struct MethodOptions {
  double alpha = 0.85;               // teleportation for CQA, CQG and PageRank
  double degeneracy_rel_tol = 1e-8;  // eigenvalue grouping for quantum methods
  double tol = 1e-12;                // power-iteration convergence
  std::size_t max_iter = 100000;
};

CentralityResult compute_centrality(Method m, const DirectedGraph& g, const MethodOptions& opts = {});

}  // namespace qcentrality
