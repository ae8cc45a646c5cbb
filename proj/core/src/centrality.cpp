#include "qcentrality/centrality.hpp"

#include "qcentrality/classical.hpp"
#include "qcentrality/error.hpp"
#include "qcentrality/quantum_walk.hpp"

namespace qcentrality {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::cqau: return "cqau";
    case Method::cqaw: return "cqaw";
    case Method::cqg: return "cqg";
    case Method::hits: return "hits";
    case Method::pagerank: return "pagerank";
    case Method::bek: return "bek";
  }
  return "unknown";
}

std::string_view method_label(Method m) {
  switch (m) {
    case Method::cqau: return "CQAu";
    case Method::cqaw: return "CQAw";
    case Method::cqg: return "CQG";
    case Method::hits: return "HITS";
    case Method::pagerank: return "PR";
    case Method::bek: return "BEK";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  if (name == "pr") return Method::pagerank;
  return std::nullopt;
}

std::string_view normalization_name(Normalization n) {
  switch (n) {
    case Normalization::occupation: return "time-averaged occupation";
    case Normalization::two_norm: return "2-norm";
    case Normalization::one_norm: return "1-norm";
    case Normalization::raw_diagonal: return "none (raw diagonal)";
  }
  return "unknown";
}

CentralityResult compute_centrality(Method m, const DirectedGraph& g, const MethodOptions& opts) {
  const WalkConfig walk{opts.alpha, opts.degeneracy_rel_tol};
  const IterationConfig iter{opts.tol, opts.max_iter, opts.alpha};
  switch (m) {
    case Method::cqau: return cqau_scores(g, walk);
    case Method::cqaw: return cqaw_scores(g, walk);
    case Method::cqg: return cqg_scores(g, walk);
    case Method::hits: return hits_scores(g, iter);
    case Method::pagerank: return pagerank_centrality(g, iter);
    case Method::bek: return bek_scores(g);
  }
  throw InvalidArgument("unknown method");
}

}  // namespace qcentrality
