#include "qcentrality/generators.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qcentrality/error.hpp"

namespace qcentrality {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument(msg);
}

// Portable draws on top of mt19937_64 so a seed gives the same graph on every platform.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return static_cast<std::size_t>(r % bound);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

DirectedGraph path_graph(std::size_t n) {
  require(n >= 2, "path graph needs n >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return DirectedGraph::from_edges(n, edges);
}

DirectedGraph diamond_graph(std::size_t n) {
  require(n >= 3, "diamond graph needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t j = 2; j < n; ++j) {
    edges.push_back({1, j});
    edges.push_back({j, n});
  }
  return DirectedGraph::from_edges(n, edges);
}

DirectedGraph star_graph(std::size_t n) {
  require(n >= 2, "star graph needs n >= 2");
  std::vector<Edge> edges;
  for (std::size_t j = 2; j <= n; ++j) edges.push_back({1, j});
  return DirectedGraph::from_edges(n, edges);
}

DirectedGraph tailed_graph(std::size_t n1, std::size_t n2) {
  require(n1 >= 1, "tailed graph needs n1 >= 1");
  require(n2 >= 2, "tailed graph needs n2 >= 2");
  const std::size_t n = n1 + n2;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n1; ++i) edges.push_back({i, i + 1});
  for (std::size_t j = n1 + 1; j <= n; ++j) edges.push_back({n1, j});
  for (std::size_t i = n1 + 1; i <= n; ++i) {
    for (std::size_t j = n1 + 1; j <= n; ++j) {
      if (i != j) edges.push_back({i, j});
    }
  }
  return DirectedGraph::from_edges(n, edges);
}

DirectedGraph example5_graph() {
  const Edge edges[] = {{1, 3}, {2, 1}, {2, 4}, {3, 2}, {4, 2}};
  return DirectedGraph::from_edges(4, edges);
}

void ScaleFreeParams::validate() const {
  const auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  require(unit(alpha_g) && unit(beta_g) && unit(gamma_g),
          "scale-free probabilities must lie in [0, 1]");
  require(std::abs(alpha_g + beta_g + gamma_g - 1.0) <= 1e-12,
          "scale-free probabilities must sum to 1");
  require(alpha_g + gamma_g > 0.0, "scale-free model with beta = 1 never adds nodes");
  require(delta_in >= 0.0 && delta_out >= 0.0, "scale-free degree offsets must be nonnegative");
}

DirectedGraph scale_free(std::size_t n_target, const ScaleFreeParams& p) {
  p.validate();
  require(n_target >= 3, "scale-free graph needs at least 3 nodes");

  Draw draw(p.seed);
  // Edge endpoints, one entry per edge: sampling uniformly from `sources`
  // picks a node with probability proportional to its out-degree.
  std::vector<std::size_t> sources{1, 2, 3};
  std::vector<std::size_t> targets{2, 3, 1};
  std::size_t nodes = 3;

  const auto choose = [&](const std::vector<std::size_t>& endpoints, double delta) {
    if (delta > 0.0) {
      const double bias = static_cast<double>(nodes) * delta;
      if (draw.unit() < bias / (bias + static_cast<double>(endpoints.size()))) {
        return draw.below(nodes) + 1;
      }
    }
    return endpoints[draw.below(endpoints.size())];
  };

  while (nodes < n_target) {
    const double r = draw.unit();
    std::size_t v = 0;
    std::size_t w = 0;
    if (r < p.alpha_g) {
      w = choose(targets, p.delta_in);
      v = ++nodes;
    } else if (r < p.alpha_g + p.beta_g) {
      v = choose(sources, p.delta_out);
      w = choose(targets, p.delta_in);
    } else {
      v = choose(sources, p.delta_out);
      w = ++nodes;
    }
    sources.push_back(v);
    targets.push_back(w);
  }

  std::vector<Edge> edges;
  edges.reserve(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k) {
    if (sources[k] != targets[k]) edges.push_back({sources[k], targets[k]});
  }
  return DirectedGraph::from_edges(nodes, edges);
}

}  // namespace qcentrality
