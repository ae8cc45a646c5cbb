#include "qcentrality/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>

#include "qcentrality/error.hpp"

namespace qcentrality {

DirectedGraph::DirectedGraph(std::size_t n, std::vector<std::size_t> offsets,
                             std::vector<std::size_t> targets, std::vector<std::string> labels)
    : n_(n), offsets_(std::move(offsets)), targets_(std::move(targets)), labels_(std::move(labels)) {}

DirectedGraph DirectedGraph::from_edges(std::size_t n, std::span<const Edge> edges,
                                        std::vector<std::string> labels) {
  if (n == 0) {
    throw InvalidArgument("graph must have at least one node");
  }
  if (!labels.empty() && labels.size() != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.source < 1 || e.source > n || e.target < 1 || e.target > n) {
      throw InvalidArgument("edge (" + std::to_string(e.source) + ", " + std::to_string(e.target) +
                            ") has a node id outside 1.." + std::to_string(n));
    }
    if (e.source == e.target) {
      throw InvalidArgument("self-loop at node " + std::to_string(e.source));
    }
    pairs.emplace_back(e.source - 1, e.target - 1);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<std::size_t> targets;
  targets.reserve(pairs.size());
  for (const auto& [s, t] : pairs) {
    ++offsets[s + 1];
    targets.push_back(t);
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return DirectedGraph(n, std::move(offsets), std::move(targets), std::move(labels));
}

std::span<const std::size_t> DirectedGraph::successors(std::size_t index) const {
  if (index >= n_) {
    throw InvalidArgument("node index out of range");
  }
  return {targets_.data() + offsets_[index], offsets_[index + 1] - offsets_[index]};
}

bool DirectedGraph::has_edge(NodeId source, NodeId target) const {
  if (source < 1 || source > n_ || target < 1 || target > n_) {
    return false;
  }
  const auto succ = successors(source - 1);
  return std::binary_search(succ.begin(), succ.end(), target - 1);
}

Eigen::MatrixXd DirectedGraph::adjacency() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j : successors(i)) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
    }
  }
  return a;
}

DirectedGraph DirectedGraph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(targets_.size());
  for (const Edge& e : edges()) {
    rev.push_back({e.target, e.source});
  }
  return from_edges(n_, rev, labels_);
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(targets_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j : successors(i)) {
      out.push_back({i + 1, j + 1});
    }
  }
  return out;
}

std::string DirectedGraph::label(NodeId id) const {
  if (!labels_.empty() && id >= 1 && id <= n_) {
    return labels_[id - 1];
  }
  return std::to_string(id);
}

DegreeVector degrees(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  DegreeVector d{std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto succ = g.successors(i);
    d.out_deg[i] = succ.size();
    for (std::size_t j : succ) {
      ++d.in_deg[j];
    }
  }
  return d;
}

Eigen::MatrixXd bipartite_block_matrix(const Eigen::MatrixXd& block) {
  if (block.rows() != block.cols()) {
    throw InvalidArgument("bipartite block must be square");
  }
  const Eigen::Index n = block.rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = block;
  m.bottomLeftCorner(n, n) = block.transpose();
  return m;
}

BipartiteAdjacency bipartite_adjacency(const DirectedGraph& g) {
  return {g.node_count(), bipartite_block_matrix(g.adjacency())};
}

std::vector<std::vector<std::size_t>> connected_components_undirected(const BipartiteAdjacency& b) {
  const std::size_t size = b.size();
  std::vector<bool> seen(size, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t start = 0; start < size; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      comp.push_back(u + 1);
      for (std::size_t v = 0; v < size; ++v) {
        if (!seen[v] && b.matrix(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) != 0.0) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::size_t bipartite_component_count(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> parent(2 * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&parent](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = 2 * n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.successors(i)) {
      const std::size_t a = find(i);
      const std::size_t b = find(n + j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

bool is_weakly_connected(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::size_t>> undirected(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.successors(i)) {
      undirected[i].push_back(j);
      undirected[j].push_back(i);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t v : undirected[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

}  // namespace qcentrality
