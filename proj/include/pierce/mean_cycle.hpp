#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pierce/rational.hpp"

namespace pierce {

using NodeId = std::uint32_t;

/// Directed graph with integer edge weights in compressed adjacency form.
/// Successors of each node are kept sorted by target id.
class WeightedDigraph {
 public:
  struct Edge {
    NodeId from;
    NodeId to;
    std::int64_t weight;
  };

  WeightedDigraph() = default;
  WeightedDigraph(std::size_t node_count, std::vector<Edge> edges);

  [[nodiscard]] std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return targets_.size(); }
  [[nodiscard]] std::span<const NodeId> successors(NodeId u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  [[nodiscard]] std::span<const std::int64_t> weights(NodeId u) const {
    return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::int64_t> weights_;
};

struct MeanCycle {
  Rational mean;
  /// Nodes of the witness cycle in traversal order, starting from its smallest node.
  std::vector<NodeId> cycle;
  std::size_t iterations = 0;
};

/// Exact minimum cycle mean, min over directed cycles of (total weight) / (length).
///
/// Uses policy iteration with integer potentials scaled by each policy cycle's reduced
/// denominator. The witness is canonical: among all optimal cycles, the shortest, and among
/// those the lexicographically smallest node sequence (rotated to start at its minimum).
/// Throws std::invalid_argument if the graph is acyclic.
MeanCycle min_mean_cycle(const WeightedDigraph& g);

}  // namespace pierce
