#include "pierce/solver.hpp"

#include <algorithm>

namespace pierce {

SpanCapExceeded::SpanCapExceeded(Offset required, Offset cap)
    : std::runtime_error("family needs span " + std::to_string(required) + " but the span cap is " +
                         std::to_string(cap)),
      required_(required),
      cap_(cap) {}

MemoryBudgetExceeded::MemoryBudgetExceeded(std::size_t estimate, std::size_t limit)
    : std::runtime_error("window graph needs about " + std::to_string(estimate >> 20) + " MiB, limit is " +
                         std::to_string(limit >> 20) + " MiB"),
      estimate_(estimate) {}

namespace {

// Largest window representable in a 32-bit word with room for the shift.
constexpr Offset kMaxWindow = 31;

}  // namespace

WindowGraph::WindowGraph(const Family& f, Offset window) : window_(window) {
  if (window < 1 || window > kMaxWindow) throw std::invalid_argument("window length out of range");
  if (f.span() > window) throw std::invalid_argument("window shorter than the family span");
  for (const auto& ship : f.ships()) {
    for (Offset shift = 0; shift + ship.span() <= window; ++shift) {
      std::uint32_t mask = 0;
      for (Offset a : ship.offsets()) mask |= std::uint32_t{1} << (shift + a);
      masks_.push_back(mask);
    }
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());

  const std::uint64_t universe = std::uint64_t{1} << window;
  std::vector<std::uint32_t> index(universe, UINT32_MAX);
  for (std::uint64_t w = 0; w < universe; ++w) {
    if (valid(static_cast<std::uint32_t>(w))) {
      index[w] = static_cast<std::uint32_t>(words_.size());
      words_.push_back(static_cast<std::uint32_t>(w));
    }
  }
  std::vector<WeightedDigraph::Edge> edges;
  edges.reserve(2 * words_.size());
  const std::uint32_t top = std::uint32_t{1} << (window - 1);
  for (NodeId u = 0; u < words_.size(); ++u) {
    const std::uint32_t shifted = words_[u] >> 1;
    if (index[shifted] != UINT32_MAX) edges.push_back({u, index[shifted], 0});
    if (index[shifted | top] != UINT32_MAX) edges.push_back({u, index[shifted | top], 1});
  }
  graph_ = WeightedDigraph(words_.size(), std::move(edges));
}

bool WindowGraph::valid(std::uint32_t word) const {
  return std::all_of(masks_.begin(), masks_.end(), [word](std::uint32_t m) { return (word & m) != 0; });
}

std::size_t WindowGraph::memory_estimate(Offset window) {
  // Index table, word list, two edges (target + weight + edge list entry) and the
  // per-node policy iteration state.
  constexpr std::size_t per_word = 4 + 4 + 2 * (4 + 8 + 16) + 8 + 56;
  return (std::size_t{1} << window) * per_word;
}

Pattern1D pattern_from_cycle(const WindowGraph& g, const std::vector<NodeId>& cycle) {
  std::vector<Offset> residues;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    if (g.words()[cycle[t]] & 1u) residues.push_back(static_cast<Offset>(t));
  }
  return Pattern1D(static_cast<Offset>(cycle.size()), std::move(residues));
}

SolveResult exact_density(const Family& f, const SolveOptions& options) {
  const auto [reduced, scale] = scale_reduce(f);
  const Offset window = reduced.span();
  if (window > options.span_cap) throw SpanCapExceeded(window, options.span_cap);

  SolveStats stats;
  stats.reduced_span = window;
  stats.scale = scale;

  if (reduced.min_ship_size() == 1) {
    stats.cycle_length = 1;
    return {Rational(1), Pattern1D(1, {0}), stats};
  }
  if (window > kMaxWindow) throw SpanCapExceeded(window, kMaxWindow);
  const std::size_t estimate = WindowGraph::memory_estimate(window);
  if (estimate > options.memory_limit) throw MemoryBudgetExceeded(estimate, options.memory_limit);

  const WindowGraph graph(reduced, window);
  const MeanCycle best = min_mean_cycle(graph.graph());
  stats.nodes = graph.graph().node_count();
  stats.edges = graph.graph().edge_count();
  stats.cycle_length = best.cycle.size();
  stats.iterations = best.iterations;
  Pattern1D pattern = pattern_from_cycle(graph, best.cycle);
  if (scale > 1) pattern = pattern.stretched(scale);
  return {best.mean, std::move(pattern), stats};
}

}  // namespace pierce
