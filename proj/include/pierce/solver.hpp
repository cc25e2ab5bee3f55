#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pierce/mean_cycle.hpp"
#include "pierce/rational.hpp"
#include "pierce/ship.hpp"
#include "pierce/verifier.hpp"

namespace pierce {

inline constexpr Offset kDefaultSpanCap = 22;
inline constexpr std::size_t kDefaultMemoryLimit = std::size_t{2} << 30;

/// Raised when a solve would need a window longer than the caller allows.
class SpanCapExceeded : public std::runtime_error {
 public:
  SpanCapExceeded(Offset required, Offset cap);
  [[nodiscard]] Offset required() const noexcept { return required_; }
  [[nodiscard]] Offset cap() const noexcept { return cap_; }

 private:
  Offset required_;
  Offset cap_;
};

/// Raised when the window graph would not fit in the configured memory budget.
class MemoryBudgetExceeded : public std::runtime_error {
 public:
  MemoryBudgetExceeded(std::size_t estimate, std::size_t limit);
  [[nodiscard]] std::size_t estimate() const noexcept { return estimate_; }

 private:
  std::size_t estimate_;
};

/// Graph whose nodes are the length-`window` 0/1 words in which every ship translate lying
/// fully inside the word is hit. Bit j of a word is cell j of the window. The edge from w
/// appends bit b at the far end: w -> (w >> 1) | (b << (window - 1)), with weight b.
class WindowGraph {
 public:
  WindowGraph(const Family& f, Offset window);

  [[nodiscard]] Offset window() const noexcept { return window_; }
  /// Valid words in increasing order; node id i is words()[i].
  [[nodiscard]] const std::vector<std::uint32_t>& words() const noexcept { return words_; }
  [[nodiscard]] const std::vector<std::uint32_t>& translate_masks() const noexcept { return masks_; }
  [[nodiscard]] bool valid(std::uint32_t word) const;
  [[nodiscard]] const WeightedDigraph& graph() const noexcept { return graph_; }

  /// Bytes needed for a window graph of this length, worst case over families.
  static std::size_t memory_estimate(Offset window);

 private:
  Offset window_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::uint32_t> words_;
  WeightedDigraph graph_;
};

struct SolveOptions {
  Offset span_cap = kDefaultSpanCap;
  std::size_t memory_limit = kDefaultMemoryLimit;
};

struct SolveStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t cycle_length = 0;
  std::size_t iterations = 0;
  Offset reduced_span = 0;
  Offset scale = 1;
};

struct SolveResult {
  Rational density;
  /// Optimal periodic pattern for the family as given (not the scale-reduced one).
  Pattern1D pattern;
  SolveStats stats;
};

/// The exact minimum density of a pattern hitting every translate of every ship.
/// Throws SpanCapExceeded / MemoryBudgetExceeded instead of truncating.
SolveResult exact_density(const Family& f, const SolveOptions& options = {});

/// Periodic pattern read off a cycle of a window graph: residue t is shot iff bit 0 of
/// the t-th node on the cycle is set.
Pattern1D pattern_from_cycle(const WindowGraph& g, const std::vector<NodeId>& cycle);

}  // namespace pierce
