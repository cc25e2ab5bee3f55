#pragma once

// Test-only reference implementations. Nothing here calls into the solver's graph
// construction or policy iteration.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pierce/rational.hpp"
#include "pierce/ship.hpp"

namespace pierce::oracle {

struct Graph {
  std::size_t nodes = 0;
  // adjacency[u] = (v, weight)
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adjacency;
};

/// Valid windows by direct scan of every translate, no precomputed masks.
inline bool window_hits_everything(std::uint32_t word, const Family& f, Offset window) {
  for (const auto& ship : f.ships()) {
    for (Offset shift = 0; shift + ship.span() <= window; ++shift) {
      bool hit = false;
      for (Offset a : ship.offsets()) hit = hit || ((word >> (shift + a)) & 1u);
      if (!hit) return false;
    }
  }
  return true;
}

inline Graph window_graph(const Family& f, Offset window) {
  std::vector<std::int64_t> id(std::size_t{1} << window, -1);
  Graph g;
  for (std::uint32_t w = 0; w < (1u << window); ++w) {
    if (window_hits_everything(w, f, window)) id[w] = static_cast<std::int64_t>(g.nodes++);
  }
  g.adjacency.resize(g.nodes);
  for (std::uint32_t w = 0; w < (1u << window); ++w) {
    if (id[w] < 0) continue;
    for (std::uint32_t bit = 0; bit < 2; ++bit) {
      const std::uint32_t next = (w >> 1) | (bit << (window - 1));
      if (id[next] >= 0) g.adjacency[id[w]].push_back({static_cast<std::size_t>(id[next]), bit});
    }
  }
  return g;
}

/// min over cycle lengths L <= V and start nodes of (min weight closed walk of length L) / L.
/// Every closed walk splits into simple cycles, and every simple cycle is a closed walk of
/// length <= V, so this is the exact minimum cycle mean.
inline std::optional<Rational> closed_walk_min_mean(const Graph& g) {
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::optional<Rational> best;
  std::vector<std::int64_t> cur(g.nodes), next(g.nodes);
  for (std::size_t start = 0; start < g.nodes; ++start) {
    std::fill(cur.begin(), cur.end(), inf);
    cur[start] = 0;
    for (std::size_t len = 1; len <= g.nodes; ++len) {
      std::fill(next.begin(), next.end(), inf);
      for (std::size_t u = 0; u < g.nodes; ++u) {
        if (cur[u] >= inf) continue;
        for (auto [v, w] : g.adjacency[u]) next[v] = std::min(next[v], cur[u] + w);
      }
      cur.swap(next);
      if (cur[start] < inf) {
        const Rational mean(cur[start], static_cast<std::int64_t>(len));
        if (!best || mean < *best) best = mean;
      }
    }
  }
  return best;
}

/// Every simple cycle enumerated once from its smallest node. Returns nullopt if more than
/// `budget` cycles exist.
inline std::optional<Rational> simple_cycle_min_mean(const Graph& g, std::uint64_t budget,
                                                     std::uint64_t* count_out = nullptr) {
  std::optional<Rational> best;
  std::uint64_t count = 0;
  std::vector<char> on_path(g.nodes, 0);
  bool overflow = false;
  for (std::size_t root = 0; root < g.nodes && !overflow; ++root) {
    // Iterative DFS over paths that start at root and only use nodes > root.
    struct Frame {
      std::size_t node;
      std::size_t edge;
      std::int64_t weight;
      std::int64_t length;
    };
    // Nodes > root that can get back to root through nodes > root; others are dead ends.
    std::vector<std::vector<std::size_t>> reverse(g.nodes);
    for (std::size_t u = root; u < g.nodes; ++u) {
      for (auto [v, w] : g.adjacency[u]) {
        if (v >= root) reverse[v].push_back(u);
      }
    }
    std::vector<char> returns(g.nodes, 0);
    std::vector<std::size_t> queue{root};
    returns[root] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      for (std::size_t u : reverse[v]) {
        if (!returns[u]) {
          returns[u] = 1;
          queue.push_back(u);
        }
      }
    }
    std::vector<Frame> stack{{root, 0, 0, 0}};
    on_path[root] = 1;
    while (!stack.empty() && !overflow) {
      Frame& top = stack.back();
      if (top.edge == g.adjacency[top.node].size()) {
        on_path[top.node] = 0;
        stack.pop_back();
        continue;
      }
      const auto [v, w] = g.adjacency[top.node][top.edge++];
      if (v == root) {
        const Rational mean(top.weight + w, top.length + 1);
        if (!best || mean < *best) best = mean;
        if (++count > budget) overflow = true;
      } else if (v > root && returns[v] && !on_path[v]) {
        on_path[v] = 1;
        stack.push_back({v, 0, top.weight + w, top.length + 1});
      }
    }
    std::fill(on_path.begin(), on_path.end(), 0);
  }
  if (count_out) *count_out = count;
  if (overflow) return std::nullopt;
  return best;
}

/// All families of one or (if max_ships >= 2) two distinct normalized ships of span <= max_span.
inline std::vector<Family> small_families(Offset max_span, std::size_t max_ships) {
  std::vector<Ship> ships;
  for (std::uint32_t bits = 0; bits < (1u << (max_span - 1)); ++bits) {
    std::vector<Offset> cells{0};
    for (Offset i = 1; i < max_span; ++i) {
      if ((bits >> (i - 1)) & 1u) cells.push_back(i);
    }
    ships.emplace_back(std::move(cells));
  }
  std::vector<Family> out;
  for (std::size_t i = 0; i < ships.size(); ++i) {
    out.push_back(Family{ships[i]});
    if (max_ships >= 2) {
      for (std::size_t j = i + 1; j < ships.size(); ++j) out.push_back(Family{ships[i], ships[j]});
    }
  }
  return out;
}

/// Every family of ships with span <= window has, at that window, a valid-word set equal to
/// the intersection of its ships' sets. Returns one family per distinct nonempty-family set,
/// found by closing the single-ship sets under intersection. Requires window <= 6.
inline std::vector<Family> families_by_window_set(Offset window) {
  const auto words = std::uint32_t{1} << window;
  const auto ships = [&] {
    std::vector<Ship> out;
    for (std::uint32_t bits = 0; bits < (1u << (window - 1)); ++bits) {
      std::vector<Offset> cells{0};
      for (Offset i = 1; i < window; ++i) {
        if ((bits >> (i - 1)) & 1u) cells.push_back(i);
      }
      out.emplace_back(std::move(cells));
    }
    return out;
  }();
  std::vector<std::uint64_t> ship_sets;
  for (const auto& s : ships) {
    std::uint64_t set = 0;
    for (std::uint32_t w = 0; w < words; ++w) {
      if (window_hits_everything(w, Family{s}, window)) set |= std::uint64_t{1} << w;
    }
    ship_sets.push_back(set);
  }
  std::unordered_map<std::uint64_t, std::vector<Ship>> seen;
  std::vector<std::uint64_t> frontier;
  for (std::size_t i = 0; i < ships.size(); ++i) {
    if (seen.emplace(ship_sets[i], std::vector<Ship>{ships[i]}).second) frontier.push_back(ship_sets[i]);
  }
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t set : frontier) {
      for (std::size_t i = 0; i < ships.size(); ++i) {
        const std::uint64_t meet = set & ship_sets[i];
        if (seen.count(meet)) continue;
        auto members = seen.at(set);
        members.push_back(ships[i]);
        seen.emplace(meet, std::move(members));
        next.push_back(meet);
      }
    }
    frontier.swap(next);
  }
  std::vector<std::pair<std::uint64_t, Family>> ordered;
  for (auto& [set, members] : seen) ordered.emplace_back(set, Family(members));
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Family> out;
  for (auto& entry : ordered) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace pierce::oracle
