#include "pierce/mean_cycle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <numeric>
#include <stdexcept>

namespace pierce {

WeightedDigraph::WeightedDigraph(std::size_t node_count, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  offsets_.assign(node_count + 1, 0);
  targets_.reserve(edges.size());
  weights_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.from >= node_count || e.to >= node_count) throw std::invalid_argument("edge endpoint out of range");
    ++offsets_[e.from + 1];
    targets_.push_back(e.to);
    weights_.push_back(e.weight);
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

namespace {

// Cycle mean p/q of a policy component, reduced, q > 0.
struct Gain {
  std::int64_t p = 0;
  std::int64_t q = 1;
  friend bool operator==(const Gain&, const Gain&) = default;
};

__extension__ using Wide = __int128;

bool less(const Gain& a, const Gain& b) { return static_cast<Wide>(a.p) * b.q < static_cast<Wide>(b.p) * a.q; }

constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

class PolicyIteration {
 public:
  explicit PolicyIteration(const WeightedDigraph& g) : g_(g), n_(g.node_count()) {}

  MeanCycle run() {
    prune_acyclic_tail();
    init_policy();
    std::size_t iterations = 0;
    while (true) {
      ++iterations;
      evaluate();
      if (improve_gain()) continue;
      if (!improve_bias()) break;
    }
    MeanCycle out;
    out.iterations = iterations;
    const Gain best = optimal_gain();
    out.mean = Rational(best.p, best.q);
    out.cycle = canonical_cycle(best);
    return out;
  }

 private:
  // Drops nodes that cannot reach any cycle; policy iteration needs an out-edge everywhere.
  void prune_acyclic_tail() {
    live_.assign(n_, 1);
    std::vector<std::size_t> outdeg(n_);
    std::vector<std::vector<NodeId>> preds(n_);
    for (NodeId u = 0; u < n_; ++u) {
      outdeg[u] = g_.successors(u).size();
      for (NodeId v : g_.successors(u)) preds[v].push_back(u);
    }
    std::vector<NodeId> queue;
    for (NodeId u = 0; u < n_; ++u) {
      if (outdeg[u] == 0) queue.push_back(u);
    }
    while (!queue.empty()) {
      const NodeId v = queue.back();
      queue.pop_back();
      live_[v] = 0;
      for (NodeId u : preds[v]) {
        if (--outdeg[u] == 0) queue.push_back(u);
      }
    }
    if (std::find(live_.begin(), live_.end(), 1) == live_.end()) {
      throw std::invalid_argument("graph has no cycle");
    }
  }

  void init_policy() {
    policy_.assign(n_, kNone);
    weight_.assign(n_, 0);
    for (NodeId u = 0; u < n_; ++u) {
      if (!live_[u]) continue;
      const auto succ = g_.successors(u);
      const auto w = g_.weights(u);
      for (std::size_t i = 0; i < succ.size(); ++i) {
        if (!live_[succ[i]]) continue;
        if (policy_[u] == kNone || w[i] < weight_[u]) {
          policy_[u] = succ[i];
          weight_[u] = w[i];
        }
      }
    }
  }

  // Computes gain_ and the scaled bias potential_ of the current policy.
  void evaluate() {
    gain_.assign(n_, Gain{});
    potential_.assign(n_, 0);
    std::vector<std::uint8_t> state(n_, 0);  // 0 new, 1 on current path, 2 done
    std::vector<std::size_t> position(n_, 0);
    std::vector<NodeId> path;
    for (NodeId start = 0; start < n_; ++start) {
      if (!live_[start] || state[start] != 0) continue;
      path.clear();
      NodeId v = start;
      while (state[v] == 0) {
        state[v] = 1;
        position[v] = path.size();
        path.push_back(v);
        v = policy_[v];
      }
      std::size_t tail_end = path.size();
      if (state[v] == 1) {
        tail_end = position[v];
        settle_cycle(std::span<const NodeId>(path).subspan(tail_end));
        for (std::size_t i = tail_end; i < path.size(); ++i) state[path[i]] = 2;
      }
      for (std::size_t i = tail_end; i-- > 0;) {
        const NodeId u = path[i];
        const NodeId next = policy_[u];
        gain_[u] = gain_[next];
        potential_[u] = gain_[u].q * weight_[u] - gain_[u].p + potential_[next];
        state[u] = 2;
      }
    }
  }

  void settle_cycle(std::span<const NodeId> cycle) {
    std::int64_t total = 0;
    for (NodeId u : cycle) total += weight_[u];
    const auto length = static_cast<std::int64_t>(cycle.size());
    const std::int64_t common = std::gcd(total < 0 ? -total : total, length);
    const Gain gain{total / common, length / common};
    // Anchor the potential at the smallest node so evaluation is independent of visit order.
    const auto root = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    const std::size_t len = cycle.size();
    potential_[cycle[root]] = 0;
    for (std::size_t step = 1; step < len; ++step) {
      const NodeId u = cycle[(root + len - step) % len];
      gain_[u] = gain;
      potential_[u] = gain.q * weight_[u] - gain.p + potential_[policy_[u]];
    }
    gain_[cycle[root]] = gain;
  }

  bool improve_gain() {
    bool changed = false;
    for (NodeId u = 0; u < n_; ++u) {
      if (!live_[u]) continue;
      Gain best = gain_[policy_[u]];
      const auto succ = g_.successors(u);
      const auto w = g_.weights(u);
      for (std::size_t i = 0; i < succ.size(); ++i) {
        if (!live_[succ[i]] || !less(gain_[succ[i]], best)) continue;
        best = gain_[succ[i]];
        policy_[u] = succ[i];
        weight_[u] = w[i];
        changed = true;
      }
    }
    return changed;
  }

  bool improve_bias() {
    bool changed = false;
    for (NodeId u = 0; u < n_; ++u) {
      if (!live_[u]) continue;
      const Gain g = gain_[u];
      std::int64_t best = potential_[u];
      const auto succ = g_.successors(u);
      const auto w = g_.weights(u);
      for (std::size_t i = 0; i < succ.size(); ++i) {
        const NodeId v = succ[i];
        if (!live_[v] || !(gain_[v] == g)) continue;
        const std::int64_t value = g.q * w[i] - g.p + potential_[v];
        if (value < best) {
          best = value;
          policy_[u] = v;
          weight_[u] = w[i];
          changed = true;
        }
      }
    }
    return changed;
  }

  Gain optimal_gain() const {
    std::optional<Gain> best;
    for (NodeId u = 0; u < n_; ++u) {
      if (live_[u] && (!best || less(gain_[u], *best))) best = gain_[u];
    }
    return *best;
  }

  // Optimal cycles are exactly the cycles made of tight edges among optimal-gain nodes.
  std::vector<NodeId> canonical_cycle(const Gain& best) const {
    std::vector<std::size_t> fwd_off(n_ + 1, 0);
    std::vector<NodeId> fwd;
    std::vector<std::pair<NodeId, NodeId>> tight;
    for (NodeId u = 0; u < n_; ++u) {
      if (!live_[u] || !(gain_[u] == best)) continue;
      const auto succ = g_.successors(u);
      const auto w = g_.weights(u);
      for (std::size_t i = 0; i < succ.size(); ++i) {
        const NodeId v = succ[i];
        if (!live_[v] || !(gain_[v] == best)) continue;
        const std::int64_t reduced = best.q * w[i] - best.p + potential_[v];
        assert(potential_[u] <= reduced);
        if (reduced == potential_[u]) tight.emplace_back(u, v);
      }
    }
    for (const auto& [u, v] : tight) ++fwd_off[u + 1];
    std::partial_sum(fwd_off.begin(), fwd_off.end(), fwd_off.begin());
    fwd.resize(tight.size());
    {
      std::vector<std::size_t> fill(fwd_off.begin(), fwd_off.end() - 1);
      for (const auto& [u, v] : tight) fwd[fill[u]++] = v;  // already sorted by (u, v)
    }
    std::vector<std::size_t> rev_off(n_ + 1, 0);
    std::vector<NodeId> rev(tight.size());
    for (const auto& [u, v] : tight) ++rev_off[v + 1];
    std::partial_sum(rev_off.begin(), rev_off.end(), rev_off.begin());
    {
      std::vector<std::size_t> fill(rev_off.begin(), rev_off.end() - 1);
      for (const auto& [u, v] : tight) rev[fill[v]++] = u;
    }

    // Shortest cycle whose minimum node is `root`, searched with a depth limit.
    std::vector<NodeId> stamp(n_, kNone);
    std::vector<NodeId> frontier, next;
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    NodeId best_root = kNone;
    for (NodeId root = 0; root < n_; ++root) {
      if (fwd_off[root] == fwd_off[root + 1]) continue;
      frontier.assign(1, root);
      stamp[root] = root;
      bool closed = false;
      for (std::size_t depth = 1; depth < best_len && !frontier.empty() && !closed; ++depth) {
        next.clear();
        for (NodeId u : frontier) {
          for (std::size_t e = fwd_off[u]; e < fwd_off[u + 1]; ++e) {
            const NodeId v = fwd[e];
            if (v == root) {
              closed = true;
              break;
            }
            if (v < root || stamp[v] == root) continue;
            stamp[v] = root;
            next.push_back(v);
          }
          if (closed) break;
        }
        if (closed) {
          best_len = depth;
          best_root = root;
        }
        frontier.swap(next);
      }
    }
    assert(best_root != kNone);

    // Distances to the root, then a greedy walk that always takes the smallest viable successor.
    std::vector<std::size_t> to_root(n_, std::numeric_limits<std::size_t>::max());
    to_root[best_root] = 0;
    frontier.assign(1, best_root);
    for (std::size_t depth = 1; depth < best_len && !frontier.empty(); ++depth) {
      next.clear();
      for (NodeId v : frontier) {
        for (std::size_t e = rev_off[v]; e < rev_off[v + 1]; ++e) {
          const NodeId u = rev[e];
          if (u < best_root || to_root[u] != std::numeric_limits<std::size_t>::max()) continue;
          to_root[u] = depth;
          next.push_back(u);
        }
      }
      frontier.swap(next);
    }
    std::vector<NodeId> cycle{best_root};
    NodeId cur = best_root;
    for (std::size_t remaining = best_len; remaining > 1; --remaining) {
      NodeId chosen = kNone;
      for (std::size_t e = fwd_off[cur]; e < fwd_off[cur + 1]; ++e) {
        const NodeId v = fwd[e];
        if (v > best_root && to_root[v] == remaining - 1) {
          chosen = v;
          break;
        }
      }
      assert(chosen != kNone);
      cycle.push_back(chosen);
      cur = chosen;
    }
    return cycle;
  }

  const WeightedDigraph& g_;
  std::size_t n_;
  std::vector<std::uint8_t> live_;
  std::vector<NodeId> policy_;
  std::vector<std::int64_t> weight_;
  std::vector<Gain> gain_;
  std::vector<std::int64_t> potential_;
};

}  // namespace

MeanCycle min_mean_cycle(const WeightedDigraph& g) { return PolicyIteration(g).run(); }

}  // namespace pierce
