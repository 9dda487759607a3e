#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace boolhd {

/// Dinic's maximum flow on integer capacities.
class MaxFlow {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int nodes) : g_(static_cast<std::size_t>(nodes)) {}

  void add_edge(int u, int v, std::int64_t cap) {
    g_[static_cast<std::size_t>(u)].push_back({v, g_[static_cast<std::size_t>(v)].size(), cap});
    g_[static_cast<std::size_t>(v)].push_back({u, g_[static_cast<std::size_t>(u)].size() - 1, 0});
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_.assign(g_.size(), 0);
      while (auto f = dfs(s, t, kInf)) flow += f;
    }
    return flow;
  }

  /// Nodes reachable from `s` in the residual graph: the inclusion-minimal
  /// source side over all minimum cuts.
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(g_.size(), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : g_[static_cast<std::size_t>(u)])
        if (e.cap > 0 && !seen[static_cast<std::size_t>(e.to)]) {
          seen[static_cast<std::size_t>(e.to)] = true;
          stack.push_back(e.to);
        }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    std::size_t rev;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    level_.assign(g_.size(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& e : g_[static_cast<std::size_t>(u)])
        if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(e.to);
        }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t f) {
    if (u == t) return f;
    auto& edges = g_[static_cast<std::size_t>(u)];
    for (auto& i = it_[static_cast<std::size_t>(u)]; i < edges.size(); ++i) {
      Edge& e = edges[i];
      if (e.cap <= 0 || level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      if (auto got = dfs(e.to, t, std::min(f, e.cap))) {
        e.cap -= got;
        g_[static_cast<std::size_t>(e.to)][e.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> g_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace boolhd
