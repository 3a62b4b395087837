#pragma once

// Residual graph shared by the feasibility (max-flow) and min-cost solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "pbm/ext_int.hpp"

namespace pbm::internal {

class FlowGraph {
 public:
  struct Edge {
    int to;
    long long cap;
    long long cost;
  };

  explicit FlowGraph(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  int node_count() const { return static_cast<int>(adj_.size()); }

  // Returns the id of the forward edge; its reverse is id ^ 1.
  int add_edge(int from, int to, long long cap, long long cost = 0) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, cap, cost});
    edges_.push_back({from, 0, -cost});
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  // Flow pushed along a forward edge so far.
  long long flow(int id) const { return edges_[static_cast<std::size_t>(id) ^ 1].cap; }

  long long max_flow(int s, int t, long long* augmentations);

  // Successive shortest paths with Dijkstra on reduced costs. Every residual
  // edge must have non-negative cost on entry.
  struct CostFlow {
    long long flow = 0;
    long long cost = 0;
  };
  CostFlow min_cost_flow(int s, int t, long long* augmentations);

  // Nodes reachable from s through edges with positive residual capacity.
  std::vector<char> reachable_from(int s) const;

 private:
  bool bfs_levels(int s, int t);
  long long dfs_push(int v, int t, long long limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

inline bool FlowGraph::bfs_levels(int s, int t) {
  level_.assign(adj_.size(), -1);
  std::queue<int> q;
  level_[static_cast<std::size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int id : adj_[static_cast<std::size_t>(v)]) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
        level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(v)] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(t)] >= 0;
}

inline long long FlowGraph::dfs_push(int v, int t, long long limit) {
  if (v == t) return limit;
  auto& it = iter_[static_cast<std::size_t>(v)];
  const auto& out = adj_[static_cast<std::size_t>(v)];
  for (; it < out.size(); ++it) {
    const int id = out[it];
    Edge& e = edges_[static_cast<std::size_t>(id)];
    if (e.cap <= 0 ||
        level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(v)] + 1) {
      continue;
    }
    const long long pushed = dfs_push(e.to, t, std::min(limit, e.cap));
    if (pushed > 0) {
      e.cap -= pushed;
      edges_[static_cast<std::size_t>(id ^ 1)].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

inline long long FlowGraph::max_flow(int s, int t, long long* augmentations) {
  long long total = 0;
  while (bfs_levels(s, t)) {
    iter_.assign(adj_.size(), 0);
    while (long long pushed = dfs_push(s, t, std::numeric_limits<long long>::max())) {
      total = checked_add(total, pushed);
      if (augmentations) ++*augmentations;
    }
  }
  return total;
}

inline FlowGraph::CostFlow FlowGraph::min_cost_flow(int s, int t, long long* augmentations) {
  constexpr long long kInf = std::numeric_limits<long long>::max();
  const std::size_t n = adj_.size();
  std::vector<long long> potential(n, 0), dist(n);
  std::vector<int> parent_edge(n);
  CostFlow result;
  for (;;) {
    dist.assign(n, kInf);
    parent_edge.assign(n, -1);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(s)] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      const auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[static_cast<std::size_t>(v)]) continue;
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        if (e.cap <= 0) continue;
        const long long nd = d + e.cost + potential[static_cast<std::size_t>(v)] -
                             potential[static_cast<std::size_t>(e.to)];
        if (nd < dist[static_cast<std::size_t>(e.to)]) {
          dist[static_cast<std::size_t>(e.to)] = nd;
          parent_edge[static_cast<std::size_t>(e.to)] = id;
          pq.push({nd, e.to});
        }
      }
    }
    if (dist[static_cast<std::size_t>(t)] == kInf) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != kInf) potential[v] += dist[v];
    }
    long long push = kInf;
    for (int v = t; v != s;) {
      const int id = parent_edge[static_cast<std::size_t>(v)];
      push = std::min(push, edges_[static_cast<std::size_t>(id)].cap);
      v = edges_[static_cast<std::size_t>(id ^ 1)].to;
    }
    for (int v = t; v != s;) {
      const int id = parent_edge[static_cast<std::size_t>(v)];
      edges_[static_cast<std::size_t>(id)].cap -= push;
      edges_[static_cast<std::size_t>(id ^ 1)].cap += push;
      result.cost = checked_add(result.cost,
                                checked_mul(push, edges_[static_cast<std::size_t>(id)].cost));
      v = edges_[static_cast<std::size_t>(id ^ 1)].to;
    }
    result.flow = checked_add(result.flow, push);
    if (augmentations) ++*augmentations;
  }
  return result;
}

inline std::vector<char> FlowGraph::reachable_from(int s) const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> stack{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int id : adj_[static_cast<std::size_t>(v)]) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.cap > 0 && !seen[static_cast<std::size_t>(e.to)]) {
        seen[static_cast<std::size_t>(e.to)] = 1;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

}  // namespace pbm::internal
