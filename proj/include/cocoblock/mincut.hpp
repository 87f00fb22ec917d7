#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cocoblock {

using NodeId = int;
using Arc = std::pair<NodeId, NodeId>;

// Plain directed graph on nodes 0..n-1. Arc order is preserved and drives
// every traversal below, so results are deterministic.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), out_(n), in_(n) {}
  Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
    for (auto [a, b] : arcs) add_arc(a, b);
  }

  void add_arc(NodeId a, NodeId b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::out_of_range("arc endpoint out of range");
    arcs_.emplace_back(a, b);
    out_[a].push_back(b);
    in_[b].push_back(a);
  }

  int n() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<NodeId>& out(NodeId v) const { return out_[v]; }
  const std::vector<NodeId>& in(NodeId v) const { return in_[v]; }

  bool has_arc(NodeId a, NodeId b) const {
    return std::find(out_[a].begin(), out_[a].end(), b) != out_[a].end();
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

// Nodes reachable from `from` without entering blocked nodes, following arcs
// forwards (or backwards when reverse is set). `from` itself counts as reached
// unless it is blocked.
inline std::vector<char> reachable(const Digraph& dg, NodeId from, const std::vector<char>& blocked,
                                   bool reverse = false) {
  std::vector<char> seen(dg.n(), 0);
  if (!blocked.empty() && blocked[from]) return seen;
  std::vector<NodeId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : reverse ? dg.in(v) : dg.out(v)) {
      if (seen[w] || (!blocked.empty() && blocked[w])) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

inline bool separates(const Digraph& dg, NodeId s, NodeId t, const std::vector<NodeId>& cut) {
  std::vector<char> blocked(dg.n(), 0);
  for (NodeId v : cut) blocked[v] = 1;
  blocked[s] = blocked[t] = 0;
  return !reachable(dg, s, blocked)[t];
}

class InfiniteCut : public std::runtime_error {
 public:
  InfiniteCut() : std::runtime_error("source and sink are adjacent; no vertex cut exists") {}
};

struct CutResult {
  int size = 0;
  std::vector<NodeId> cut_nodes;  // sorted, never contains s or t
  int max_flow_value = 0;
};

namespace detail {

// Dinic max flow with integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1), level_(n), iter_(n) {}

  void add_edge(int from, int to, int cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
    }
    return flow;
  }

  // Nodes reachable from s through edges with residual capacity.
  std::vector<char> residual_reach(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = head_[v]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap <= 0 || seen[edges_[e].to]) continue;
        seen[edges_[e].to] = 1;
        stack.push_back(edges_[e].to);
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int next;
    int cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int e = head_[v]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          queue.push_back(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int limit) {
    if (v == t) return limit;
    for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
      Edge& edge = edges_[e];
      if (edge.cap <= 0 || level_[edge.to] != level_[v] + 1) continue;
      int pushed = dfs(edge.to, t, std::min(limit, edge.cap));
      if (pushed > 0) {
        edge.cap -= pushed;
        edges_[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace detail

// Minimum s-t vertex cut by node splitting: v becomes v_in -> v_out with
// capacity 1, arcs become v_out -> w_in with capacity (#internal nodes + 1).
inline CutResult min_vertex_cut(const Digraph& dg, NodeId s, NodeId t) {
  const int n = dg.n();
  if (s == t) throw std::invalid_argument("min_vertex_cut: source equals sink");
  if (s < 0 || t < 0 || s >= n || t >= n) throw std::out_of_range("min_vertex_cut: bad terminal");
  if (dg.has_arc(s, t)) throw InfiniteCut();

  auto in_node = [](NodeId v) { return 2 * v; };
  auto out_node = [s, t](NodeId v) { return (v == s || v == t) ? 2 * v : 2 * v + 1; };
  const int infinite = std::max(0, n - 2) + 1;

  detail::FlowNetwork net(2 * n);
  for (NodeId v = 0; v < n; ++v)
    if (v != s && v != t) net.add_edge(in_node(v), out_node(v), 1);
  for (auto [a, b] : dg.arcs())
    if (a != b) net.add_edge(out_node(a), in_node(b), infinite);

  CutResult result;
  result.max_flow_value = net.max_flow(in_node(s), in_node(t));
  auto seen = net.residual_reach(in_node(s));
  for (NodeId v = 0; v < n; ++v)
    if (v != s && v != t && seen[in_node(v)] && !seen[out_node(v)]) result.cut_nodes.push_back(v);
  result.size = static_cast<int>(result.cut_nodes.size());

  if (result.size != result.max_flow_value || !separates(dg, s, t, result.cut_nodes))
    throw std::logic_error("min_vertex_cut: extracted cut failed verification");
  return result;
}

}  // namespace cocoblock
