#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cocoblock/graph.hpp"
#include "cocoblock/layers.hpp"
#include "cocoblock/mincut.hpp"
#include "cocoblock/ordering.hpp"

namespace cocoblock {

enum class Problem { Transversal, Blocker };

inline const char* to_string(Problem p) {
  return p == Problem::Transversal ? "transversal" : "blocker";
}

inline Problem parse_problem(const std::string& name) {
  if (name == "transversal") return Problem::Transversal;
  if (name == "blocker") return Problem::Blocker;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

class ThresholdOutOfRange : public std::invalid_argument {
 public:
  ThresholdOutOfRange(int d, int alpha)
      : std::invalid_argument("threshold d=" + std::to_string(d) + " outside [1, " +
                              std::to_string(alpha) + "]"),
        d_(d), alpha_(alpha) {}
  int d() const noexcept { return d_; }
  int alpha() const noexcept { return alpha_; }

 private:
  int d_, alpha_;
};

struct LayeredNode {
  static constexpr Vertex kSource = -1;
  static constexpr Vertex kSink = -2;

  Vertex orig = kSource;
  int level = 1;
  int beta = 0;
  int pos = 0;

  bool terminal() const noexcept { return orig < 0; }
};

// Layered reduction digraph. Every source-sink path projects onto an
// independent set of size alpha - d + 1: all of them (blocker) or exactly the
// ones contained in a maximum independent set (transversal).
struct LayeredDigraph {
  Problem kind = Problem::Transversal;
  int d = 1;
  int alpha = 0;
  std::vector<LayeredNode> nodes;
  NodeId s = 0;
  NodeId t = 1;
  Digraph digraph;
  // copies[v]: the nodes standing for vertex v, by increasing level (empty
  // when v is not represented).
  std::vector<std::vector<NodeId>> copies;

  const std::vector<Arc>& arcs() const noexcept { return digraph.arcs(); }
  Vertex origin_of(NodeId x) const { return nodes[x].orig; }
  int n_nodes() const noexcept { return static_cast<int>(nodes.size()); }
};

namespace detail {

template <class PairOk>
LayeredDigraph build_layered(Problem kind, const Graph& g, const LevelStructure& ls, int d,
                             const std::vector<Vertex>& members, PairOk pair_ok) {
  if (d < 1 || d > ls.alpha) throw ThresholdOutOfRange(d, ls.alpha);
  LayeredDigraph out;
  out.kind = kind;
  out.d = d;
  out.alpha = ls.alpha;
  out.copies.assign(g.n(), {});
  out.nodes.push_back({LayeredNode::kSource, 1, 0, 0});
  out.nodes.push_back({LayeredNode::kSink, d, 0, ls.alpha + 1});
  out.s = 0;
  out.t = 1;
  for (int level = 1; level <= d; ++level) {
    for (Vertex v : members) {
      out.copies[v].push_back(static_cast<NodeId>(out.nodes.size()));
      out.nodes.push_back({v, level, ls.beta[v], ls.pos[v]});
    }
  }
  out.digraph = Digraph(out.n_nodes());
  auto copy_at = [&](Vertex v, int level) { return out.copies[v][level - 1]; };

  for (Vertex v : members) {
    // s -> x needs level(x) = pos(x); x -> t needs level(x) = d - alpha + pos(x).
    if (ls.pos[v] <= d) out.digraph.add_arc(out.s, copy_at(v, ls.pos[v]));
  }
  for (Vertex u : members) {
    for (Vertex v : members) {
      int gap = ls.pos[v] - ls.pos[u] - 1;
      if (gap < 0 || gap > d - 1 || !pair_ok(u, v)) continue;
      for (int level = 1; level + gap <= d; ++level)
        out.digraph.add_arc(copy_at(u, level), copy_at(v, level + gap));
    }
  }
  for (Vertex v : members) {
    int level = d - ls.alpha + ls.pos[v];
    if (level >= 1 && level <= d) out.digraph.add_arc(copy_at(v, level), out.t);
  }

  for (auto [a, b] : out.arcs()) {
    const auto& x = out.nodes[a];
    const auto& y = out.nodes[b];
    if (!(y.pos > x.pos && y.level >= x.level && y.pos - x.pos - 1 == y.level - x.level))
      throw std::logic_error("layered digraph arc breaks the position/level arithmetic");
  }
  return out;
}

}  // namespace detail

inline LayeredDigraph build_transversal_digraph(const Graph& g, const CocoOrdering& /*ord*/,
                                                const LevelStructure& ls, const NonEdgeDag& dag,
                                                int d) {
  return detail::build_layered(Problem::Transversal, g, ls, d, ls.i_max, [&](Vertex u, Vertex v) {
    return !g.adjacent(u, v) && pair_max_extendable(ls, dag, u, v);
  });
}

inline LayeredDigraph build_blocker_digraph(const Graph& g, const CocoOrdering& ord,
                                            const LevelStructure& ls, int d) {
  if (d < 1 || d > ls.alpha) throw ThresholdOutOfRange(d, ls.alpha);
  std::vector<Vertex> members;
  for (int i = 0; i < ord.size(); ++i)
    if (ls.beta[ord.at(i)] >= ls.alpha - d + 1) members.push_back(ord.at(i));
  return detail::build_layered(Problem::Blocker, g, ls, d, members,
                               [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

// Number of s-t paths, computed over a topological order (pos increases
// strictly along arcs). Saturates at UINT64_MAX.
inline std::uint64_t count_st_paths(const LayeredDigraph& gp) {
  std::vector<NodeId> order(gp.n_nodes());
  for (NodeId x = 0; x < gp.n_nodes(); ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return gp.nodes[a].pos < gp.nodes[b].pos; });
  std::vector<std::uint64_t> ways(gp.n_nodes(), 0);
  ways[gp.s] = 1;
  for (NodeId x : order) {
    if (ways[x] == 0) continue;
    for (NodeId y : gp.digraph.out(x)) {
      std::uint64_t sum = ways[y] + ways[x];
      ways[y] = sum < ways[y] ? UINT64_MAX : sum;
    }
  }
  return ways[gp.t];
}

// Nodes lying on at least one s-t path.
inline std::vector<char> useful_nodes(const LayeredDigraph& gp,
                                      const std::vector<char>& blocked = {}) {
  auto from_s = reachable(gp.digraph, gp.s, blocked);
  auto to_t = reachable(gp.digraph, gp.t, blocked, /*reverse=*/true);
  std::vector<char> out(gp.n_nodes(), 0);
  for (NodeId x = 0; x < gp.n_nodes(); ++x) out[x] = from_s[x] && to_t[x];
  return out;
}

// Drops nodes on no s-t path. Node ids are renumbered; s and t stay 0 and 1.
inline LayeredDigraph prune(const LayeredDigraph& gp) {
  auto keep = useful_nodes(gp);
  keep[gp.s] = keep[gp.t] = 1;
  LayeredDigraph out;
  out.kind = gp.kind;
  out.d = gp.d;
  out.alpha = gp.alpha;
  out.copies.assign(gp.copies.size(), {});
  std::vector<NodeId> remap(gp.n_nodes(), -1);
  for (NodeId x = 0; x < gp.n_nodes(); ++x) {
    if (!keep[x]) continue;
    remap[x] = static_cast<NodeId>(out.nodes.size());
    out.nodes.push_back(gp.nodes[x]);
    if (!gp.nodes[x].terminal()) out.copies[gp.nodes[x].orig].push_back(remap[x]);
  }
  out.s = remap[gp.s];
  out.t = remap[gp.t];
  out.digraph = Digraph(out.n_nodes());
  for (auto [a, b] : gp.arcs())
    if (keep[a] && keep[b]) out.digraph.add_arc(remap[a], remap[b]);
  return out;
}

inline std::string node_label(const LayeredNode& x) {
  if (x.orig == LayeredNode::kSource) return "s";
  if (x.orig == LayeredNode::kSink) return "t";
  return "v" + std::to_string(x.orig) + "@L" + std::to_string(x.level) + ",b" +
         std::to_string(x.beta);
}

inline std::string export_dot(const LayeredDigraph& gp) {
  std::ostringstream oss;
  oss << "digraph " << to_string(gp.kind) << " {\n";
  oss << "  rankdir=LR;\n";
  for (NodeId x = 0; x < gp.n_nodes(); ++x)
    oss << "  n" << x << " [label=\"" << node_label(gp.nodes[x]) << "\"];\n";
  for (auto [a, b] : gp.arcs()) oss << "  n" << a << " -> n" << b << ";\n";
  oss << "}\n";
  return oss.str();
}

inline nlohmann::json export_json(const LayeredDigraph& gp) {
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId x = 0; x < gp.n_nodes(); ++x) {
    const auto& node = gp.nodes[x];
    nlohmann::json rec = {{"id", x}, {"level", node.level}, {"beta", node.beta}, {"pos", node.pos}};
    if (node.orig == LayeredNode::kSource)
      rec["orig"] = "s";
    else if (node.orig == LayeredNode::kSink)
      rec["orig"] = "t";
    else
      rec["orig"] = node.orig;
    nodes.push_back(std::move(rec));
  }
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [a, b] : gp.arcs()) arcs.push_back({a, b});
  return {{"kind", to_string(gp.kind)}, {"d", gp.d}, {"alpha", gp.alpha}, {"s", gp.s},
          {"t", gp.t}, {"nodes", std::move(nodes)}, {"arcs", std::move(arcs)}};
}

}  // namespace cocoblock
