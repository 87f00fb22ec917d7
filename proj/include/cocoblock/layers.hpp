#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cocoblock/graph.hpp"
#include "cocoblock/ordering.hpp"

namespace cocoblock {

// Per-vertex extension sizes and the position/level partition they induce.
//
// For a vertex v, beta[v] is the size of a largest independent set through v
// and pos[v] is the (1-based) index of v inside every such set. The layer
// L(p, b) collects the vertices with pos == p and beta == b; L(p, alpha) are
// the position classes of the vertices lying on a maximum independent set.
struct LevelStructure {
  int alpha = 0;
  std::vector<int> leftext;
  std::vector<int> rightext;
  std::vector<int> beta;
  std::vector<int> pos;
  // layers[b][p] for 1 <= p <= b <= alpha, each sorted by the ordering.
  std::vector<std::vector<std::vector<Vertex>>> layers;
  // Vertices with beta == alpha, sorted by the ordering.
  std::vector<Vertex> i_max;

  int n() const noexcept { return static_cast<int>(pos.size()); }

  std::span<const Vertex> layer(int p, int b) const {
    if (b < 1 || b > alpha || p < 1 || p > b) return {};
    return layers[b][p];
  }

  // Vertices with the given beta, sorted by the ordering.
  std::vector<Vertex> with_beta(int b) const {
    std::vector<Vertex> out;
    if (b < 1 || b > alpha) return out;
    for (int p = 1; p <= b; ++p) out.insert(out.end(), layers[b][p].begin(), layers[b][p].end());
    return out;
  }

  bool in_max_set(Vertex v) const { return beta[v] == alpha; }
};

// longest(u, v): most vertices on a chain u = w1 < w2 < ... < wk = v whose
// consecutive members are non-adjacent; 0 when no chain exists. Such chains
// are independent sets because non-adjacency is transitive along the order.
class NonEdgeDag {
 public:
  NonEdgeDag() = default;
  explicit NonEdgeDag(int n) : n_(n), table_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const noexcept { return n_; }
  int longest(Vertex u, Vertex v) const { return table_[idx(u, v)]; }
  int& longest(Vertex u, Vertex v) { return table_[idx(u, v)]; }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  int n_ = 0;
  std::vector<int> table_;
};

inline LevelStructure build_levels(const Graph& g, const CocoOrdering& ord) {
  const int n = g.n();
  LevelStructure ls;
  ls.leftext.assign(n, 0);
  ls.rightext.assign(n, 0);
  ls.beta.assign(n, 0);
  ls.pos.assign(n, 0);

  for (int j = 0; j < n; ++j) {
    Vertex v = ord.at(j);
    int best = 0;
    for (int i = 0; i < j; ++i) {
      Vertex u = ord.at(i);
      if (!g.adjacent(u, v)) best = std::max(best, ls.leftext[u] + 1);
    }
    ls.leftext[v] = best;
  }
  for (int j = n - 1; j >= 0; --j) {
    Vertex v = ord.at(j);
    int best = 0;
    for (int k = j + 1; k < n; ++k) {
      Vertex w = ord.at(k);
      if (!g.adjacent(v, w)) best = std::max(best, ls.rightext[w] + 1);
    }
    ls.rightext[v] = best;
  }
  for (Vertex v = 0; v < n; ++v) {
    ls.beta[v] = ls.leftext[v] + ls.rightext[v] + 1;
    ls.pos[v] = ls.leftext[v] + 1;
    ls.alpha = std::max(ls.alpha, ls.beta[v]);
  }

  ls.layers.assign(ls.alpha + 1, {});
  for (int b = 1; b <= ls.alpha; ++b) ls.layers[b].assign(b + 1, {});
  for (int i = 0; i < n; ++i) {
    Vertex v = ord.at(i);
    ls.layers[ls.beta[v]][ls.pos[v]].push_back(v);
    if (ls.beta[v] == ls.alpha) ls.i_max.push_back(v);
  }

  for (Vertex v = 0; v < n; ++v) {
    assert(ls.leftext[v] == ls.pos[v] - 1);
    assert(ls.rightext[v] == ls.beta[v] - ls.pos[v]);
    assert(1 <= ls.pos[v] && ls.pos[v] <= ls.beta[v] && ls.beta[v] <= ls.alpha);
  }
  return ls;
}

inline NonEdgeDag build_nonedge_dag(const Graph& g, const CocoOrdering& ord) {
  const int n = g.n();
  NonEdgeDag dag(n);
  // Later non-neighbours of each vertex, in order.
  std::vector<std::vector<Vertex>> succ(n);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (!g.adjacent(ord.at(i), ord.at(k))) succ[ord.at(i)].push_back(ord.at(k));

  for (int i = 0; i < n; ++i) {
    Vertex u = ord.at(i);
    for (Vertex v : succ[u]) dag.longest(u, v) = 2;
    for (int j = i + 1; j < n; ++j) {
      Vertex w = ord.at(j);
      int here = dag.longest(u, w);
      if (here == 0) continue;
      for (Vertex v : succ[w]) dag.longest(u, v) = std::max(dag.longest(u, v), here + 1);
    }
  }
  return dag;
}

// True iff some maximum independent set contains both u and v.
inline bool pair_max_extendable(const LevelStructure& ls, const NonEdgeDag& dag, Vertex u,
                                Vertex v) {
  if (u == v) return ls.beta[u] == ls.alpha;
  // The table is only populated for u before v.
  int chain = dag.longest(u, v);
  if (chain == 0) {
    std::swap(u, v);
    chain = dag.longest(u, v);
    if (chain == 0) return false;
  }
  return ls.leftext[u] + chain + ls.rightext[v] == ls.alpha;
}

// "v pos beta leftext rightext" per vertex, in ordering order.
inline std::string dump_levels(const LevelStructure& ls, const CocoOrdering& ord) {
  std::ostringstream oss;
  for (int i = 0; i < ord.size(); ++i) {
    Vertex v = ord.at(i);
    oss << v << ' ' << ls.pos[v] << ' ' << ls.beta[v] << ' ' << ls.leftext[v] << ' '
        << ls.rightext[v] << '\n';
  }
  return oss.str();
}

}  // namespace cocoblock
