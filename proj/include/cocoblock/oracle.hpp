#pragma once

// Exponential-time reference implementations. Every routine here works from
// the definitions alone and shares no code path with the solver beyond the
// Graph and Digraph containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cocoblock/graph.hpp"
#include "cocoblock/mincut.hpp"
#include "cocoblock/ordering.hpp"
#include "cocoblock/reduction.hpp"

namespace cocoblock::oracle {

class TooLarge : public std::length_error {
 public:
  TooLarge(const std::string& what, int size, int limit)
      : std::length_error(what + ": size " + std::to_string(size) + " exceeds oracle limit " +
                          std::to_string(limit)) {}
};

using Mask = std::uint32_t;
using VertexSet = std::vector<Vertex>;

namespace detail {

inline void guard(const char* what, int size, int limit) {
  if (size > limit) throw TooLarge(what, size, limit);
}

inline std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nb(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  return nb;
}

inline VertexSet to_set(Mask m) {
  VertexSet out;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

inline Mask to_mask(const VertexSet& set) {
  Mask m = 0;
  for (Vertex v : set) m |= Mask{1} << v;
  return m;
}

inline int alpha_of(const std::vector<Mask>& nb, Mask candidates) {
  if (candidates == 0) return 0;
  int v = std::countr_zero(candidates);
  Mask rest = candidates & ~(Mask{1} << v);
  int without = alpha_of(nb, rest);
  // v with no live neighbours is always worth taking.
  if ((nb[v] & rest) == 0) return without + 1;
  return std::max(without, 1 + alpha_of(nb, rest & ~nb[v]));
}

inline void collect_sets(const std::vector<Mask>& nb, int n, int next, int remaining, Mask chosen,
                         Mask forbidden, std::vector<Mask>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  for (int v = next; v <= n - remaining; ++v) {
    if (forbidden & (Mask{1} << v)) continue;
    collect_sets(nb, n, v + 1, remaining - 1, chosen | (Mask{1} << v), forbidden | nb[v], out);
  }
}

// Independent sets of exactly `size` vertices as masks, in lexicographic order
// of their sorted vertex lists.
inline std::vector<Mask> independent_masks(const Graph& g, int size) {
  std::vector<Mask> out;
  if (size < 0 || size > g.n()) return out;
  collect_sets(neighbor_masks(g), g.n(), 0, size, 0, 0, out);
  return out;
}

}  // namespace detail

inline int brute_alpha(const Graph& g) {
  detail::guard("brute_alpha", g.n(), 24);
  Mask all = g.n() == 0 ? 0 : (g.n() == 32 ? ~Mask{0} : (Mask{1} << g.n()) - 1);
  return detail::alpha_of(detail::neighbor_masks(g), all);
}

inline std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int size) {
  detail::guard("enumerate_independent_sets", g.n(), 24);
  std::vector<VertexSet> out;
  for (Mask m : detail::independent_masks(g, size)) out.push_back(detail::to_set(m));
  return out;
}

inline std::vector<VertexSet> all_maximum_independent_sets(const Graph& g) {
  return enumerate_independent_sets(g, brute_alpha(g));
}

// Independent sets of the given size contained in some maximum independent set.
inline std::vector<VertexSet> max_extendable_sets(const Graph& g, int size) {
  detail::guard("max_extendable_sets", g.n(), 24);
  auto mis = detail::independent_masks(g, brute_alpha(g));
  std::vector<VertexSet> out;
  for (Mask m : detail::independent_masks(g, size))
    if (std::any_of(mis.begin(), mis.end(), [m](Mask big) { return (m & big) == m; }))
      out.push_back(detail::to_set(m));
  return out;
}

// Largest independent set containing v.
inline int brute_beta(const Graph& g, Vertex v) {
  detail::guard("brute_beta", g.n(), 24);
  auto nb = detail::neighbor_masks(g);
  Mask all = g.n() == 0 ? 0 : (Mask{1} << g.n()) - 1;
  return 1 + detail::alpha_of(nb, all & ~nb[v] & ~(Mask{1} << v));
}

// alpha(G[mask]) for every mask, by the usual include/exclude recurrence.
inline std::vector<std::uint8_t> alpha_table(const Graph& g) {
  detail::guard("alpha_table", g.n(), 20);
  auto nb = detail::neighbor_masks(g);
  std::vector<std::uint8_t> table(std::size_t{1} << g.n(), 0);
  for (Mask m = 1; m < table.size(); ++m) {
    int v = std::countr_zero(m);
    Mask rest = m & ~(Mask{1} << v);
    table[m] = std::max<std::uint8_t>(table[rest], 1 + table[rest & ~nb[v]]);
  }
  return table;
}

// Smallest |S| with |I ∩ S| >= d for every maximum independent set I.
inline std::optional<int> brute_transversal(const Graph& g, int d) {
  detail::guard("brute_transversal", g.n(), 16);
  if (d < 1) throw std::invalid_argument("brute_transversal: d must be at least 1");
  auto mis = detail::independent_masks(g, brute_alpha(g));
  std::optional<int> best;
  const Mask limit = Mask{1} << g.n();
  for (Mask s = 0; s < limit; ++s) {
    int size = std::popcount(s);
    if (best && size >= *best) continue;
    bool ok = !mis.empty() && std::all_of(mis.begin(), mis.end(), [&](Mask big) {
      return std::popcount(big & s) >= d;
    });
    if (ok) best = size;
  }
  return best;
}

// Smallest |S| with alpha(G - S) <= alpha(G) - d.
inline std::optional<int> brute_blocker(const Graph& g, int d) {
  detail::guard("brute_blocker", g.n(), 16);
  if (d < 1) throw std::invalid_argument("brute_blocker: d must be at least 1");
  auto table = alpha_table(g);
  const Mask all = static_cast<Mask>(table.size() - 1);
  const int alpha = table[all];
  std::optional<int> best;
  for (Mask s = 0; s <= all; ++s) {
    int size = std::popcount(s);
    if (best && size >= *best) continue;
    if (table[all & ~s] <= alpha - d) best = size;
  }
  return best;
}

// Smallest set of internal nodes whose removal leaves no s-t path; nullopt
// when s -> t is an arc.
inline std::optional<int> brute_vertex_cut(const Digraph& dg, NodeId s, NodeId t) {
  std::vector<NodeId> internal;
  for (NodeId v = 0; v < dg.n(); ++v)
    if (v != s && v != t) internal.push_back(v);
  detail::guard("brute_vertex_cut", static_cast<int>(internal.size()), 18);
  if (dg.has_arc(s, t)) return std::nullopt;
  const int k = static_cast<int>(internal.size());
  std::optional<int> best;
  std::vector<char> blocked(dg.n(), 0);
  for (Mask m = 0; m < (Mask{1} << k); ++m) {
    int size = std::popcount(m);
    if (best && size >= *best) continue;
    for (int i = 0; i < k; ++i) blocked[internal[i]] = (m >> i) & 1;
    if (!reachable(dg, s, blocked)[t]) best = size;
  }
  return best;
}

// All simple s-t paths as node sequences, stopping after `limit` paths.
inline std::vector<std::vector<NodeId>> enumerate_st_paths(const Digraph& dg, NodeId s, NodeId t,
                                                           std::size_t limit = 100000) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> path{s};
  std::vector<char> on_path(dg.n(), 0);
  on_path[s] = 1;
  auto walk = [&](auto& self, NodeId v) -> void {
    if (out.size() >= limit) return;
    if (v == t) {
      out.push_back(path);
      return;
    }
    for (NodeId w : dg.out(v)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  walk(walk, s);
  return out;
}

// Maximum number of internally vertex-disjoint s-t paths, by exhaustive
// packing over the simple paths.
inline int max_disjoint_paths(const Digraph& dg, NodeId s, NodeId t) {
  detail::guard("max_disjoint_paths", dg.n(), 32);
  auto paths = enumerate_st_paths(dg, s, t, 20000);
  std::vector<Mask> used;
  for (const auto& p : paths) {
    Mask m = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) m |= Mask{1} << p[i];
    used.push_back(m);
  }
  int best = 0;
  auto pack = [&](auto& self, std::size_t from, Mask taken, int count) -> void {
    best = std::max(best, count);
    for (std::size_t i = from; i < used.size(); ++i)
      if ((used[i] & taken) == 0) self(self, i + 1, taken | used[i], count + 1);
  };
  pack(pack, 0, 0, 0);
  return best;
}

// Tries every permutation; true iff some vertex ordering makes
// non-adjacency transitive, i.e. the complement is a comparability graph.
inline bool brute_is_cocomparability(const Graph& g) {
  detail::guard("brute_is_cocomparability", g.n(), 9);
  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i < g.n(); ++i)
      for (int j = i + 1; ok && j < g.n(); ++j) {
        if (g.adjacent(perm[i], perm[j])) continue;
        for (int k = j + 1; k < g.n(); ++k)
          if (!g.adjacent(perm[j], perm[k]) && g.adjacent(perm[i], perm[k])) {
            ok = false;
            break;
          }
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

struct OracleReport {
  int alpha = 0;
  std::vector<VertexSet> all_mis;
  // Indexed by d in 1..alpha; entry 0 unused.
  std::vector<std::optional<int>> best_transversal;
  std::vector<std::optional<int>> best_blocker;
};

inline OracleReport report(const Graph& g) {
  OracleReport r;
  r.alpha = brute_alpha(g);
  r.all_mis = enumerate_independent_sets(g, r.alpha);
  r.best_transversal.assign(r.alpha + 1, std::nullopt);
  r.best_blocker.assign(r.alpha + 1, std::nullopt);
  for (int d = 1; d <= r.alpha; ++d) {
    r.best_transversal[d] = brute_transversal(g, d);
    r.best_blocker[d] = brute_blocker(g, d);
  }
  return r;
}

struct GeneratedInstance {
  Graph graph;
  CocoOrdering ordering;
};

// Random partial order: a random linear extension, each forward pair kept
// with probability `density`, then transitively closed. The graph is the
// complement of its comparability graph; the extension is its ordering.
inline GeneratedInstance gen_cocomparability(int n, double density, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_cocomparability: negative n");
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("gen_cocomparability: density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> ext(n);
  std::iota(ext.begin(), ext.end(), 0);
  std::shuffle(ext.begin(), ext.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  // related[i][j] for extension indices i < j.
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) related[i][j] = coin(rng) < density;
  for (bool changed = true; changed;) {
    changed = false;
    auto next = related;
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        if (!related[i][k]) continue;
        for (int j = k + 1; j < n; ++j)
          if (related[k][j] && !next[i][j]) {
            next[i][j] = 1;
            changed = true;
          }
      }
    related = std::move(next);
  }

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!related[i][j]) edges.emplace_back(ext[i], ext[j]);
  Graph g(n, std::move(edges));
  CocoOrdering ord = verify_ordering(g, ext);
  return {std::move(g), std::move(ord)};
}

// Random DAG on internal + 2 nodes; node 0 is the source, the last node the
// sink, arcs only go from lower to higher id. The direct s -> t arc is never
// emitted.
inline Digraph gen_random_dag(int internal, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = internal + 2;
  Digraph dg(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!(a == 0 && b == n - 1) && coin(rng) < density) dg.add_arc(a, b);
  return dg;
}

}  // namespace cocoblock::oracle
