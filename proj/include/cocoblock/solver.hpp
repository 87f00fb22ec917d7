#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cocoblock/graph.hpp"
#include "cocoblock/layers.hpp"
#include "cocoblock/mincut.hpp"
#include "cocoblock/ordering.hpp"
#include "cocoblock/reduction.hpp"

namespace cocoblock {

// A graph together with a validated ordering and the structures derived from it.
struct Instance {
  Graph graph;
  CocoOrdering ordering;
  LevelStructure levels;
  NonEdgeDag dag;
};

// Validates the supplied ordering, or computes one when absent.
inline Instance make_instance(Graph g, const std::optional<std::vector<Vertex>>& order = std::nullopt) {
  Instance inst;
  inst.ordering = order ? verify_ordering(g, *order) : compute_ordering(g);
  inst.levels = build_levels(g, inst.ordering);
  inst.dag = build_nonedge_dag(g, inst.ordering);
  inst.graph = std::move(g);
  return inst;
}

inline LayeredDigraph build_digraph(const Instance& inst, Problem problem, int d) {
  if (problem == Problem::Transversal)
    return build_transversal_digraph(inst.graph, inst.ordering, inst.levels, inst.dag, d);
  return build_blocker_digraph(inst.graph, inst.ordering, inst.levels, d);
}

struct Solution {
  Problem problem = Problem::Transversal;
  int d = 1;
  int alpha = 0;
  bool feasible = false;
  std::optional<int> min_size;
  std::vector<Vertex> vertices;  // sorted ids
};

class NotMinimal : public std::runtime_error {
 public:
  explicit NotMinimal(Vertex v)
      : std::runtime_error("vertex " + std::to_string(v) +
                           " has no copy on a surviving source-sink path"),
        vertex_(v) {}
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

namespace detail {

inline void require_threshold(int d) {
  if (d < 1) throw std::invalid_argument("threshold d must be at least 1");
}

inline std::vector<Vertex> normalized_set(const Graph& g, std::vector<Vertex> set) {
  for (Vertex v : set)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline std::vector<NodeId> all_copies(const LayeredDigraph& gp, const std::vector<Vertex>& set) {
  std::vector<NodeId> out;
  for (Vertex v : set) out.insert(out.end(), gp.copies[v].begin(), gp.copies[v].end());
  return out;
}

// Independence number of g - removed; the restricted ordering stays valid.
inline int alpha_without(const Instance& inst, const std::vector<Vertex>& removed) {
  auto sub = remove_vertices(inst.graph, removed);
  std::vector<Vertex> order;
  for (Vertex v : inst.ordering.order())
    if (sub.old_to_new[v] >= 0) order.push_back(sub.old_to_new[v]);
  CocoOrdering restricted = verify_ordering(sub.graph, std::move(order));
  return build_levels(sub.graph, restricted).alpha;
}

}  // namespace detail

inline bool verify_solution(const Instance& inst, Problem problem, int d, std::vector<Vertex> set) {
  detail::require_threshold(d);
  set = detail::normalized_set(inst.graph, std::move(set));
  const int alpha = inst.levels.alpha;
  if (d > alpha) return false;
  if (problem == Problem::Blocker) return detail::alpha_without(inst, set) <= alpha - d;
  auto gp = build_digraph(inst, problem, d);
  return separates(gp.digraph, gp.s, gp.t, detail::all_copies(gp, set));
}

inline bool verify_solution(const Graph& g, const std::optional<std::vector<Vertex>>& order,
                            Problem problem, int d, std::vector<Vertex> set) {
  return verify_solution(make_instance(g, order), problem, d, std::move(set));
}

// Full pipeline output, kept for certificates and tests.
struct SolveTrace {
  Solution solution;
  std::optional<LayeredDigraph> digraph;
  std::optional<CutResult> cut;
};

inline SolveTrace solve_traced(const Instance& inst, Problem problem, int d) {
  detail::require_threshold(d);
  SolveTrace trace;
  Solution& sol = trace.solution;
  sol.problem = problem;
  sol.d = d;
  sol.alpha = inst.levels.alpha;
  if (d > inst.levels.alpha) return trace;

  auto gp = build_digraph(inst, problem, d);
  auto cut = min_vertex_cut(gp.digraph, gp.s, gp.t);
  for (NodeId x : cut.cut_nodes) sol.vertices.push_back(gp.origin_of(x));
  sol.vertices = detail::normalized_set(inst.graph, std::move(sol.vertices));
  if (static_cast<int>(sol.vertices.size()) > cut.size)
    throw std::logic_error("solve: projected solution larger than the cut");
  if (!verify_solution(inst, problem, d, sol.vertices))
    throw std::logic_error("solve: projected cut is not a feasible solution");
  sol.feasible = true;
  sol.min_size = static_cast<int>(sol.vertices.size());
  trace.digraph = std::move(gp);
  trace.cut = std::move(cut);
  return trace;
}

inline Solution solve(const Instance& inst, Problem problem, int d) {
  return solve_traced(inst, problem, d).solution;
}

inline Solution solve(const Graph& g, const std::optional<std::vector<Vertex>>& order, Problem problem,
                      int d) {
  return solve(make_instance(g, order), problem, d);
}

inline bool decide(const Instance& inst, Problem problem, int d, int k) {
  if (k < 1) throw std::invalid_argument("budget k must be at least 1");
  auto sol = solve(inst, problem, d);
  return sol.feasible && *sol.min_size <= k;
}

inline bool decide(const Graph& g, const std::optional<std::vector<Vertex>>& order, Problem problem,
                   int d, int k) {
  return decide(make_instance(g, order), problem, d, k);
}

// Greedily drops vertices, latest in the ordering first, while the set stays
// feasible. Returns the surviving vertices sorted by id.
inline std::vector<Vertex> minimize_solution(const Instance& inst, Problem problem, int d,
                                             std::vector<Vertex> set) {
  set = detail::normalized_set(inst.graph, std::move(set));
  if (!verify_solution(inst, problem, d, set))
    throw std::invalid_argument("minimize_solution: set is not feasible");
  std::vector<Vertex> by_order = set;
  std::sort(by_order.begin(), by_order.end(), [&](Vertex a, Vertex b) {
    return inst.ordering.rank_of(a) > inst.ordering.rank_of(b);
  });
  for (Vertex v : by_order) {
    std::vector<Vertex> trial;
    for (Vertex w : set)
      if (w != v) trial.push_back(w);
    if (verify_solution(inst, problem, d, trial)) set = std::move(trial);
  }
  return set;
}

struct CutCertificate {
  LayeredDigraph digraph;
  std::vector<Vertex> solution;  // the minimal solution the cut was built from
  std::vector<NodeId> cut;
};

// Scans the solution in ordering order and picks, for each vertex, its
// lowest-level copy that still lies on a source-sink path avoiding the copies
// picked so far.
inline std::vector<NodeId> cut_from_minimal_solution(const LayeredDigraph& gp,
                                                     const CocoOrdering& ord,
                                                     std::vector<Vertex> minimal) {
  std::sort(minimal.begin(), minimal.end(),
            [&](Vertex a, Vertex b) { return ord.rank_of(a) < ord.rank_of(b); });
  std::vector<char> blocked(gp.n_nodes(), 0);
  std::vector<NodeId> cut;
  for (Vertex u : minimal) {
    auto alive = useful_nodes(gp, blocked);
    NodeId picked = -1;
    for (NodeId y : gp.copies[u]) {
      if (alive[y]) {
        picked = y;
        break;
      }
    }
    if (picked < 0) throw NotMinimal(u);
    blocked[picked] = 1;
    cut.push_back(picked);
  }
  if (!separates(gp.digraph, gp.s, gp.t, cut))
    throw std::logic_error("cut_from_solution: result is not a source-sink cut");
  return cut;
}

inline CutCertificate cut_from_solution(const Instance& inst, Problem problem, int d,
                                        std::vector<Vertex> set) {
  detail::require_threshold(d);
  if (d > inst.levels.alpha) throw ThresholdOutOfRange(d, inst.levels.alpha);
  CutCertificate cert;
  cert.solution = minimize_solution(inst, problem, d, std::move(set));
  cert.digraph = build_digraph(inst, problem, d);
  cert.cut = cut_from_minimal_solution(cert.digraph, inst.ordering, cert.solution);
  return cert;
}

// Transversal / deletion blocker of the clique number on a comparability
// graph, by solving the independence version on its complement.
inline Solution solve_clique_variant(const Graph& g, Problem problem, int d) {
  return solve(complement(g), std::nullopt, problem, d);
}

inline nlohmann::json to_json(const Solution& sol, int n) {
  nlohmann::json out = {{"problem", to_string(sol.problem)},
                        {"n", n},
                        {"alpha", sol.alpha},
                        {"d", sol.d},
                        {"feasible", sol.feasible}};
  out["min_size"] = sol.min_size ? nlohmann::json(*sol.min_size) : nlohmann::json(nullptr);
  out["solution"] = sol.vertices;
  return out;
}

// Inverse of to_json; rejects documents that do not follow the schema.
inline Solution solution_from_json(const nlohmann::json& j) {
  Solution sol;
  sol.problem = parse_problem(j.at("problem").get<std::string>());
  sol.alpha = j.at("alpha").get<int>();
  sol.d = j.at("d").get<int>();
  sol.feasible = j.at("feasible").get<bool>();
  if (!j.at("min_size").is_null()) sol.min_size = j.at("min_size").get<int>();
  sol.vertices = j.at("solution").get<std::vector<Vertex>>();
  (void)j.at("n").get<int>();
  if (sol.feasible != sol.min_size.has_value())
    throw std::invalid_argument("solution json: feasible and min_size disagree");
  if (sol.min_size && *sol.min_size != static_cast<int>(sol.vertices.size()))
    throw std::invalid_argument("solution json: min_size does not match solution");
  return sol;
}

}  // namespace cocoblock
