#pragma once

#include <functional>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocoblock/graph.hpp"

namespace cocoblock {

// A vertex ordering in which non-adjacency is transitive: u < v < w with
// uv, vw non-edges implies uw is a non-edge.
class CocoOrdering {
 public:
  CocoOrdering() = default;

  const std::vector<Vertex>& order() const noexcept { return order_; }
  const std::vector<int>& rank() const noexcept { return rank_; }
  int size() const noexcept { return static_cast<int>(order_.size()); }
  Vertex at(int i) const { return order_[i]; }
  int rank_of(Vertex v) const { return rank_[v]; }
  bool precedes(Vertex u, Vertex v) const { return rank_[u] < rank_[v]; }

 private:
  friend CocoOrdering verify_ordering(const Graph&, std::vector<Vertex>);
  std::vector<Vertex> order_;
  std::vector<int> rank_;
};

class NotCocoOrdering : public std::runtime_error {
 public:
  NotCocoOrdering(Vertex u, Vertex v, Vertex w)
      : std::runtime_error("not a co-comparability ordering: " + std::to_string(u) + " < " +
                           std::to_string(v) + " < " + std::to_string(w) + " with " +
                           std::to_string(u) + "-" + std::to_string(w) + " adjacent"),
        u_(u), v_(v), w_(w) {}
  Vertex u() const noexcept { return u_; }
  Vertex v() const noexcept { return v_; }
  Vertex w() const noexcept { return w_; }

 private:
  Vertex u_, v_, w_;
};

// Both arcs of the witness lie in the complement; orienting the first forces
// the reverse of the second.
class NotCoComparability : public std::runtime_error {
 public:
  NotCoComparability(Edge forcing, Edge forced)
      : std::runtime_error("complement is not transitively orientable: orienting " +
                           std::to_string(forcing.first) + "->" + std::to_string(forcing.second) +
                           " forces " + std::to_string(forced.first) + "->" +
                           std::to_string(forced.second) + ", which was already reversed"),
        forcing_(forcing), forced_(forced) {}
  Edge forcing() const noexcept { return forcing_; }
  Edge forced() const noexcept { return forced_; }

 private:
  Edge forcing_, forced_;
};

inline CocoOrdering verify_ordering(const Graph& g, std::vector<Vertex> order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("ordering has " + std::to_string(order.size()) +
                                " entries, graph has " + std::to_string(n) + " vertices");
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= n || rank[v] != -1)
      throw std::invalid_argument("ordering is not a permutation of 0..n-1");
    rank[v] = i;
  }
  // For each middle vertex, pair every earlier non-neighbour with every later one.
  std::vector<Vertex> before, after;
  for (int j = 0; j < n; ++j) {
    Vertex v = order[j];
    before.clear();
    after.clear();
    for (int i = 0; i < j; ++i)
      if (!g.adjacent(order[i], v)) before.push_back(order[i]);
    for (int k = j + 1; k < n; ++k)
      if (!g.adjacent(v, order[k])) after.push_back(order[k]);
    for (Vertex u : before)
      for (Vertex w : after)
        if (g.adjacent(u, w)) throw NotCocoOrdering(u, v, w);
  }
  CocoOrdering out;
  out.order_ = std::move(order);
  out.rank_ = std::move(rank);
  return out;
}

// Transitively orients the complement by implication-class decomposition,
// re-checks the orientation, then sorts topologically (smallest id first on ties).
inline CocoOrdering compute_ordering(const Graph& g) {
  const int n = g.n();
  const auto N = static_cast<std::size_t>(n);
  // Complement edge state: 0 not an edge, 1 unassigned, 2 in the class being
  // built, 3 assigned to an earlier class (removed).
  enum : unsigned char { kNone = 0, kFree = 1, kCurrent = 2, kDone = 3 };
  std::vector<unsigned char> state(N * N, kNone);
  std::vector<unsigned char> arc(N * N, 0);  // arc[a*n+b] == 1 means a -> b
  auto at = [N](Vertex a, Vertex b) { return static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b); };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) state[at(u, v)] = state[at(v, u)] = kFree;

  std::vector<std::vector<Vertex>> cobrs(N);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) cobrs[u].push_back(v);

  auto live = [&](Vertex a, Vertex b) {
    auto s = state[at(a, b)];
    return s == kFree || s == kCurrent;
  };

  std::vector<Edge> queue;
  std::vector<Edge> members;
  for (Vertex a0 = 0; a0 < n; ++a0) {
    for (Vertex b0 : cobrs[a0]) {
      if (state[at(a0, b0)] != kFree) continue;
      queue.clear();
      members.clear();
      Edge forcing{a0, b0};
      auto force = [&](Vertex a, Vertex b) {
        if (state[at(a, b)] == kCurrent) {
          if (!arc[at(a, b)]) throw NotCoComparability(forcing, {a, b});
          return;
        }
        state[at(a, b)] = state[at(b, a)] = kCurrent;
        arc[at(a, b)] = 1;
        queue.emplace_back(a, b);
        members.emplace_back(a, b);
      };
      force(a0, b0);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [a, b] = queue[head];
        forcing = {a, b};
        // a->b forces a->c when ac is live and bc is not, and c->b when cb is
        // live and ac is not.
        for (Vertex c : cobrs[a])
          if (c != b && live(a, c) && !live(b, c)) force(a, c);
        for (Vertex c : cobrs[b])
          if (c != a && live(c, b) && !live(a, c)) force(c, b);
      }
      for (auto [a, b] : members) state[at(a, b)] = state[at(b, a)] = kDone;
    }
  }

  // Transitivity check: a->b, b->c must imply a->c.
  std::vector<std::vector<Vertex>> out(N);
  std::vector<int> indeg(N, 0);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : cobrs[a])
      if (arc[at(a, b)]) {
        out[a].push_back(b);
        ++indeg[b];
      }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : out[a])
      for (Vertex c : out[b])
        if (!arc[at(a, c)]) throw NotCoComparability({a, b}, {b, c});

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<Vertex> order;
  order.reserve(N);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::logic_error("compute_ordering: orientation has a cycle");
  return verify_ordering(g, std::move(order));
}

// One line of n whitespace-separated vertex ids.
inline std::vector<Vertex> parse_ordering(std::istream& in) {
  std::vector<Vertex> order;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream iss(line);
    long long v;
    while (iss >> v) order.push_back(static_cast<Vertex>(v));
    if (!iss.eof()) throw ParseError(lineno, "malformed ordering");
    break;
  }
  return order;
}

inline std::vector<Vertex> parse_ordering(const std::string& text) {
  std::istringstream iss(text);
  return parse_ordering(iss);
}

inline std::string serialize_ordering(const CocoOrdering& ord) {
  std::ostringstream oss;
  for (int i = 0; i < ord.size(); ++i) oss << (i ? " " : "") << ord.at(i);
  oss << '\n';
  return oss.str();
}

}  // namespace cocoblock
