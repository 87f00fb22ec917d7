#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cocoblock {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Raised by parse_graph; line() is 1-based and refers to the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicates and out-of-range ids.
  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n)),
        matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("vertex id out of range");
      if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      auto& cell = matrix_[index(u, v)];
      if (cell) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
      }
      cell = 1;
      matrix_[index(v, u)] = 1;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return u != v && matrix_[index(u, v)] != 0;
  }

  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }

  // Sorted lexicographically, u < v in every pair.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<unsigned char> matrix_;
};

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), std::move(edges));
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> new_to_old;
  std::vector<Vertex> old_to_new;  // -1 for dropped vertices
};

// Keeps the relative order of the kept vertices; duplicates in keep are ignored.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<char> keep_mask(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    keep_mask[v] = 1;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!keep_mask[v]) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (keep_mask[u] && keep_mask[v]) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), std::move(edges));
  return out;
}

inline InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> drop(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("remove_vertices: vertex out of range");
    drop[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

namespace detail {

// Returns false on end of input. Skips blank lines and '#' comments.
inline bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

inline bool only_whitespace_left(std::istringstream& iss) {
  std::string rest;
  return !(iss >> rest);
}

}  // namespace detail

// Edge-list format: "n m" header followed by m lines "u v".
inline Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_data_line(in, line, lineno)) throw ParseError(lineno, "missing header");
  long long n = -1, m = -1;
  {
    std::istringstream iss(line);
    if (!(iss >> n >> m) || !detail::only_whitespace_left(iss) || n < 0 || m < 0)
      throw ParseError(lineno, "malformed header, expected \"n m\"");
  }
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_data_line(in, line, lineno))
      throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                   std::to_string(i));
    std::istringstream iss(line);
    long long u = -1, v = -1;
    if (!(iss >> u >> v) || !detail::only_whitespace_left(iss))
      throw ParseError(lineno, "malformed edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
    auto a = static_cast<Vertex>(std::min(u, v));
    auto b = static_cast<Vertex>(std::max(u, v));
    auto& row = seen[a];
    if (std::find(row.begin(), row.end(), b) != row.end())
      throw ParseError(lineno, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    row.push_back(b);
    edges.emplace_back(a, b);
  }
  if (detail::next_data_line(in, line, lineno))
    throw ParseError(lineno, "trailing data after " + std::to_string(m) + " edges");
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream iss(text);
  return parse_graph(iss);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream oss;
  write_graph(oss, g);
  return oss.str();
}

// Handy constructors for tests and examples.
inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

}  // namespace cocoblock
