#include <gtest/gtest.h>

#include <random>

#include "cocoblock/graph.hpp"

using namespace cocoblock;

TEST(ParseGraph, PathOnFiveVertices) {
  Graph g = parse_graph("5 4\n0 1\n1 2\n2 3\n3 4");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.m(), 4u);
  EXPECT_EQ(g, path_graph(5));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(ParseGraph, SingleVertex) {
  Graph g = parse_graph("1 0");
  EXPECT_EQ(g.n(), 1);
  EXPECT_EQ(g.m(), 0u);
}

TEST(ParseGraph, TriangleWithComments) {
  Graph g = parse_graph("# triangle\n3 3\n0 1\n\n# middle\n1 2\n2 0\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(ParseGraph, ReportsLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("5\n"), 1);             // malformed header
  EXPECT_EQ(line_of("# c\n3 1\n0 3\n"), 3); // out of range
  EXPECT_EQ(line_of("3 2\n0 1\n1 0\n"), 3); // duplicate
  EXPECT_EQ(line_of("3 1\n2 2\n"), 2);      // self-loop
  EXPECT_EQ(line_of("3 2\n0 1\n"), 2);      // missing edge
  EXPECT_EQ(line_of("3 1\n0 1 7\n"), 2);    // junk
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3); // trailing edge
  EXPECT_EQ(line_of(""), 0);
}

TEST(Complement, CompleteAndEmpty) {
  Graph e = complement(complete_graph(3));
  EXPECT_EQ(e.n(), 3);
  EXPECT_EQ(e.m(), 0u);
  EXPECT_EQ(complement(e), complete_graph(3));
}

TEST(Complement, PathOnFive) {
  // Non-edges of P5 enumerated by pair scan.
  std::vector<Edge> expected;
  Graph p5 = path_graph(5);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v)
      if (v != u + 1) expected.emplace_back(u, v);
  ASSERT_EQ(expected, (std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}}));
  EXPECT_EQ(complement(p5).edges(), expected);
  EXPECT_EQ(complement(complement(p5)), p5);
}

TEST(InducedSubgraph, Examples) {
  Graph p5 = path_graph(5);
  auto k2 = induced_subgraph(p5, std::vector<Vertex>{3, 4});
  EXPECT_EQ(k2.graph, complete_graph(2));
  EXPECT_EQ(k2.new_to_old, (std::vector<Vertex>{3, 4}));

  auto all = induced_subgraph(p5, std::vector<Vertex>{0, 1, 2, 3, 4});
  EXPECT_EQ(all.graph, p5);
  EXPECT_EQ(all.old_to_new, (std::vector<Vertex>{0, 1, 2, 3, 4}));

  auto spread = induced_subgraph(p5, std::vector<Vertex>{0, 2, 4});
  EXPECT_EQ(spread.graph.n(), 3);
  EXPECT_EQ(spread.graph.m(), 0u);
  EXPECT_EQ(spread.old_to_new[1], -1);
}

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(v, u);  // reversed on purpose
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

}  // namespace

TEST(GraphProperties, RandomGraphs) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.4);

    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.adjacent(v, u));

    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).m() + g.m(), static_cast<std::size_t>(n * (n - 1) / 2));

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) keep.push_back(v);
    std::vector<char> in(n, 0);
    for (Vertex v : keep) in[v] = 1;
    std::size_t inside = 0;
    for (auto [u, v] : g.edges()) inside += in[u] && in[v];
    EXPECT_EQ(induced_subgraph(g, keep).graph.m(), inside);

    std::string text = serialize_graph(g);
    Graph again = parse_graph(text);
    EXPECT_EQ(again, g);
    EXPECT_EQ(serialize_graph(again), text);
  }
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}
