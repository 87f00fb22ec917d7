#include <gtest/gtest.h>

#include <random>

#include "cocoblock/ordering.hpp"
#include "cocoblock/oracle.hpp"

using namespace cocoblock;

TEST(VerifyOrdering, PathIsValid) {
  auto ord = verify_ordering(path_graph(5), {0, 1, 2, 3, 4});
  EXPECT_EQ(ord.rank(), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(ord.precedes(1, 3));
}

TEST(VerifyOrdering, CompleteGraphAnyOrder) {
  EXPECT_NO_THROW(verify_ordering(complete_graph(3), {2, 0, 1}));
}

TEST(VerifyOrdering, CycleWitness) {
  try {
    verify_ordering(cycle_graph(5), {0, 1, 2, 3, 4});
    FAIL() << "C5 accepted";
  } catch (const NotCocoOrdering& e) {
    EXPECT_EQ(e.u(), 0);
    EXPECT_EQ(e.v(), 2);
    EXPECT_EQ(e.w(), 4);
  }
}

TEST(VerifyOrdering, RejectsNonPermutation) {
  EXPECT_THROW(verify_ordering(path_graph(3), {0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(verify_ordering(path_graph(3), {0, 1}), std::invalid_argument);
  EXPECT_THROW(verify_ordering(path_graph(3), {0, 1, 3}), std::invalid_argument);
}

TEST(ComputeOrdering, Path) {
  Graph p5 = path_graph(5);
  auto ord = compute_ordering(p5);
  EXPECT_NO_THROW(verify_ordering(p5, ord.order()));
}

TEST(ComputeOrdering, EmptyGraphUsesIdOrder) {
  auto ord = compute_ordering(Graph(4, {}));
  EXPECT_EQ(ord.size(), 4);
  EXPECT_NO_THROW(verify_ordering(Graph(4, {}), ord.order()));
}

TEST(ComputeOrdering, CycleIsRejected) {
  ASSERT_FALSE(oracle::brute_is_cocomparability(cycle_graph(5)));
  try {
    compute_ordering(cycle_graph(5));
    FAIL() << "C5 accepted";
  } catch (const NotCoComparability& e) {
    // Witness arcs are complement edges.
    EXPECT_FALSE(cycle_graph(5).adjacent(e.forcing().first, e.forcing().second));
    EXPECT_FALSE(cycle_graph(5).adjacent(e.forced().first, e.forced().second));
  }
}

TEST(ComputeOrdering, DegenerateSizes) {
  EXPECT_EQ(compute_ordering(Graph(0, {})).size(), 0);
  EXPECT_EQ(compute_ordering(Graph(1, {})).order(), (std::vector<Vertex>{0}));
}

TEST(ComputeOrdering, Deterministic) {
  auto inst = oracle::gen_cocomparability(9, 0.5, 11);
  EXPECT_EQ(compute_ordering(inst.graph).order(), compute_ordering(inst.graph).order());
}

namespace {

bool recognizes(const Graph& g) {
  try {
    auto ord = compute_ordering(g);
    verify_ordering(g, ord.order());
    return true;
  } catch (const NotCoComparability&) {
    return false;
  }
}

void expect_property_two(const Graph& g, const CocoOrdering& ord) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v)
      for (Vertex w = 0; w < g.n(); ++w) {
        if (u == v || v == w || u == w || !ord.precedes(v, w)) continue;
        if (!g.adjacent(u, v) && !g.adjacent(v, w) && g.adjacent(u, w)) {
          EXPECT_TRUE(ord.precedes(v, u)) << u << ' ' << v << ' ' << w;
        }
      }
}

}  // namespace

TEST(ComputeOrdering, MatchesExhaustiveSearchOnAllSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      Graph g(n, edges);
      ASSERT_EQ(recognizes(g), oracle::brute_is_cocomparability(g)) << serialize_graph(g);
    }
  }
}

TEST(ComputeOrdering, MatchesExhaustiveSearchOnRandomGraphs) {
  std::mt19937 rng(5);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 6 + trial % 3;
    Graph g;
    if (trial % 2 == 0) {
      // Perturb a co-comparability graph so both outcomes occur.
      auto base = oracle::gen_cocomparability(n, 0.3 + 0.1 * (trial % 5), rng());
      std::vector<Edge> edges = base.graph.edges();
      Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
      if (a != b) {
        Edge e{std::min(a, b), std::max(a, b)};
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end())
          edges.push_back(e);
        else
          edges.erase(it);
      }
      g = Graph(n, edges);
    } else {
      std::bernoulli_distribution coin(0.5);
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      g = Graph(n, edges);
    }
    bool expected = oracle::brute_is_cocomparability(g);
    accepted += expected;
    ASSERT_EQ(recognizes(g), expected) << serialize_graph(g);
  }
  EXPECT_GT(accepted, 20);
  EXPECT_LT(accepted, 280);
}

TEST(ComputeOrdering, PropertyTwoOnGeneratedGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = oracle::gen_cocomparability(8, 0.2 + 0.006 * seed, seed);
    expect_property_two(inst.graph, inst.ordering);
    auto ord = compute_ordering(inst.graph);
    expect_property_two(inst.graph, ord);
  }
}
