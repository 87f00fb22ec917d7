#include <gtest/gtest.h>

#include "cocoblock/layers.hpp"
#include "test_support.hpp"

using namespace cocoblock;
using cocoblock::testing::sample_sweep;

namespace {

CocoOrdering identity(const Graph& g) {
  std::vector<Vertex> order(g.n());
  for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
  return verify_ordering(g, order);
}

}  // namespace

TEST(BuildLevels, PathOnFive) {
  Graph p5 = path_graph(5);
  auto ls = build_levels(p5, identity(p5));
  EXPECT_EQ(ls.leftext, (std::vector<int>{0, 0, 1, 1, 2}));
  EXPECT_EQ(ls.rightext, (std::vector<int>{2, 1, 1, 0, 0}));
  EXPECT_EQ(ls.alpha, 3);
  EXPECT_EQ(ls.pos, (std::vector<int>{1, 1, 2, 2, 3}));
  EXPECT_EQ(ls.beta, (std::vector<int>{3, 2, 3, 2, 3}));
  EXPECT_EQ(ls.i_max, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(std::vector<Vertex>(ls.layer(1, 2).begin(), ls.layer(1, 2).end()), std::vector<Vertex>{1});
  EXPECT_EQ(std::vector<Vertex>(ls.layer(2, 2).begin(), ls.layer(2, 2).end()), std::vector<Vertex>{3});
  EXPECT_TRUE(ls.layer(3, 2).empty());
  // Oracle cross-check of the frozen values.
  for (Vertex v = 0; v < 5; ++v) { EXPECT_EQ(ls.beta[v], oracle::brute_beta(p5, v)); }
  EXPECT_EQ(oracle::all_maximum_independent_sets(p5), (std::vector<std::vector<Vertex>>{{0, 2, 4}}));
}

TEST(BuildLevels, Triangle) {
  Graph k3 = complete_graph(3);
  auto ls = build_levels(k3, identity(k3));
  EXPECT_EQ(ls.alpha, 1);
  EXPECT_EQ(ls.layer(1, 1).size(), 3u);
}

TEST(BuildLevels, EmptyGraphSingletonLayers) {
  Graph e(4, {});
  auto ord = verify_ordering(e, {2, 0, 3, 1});
  auto ls = build_levels(e, ord);
  EXPECT_EQ(ls.alpha, 4);
  for (Vertex v = 0; v < 4; ++v) { EXPECT_EQ(ls.pos[v], ord.rank_of(v) + 1); }
  for (int p = 1; p <= 4; ++p) { EXPECT_EQ(ls.layer(p, 4).size(), 1u); }
}

TEST(BuildLevels, DegenerateSizes) {
  auto ls0 = build_levels(Graph(0, {}), identity(Graph(0, {})));
  EXPECT_EQ(ls0.alpha, 0);
  EXPECT_TRUE(ls0.i_max.empty());
  EXPECT_TRUE(ls0.layer(1, 1).empty());
  auto ls1 = build_levels(Graph(1, {}), identity(Graph(1, {})));
  EXPECT_EQ(ls1.alpha, 1);
  EXPECT_EQ(ls1.i_max, std::vector<Vertex>{0});
}

TEST(DumpLevels, PathOnFive) {
  Graph p5 = path_graph(5);
  auto ord = identity(p5);
  EXPECT_EQ(dump_levels(build_levels(p5, ord), ord),
            "0 1 3 0 2\n1 1 2 0 1\n2 2 3 1 1\n3 2 2 1 0\n4 3 3 2 0\n");
}

TEST(NonEdgeDag, PathOnFive) {
  Graph p5 = path_graph(5);
  auto dag = build_nonedge_dag(p5, identity(p5));
  EXPECT_EQ(dag.longest(0, 4), 3);
  EXPECT_EQ(dag.longest(0, 2), 2);
  EXPECT_EQ(dag.longest(0, 1), 0);
  EXPECT_EQ(dag.longest(4, 0), 0);
}

TEST(NonEdgeDag, TriangleHasNoChains) {
  Graph k3 = complete_graph(3);
  auto dag = build_nonedge_dag(k3, identity(k3));
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) { EXPECT_EQ(dag.longest(u, v), 0); }
}

TEST(PairMaxExtendable, PathOnFive) {
  Graph p5 = path_graph(5);
  auto ord = identity(p5);
  auto ls = build_levels(p5, ord);
  auto dag = build_nonedge_dag(p5, ord);
  EXPECT_TRUE(pair_max_extendable(ls, dag, 0, 4));
  EXPECT_TRUE(pair_max_extendable(ls, dag, 4, 0));
  EXPECT_FALSE(pair_max_extendable(ls, dag, 1, 3));
  EXPECT_TRUE(pair_max_extendable(ls, dag, 0, 0));
  EXPECT_FALSE(pair_max_extendable(ls, dag, 1, 1));
  EXPECT_FALSE(pair_max_extendable(ls, dag, 0, 1));
}

// Exhaustive checks against enumeration on generated graphs up to 10 vertices.
TEST(LevelsOracle, MatchesEnumeration) {
  for (const auto& sample : sample_sweep(4, 10)) {
    const Graph& g = sample.inst.graph;
    const auto& ord = sample.inst.ordering;
    auto ls = build_levels(g, ord);
    auto dag = build_nonedge_dag(g, ord);
    SCOPED_TRACE(serialize_graph(g));
    ASSERT_EQ(ls.alpha, oracle::brute_alpha(g));

    for (Vertex v = 0; v < g.n(); ++v) {
      ASSERT_EQ(ls.beta[v], oracle::brute_beta(g, v));
      ASSERT_EQ(ls.leftext[v], ls.pos[v] - 1);
      ASSERT_EQ(ls.rightext[v], ls.beta[v] - ls.pos[v]);
      ASSERT_LE(1, ls.pos[v]);
      ASSERT_LE(ls.pos[v], ls.beta[v]);
      ASSERT_LE(ls.beta[v], ls.alpha);
    }
    // Position is the same inside every largest set through v.
    for (int b = 1; b <= ls.alpha; ++b)
      for (const auto& set : oracle::enumerate_independent_sets(g, b)) {
        std::vector<Vertex> sorted = set;
        std::sort(sorted.begin(), sorted.end(),
                  [&](Vertex a, Vertex c) { return ord.precedes(a, c); });
        for (int i = 0; i < b; ++i)
          if (ls.beta[sorted[i]] == b) { ASSERT_EQ(ls.pos[sorted[i]], i + 1); }
      }

    // Layers partition V.
    std::vector<int> hits(g.n(), 0);
    for (int b = 1; b <= ls.alpha; ++b)
      for (int p = 1; p <= b; ++p)
        for (Vertex v : ls.layer(p, b)) {
          ++hits[v];
          ASSERT_EQ(ls.pos[v], p);
          ASSERT_EQ(ls.beta[v], b);
        }
    for (int h : hits) { ASSERT_EQ(h, 1); }

    // Generalised clique property (includes L(p, alpha) being a clique).
    for (Vertex v = 0; v < g.n(); ++v)
      for (int j = ls.beta[v]; j <= ls.alpha; ++j)
        for (int i = 0; i <= j - ls.beta[v]; ++i)
          for (Vertex u : ls.layer(ls.pos[v] + i, j))
            if (u != v) { ASSERT_TRUE(g.adjacent(u, v)) << u << " " << v; }

    // Ordering agrees with positions on non-adjacent pairs.
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v = 0; v < g.n(); ++v)
        if (u != v && !g.adjacent(u, v)) { ASSERT_EQ(ls.pos[u] < ls.pos[v], ord.precedes(u, v)); }

    // Pair predicate versus the list of maximum independent sets.
    auto mis = oracle::all_maximum_independent_sets(g);
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v = 0; v < g.n(); ++v) {
        bool expected = std::any_of(mis.begin(), mis.end(), [&](const auto& set) {
          return std::count(set.begin(), set.end(), u) && std::count(set.begin(), set.end(), v);
        });
        ASSERT_EQ(pair_max_extendable(ls, dag, u, v), expected) << u << " " << v;
      }
  }
}

// longest(u, v) against a chain enumeration that walks every increasing
// sequence of non-adjacent consecutive vertices.
TEST(NonEdgeDagOracle, MatchesChainEnumeration) {
  for (const auto& sample : sample_sweep(2, 9, 77)) {
    const Graph& g = sample.inst.graph;
    const auto& ord = sample.inst.ordering;
    auto dag = build_nonedge_dag(g, ord);
    const int n = g.n();
    std::vector<int> best(n * n, 0);
    std::vector<Vertex> chain;
    auto extend = [&](auto& self, int from_rank) -> void {
      Vertex last = chain.back();
      if (chain.size() >= 2) {
        int& cell = best[chain.front() * n + last];
        cell = std::max<int>(cell, static_cast<int>(chain.size()));
      }
      for (int r = from_rank; r < n; ++r) {
        Vertex w = ord.at(r);
        if (g.adjacent(last, w)) continue;
        chain.push_back(w);
        self(self, r + 1);
        chain.pop_back();
      }
    };
    for (int r = 0; r < n; ++r) {
      chain = {ord.at(r)};
      extend(extend, r + 1);
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(dag.longest(u, v), best[u * n + v]);
        if (u != v && !g.adjacent(u, v) && ord.precedes(u, v)) { ASSERT_GE(dag.longest(u, v), 2); }
      }
  }
}
