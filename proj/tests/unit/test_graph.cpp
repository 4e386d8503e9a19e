#include <gtest/gtest.h>

#include <random>

#include "chromadist/distance.hpp"
#include "chromadist/error.hpp"
#include "chromadist/generators.hpp"
#include "oracle.hpp"

using namespace chromadist;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Graph, RejectsMalformedEdgeSets) {
  using E = std::vector<std::pair<VertexId, VertexId>>;
  EXPECT_EQ(code_of([] { Graph(3, E{{1, 1}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { Graph(3, E{{0, 1}, {1, 0}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { Graph(3, E{}); }), ErrorCode::EmptyGraph);
  EXPECT_EQ(code_of([] { Graph(3, E{{0, 3}}); }), ErrorCode::InvalidVertex);
}

TEST(Graph, AdjacencyIsSortedAndEdgeIdsFollowInput) {
  const std::vector<std::pair<VertexId, VertexId>> edges{{2, 0}, {0, 1}, {3, 0}};
  const Graph g(4, edges);
  ASSERT_EQ(g.degree(0), 3u);
  const auto inc = g.incident(0);
  EXPECT_EQ(inc[0].neighbour, 1u);
  EXPECT_EQ(inc[1].neighbour, 2u);
  EXPECT_EQ(inc[2].neighbour, 3u);
  EXPECT_EQ(g.find_edge(0, 2), 0u);
  EXPECT_EQ(g.find_edge(1, 0), 1u);
  EXPECT_EQ(g.find_edge(1, 2), Graph::kNoEdge);
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_EQ(g.min_degree(), 1u);
}

TEST(Graph, IsolatedEdgesAreK2Components) {
  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {2, 3}, {3, 4}};
  const Graph g(6, edges);
  EXPECT_EQ(g.isolated_edges(), std::vector<EdgeId>{0});
}

TEST(Distance, BfsMatchesFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 25;
    const Graph g = oracle::random_graph(rng, n, 0.15);
    const auto d = oracle::apsp(g);
    for (VertexId u = 0; u < n; ++u) {
      const auto row = bfs_distances(g, u);
      for (VertexId v = 0; v < n; ++v) {
        const auto expected = d[u][v] == oracle::kInf ? kUnreachable : d[u][v];
        ASSERT_EQ(row[v], expected) << "trial " << trial << " pair " << u << "," << v;
      }
    }
  }
}

TEST(Distance, TruncatedBfsStopsAtDepth) {
  const Graph p = gen_classic(ClassicKind::Path, 6);
  const auto d = bfs_distances(p, 0, 2);
  EXPECT_EQ(d[2], 2u);
  EXPECT_EQ(d[3], kUnreachable);
}

TEST(Distance, RAdjacentPairsMatchOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 18, 0.2);
    const auto d = oracle::apsp(g);
    for (std::uint32_t r = 1; r <= 3; ++r) {
      std::vector<RAdjacentPair> expected;
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
          if (d[u][v] >= 1 && d[u][v] <= r) expected.push_back({u, v, d[u][v]});
        }
      }
      ASSERT_EQ(r_adjacent_pairs(g, r), expected);
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        std::vector<VertexId> nb;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (d[u][v] >= 1 && d[u][v] <= r) nb.push_back(v);
        }
        ASSERT_EQ(r_neighbours(g, u, r), nb);
      }
    }
  }
}

TEST(Distance, DiameterAndConnectivity) {
  EXPECT_EQ(diameter(gen_classic(ClassicKind::Cycle, 7)), 3u);
  EXPECT_EQ(diameter(gen_classic(ClassicKind::Complete, 5)), 1u);
  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {2, 3}};
  const Graph two(4, edges);
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(diameter(two), kUnreachable);
  EXPECT_EQ(distance(two, 0, 3), kUnreachable);
}
