#include <gtest/gtest.h>

#include <random>

#include "chromadist/error.hpp"
#include "chromadist/generators.hpp"
#include "chromadist/verify.hpp"
#include "oracle.hpp"

using namespace chromadist;

TEST(Verify, AgreesWithDefinitionalCheckerOnRandomTriples) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.3 * (trial % 3));
    // A small palette forces coincidences; a large one makes them rare.
    const auto palette = static_cast<std::uint32_t>(std::max<std::size_t>(1, 2 * g.max_degree() - 1) + trial % 4);
    const auto colours = oracle::random_proper_colouring(g, rng, palette);
    const auto r = static_cast<std::uint32_t>(1 + rng() % 4);
    const auto report = verify_distinguishing(g, EdgeColouring(colours), r);
    const auto expected = oracle::conflicts(g, colours, r);
    ASSERT_TRUE(report.proper);
    ASSERT_EQ(report.conflict_count, expected.size()) << "trial " << trial;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(report.conflicts[i].u, expected[i].first);
      EXPECT_EQ(report.conflicts[i].v, expected[i].second);
    }
  }
}

TEST(Verify, ReportsPaletteAndDistance) {
  // C4 coloured 1,2,1,2: opposite corners 0 and 2 both see {1, 2}.
  const Graph c4 = gen_classic(ClassicKind::Cycle, 4);
  const auto report = verify_distinguishing(c4, EdgeColouring({1, 2, 1, 2}), 2);
  EXPECT_TRUE(report.proper);
  EXPECT_FALSE(report.distinguishing());
  EXPECT_EQ(report.conflict_count, 6u);
  const auto r1 = verify_distinguishing(c4, EdgeColouring({1, 2, 1, 2}), 1);
  EXPECT_EQ(r1.conflict_count, 4u);
  EXPECT_EQ(r1.conflicts.front().dist, 1u);
  EXPECT_EQ(r1.conflicts.front().palette, (ColourSet{1, 2}));
  EXPECT_EQ(r1.colours_used, 2u);
}

TEST(Verify, ImproperColouringIsFlagged) {
  const Graph p = gen_classic(ClassicKind::Path, 3);
  const auto report = verify_distinguishing(p, EdgeColouring({1, 1}), 1);
  EXPECT_FALSE(report.proper);
  EXPECT_TRUE(report.proper_violation);
}

TEST(Verify, IsolatedEdgesAreListed) {
  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {2, 3}, {3, 4}};
  const Graph g(5, edges);
  const auto report = verify_distinguishing(g, EdgeColouring({1, 1, 2}), 1);
  EXPECT_EQ(report.isolated_edges, std::vector<EdgeId>{0});
  EXPECT_FALSE(report.distinguishing());
}

TEST(Verify, ListingCapKeepsTheCount) {
  const Graph c4 = gen_classic(ClassicKind::Cycle, 4);
  const auto report = verify_distinguishing(c4, EdgeColouring({1, 2, 1, 2}), 2, VerifyOptions{2});
  EXPECT_EQ(report.conflicts.size(), 2u);
  EXPECT_EQ(report.conflict_count, 6u);
}
