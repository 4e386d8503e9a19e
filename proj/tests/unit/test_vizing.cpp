#include <gtest/gtest.h>

#include <random>

#include "chromadist/error.hpp"
#include "chromadist/generators.hpp"
#include "chromadist/vizing.hpp"
#include "oracle.hpp"

using namespace chromadist;

TEST(Vizing, ProperWithDeltaPlusOneOnRandomGraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 39, 0.05 + 0.1 * (trial % 8));
    const auto c = vizing_colour(g, ColourBlock::range(1, g.max_degree() + 1));
    const std::vector<Colour> colours(c.assignment().begin(), c.assignment().end());
    ASSERT_TRUE(oracle::proper(g, colours)) << "trial " << trial;
    ASSERT_LE(c.max_colour(), g.max_degree() + 1);
  }
}

TEST(Vizing, UsesExactlyTheBlockColours) {
  const Graph k = gen_classic(ClassicKind::Complete, 7);
  const ColourBlock block(std::vector<Colour>{40, 11, 7, 90, 3, 15, 22});
  const auto c = vizing_colour(k, block);
  for (Colour x : c.assignment()) {
    EXPECT_NE(std::find(block.colours().begin(), block.colours().end(), x), block.colours().end());
  }
  EXPECT_TRUE(is_proper(k, c).proper);
}

TEST(Vizing, SubgraphLeavesOtherEdgesAlone) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 50, 6, 4);
  std::vector<EdgeId> half;
  for (EdgeId e = 0; e < g.edge_count(); e += 2) half.push_back(e);
  const std::size_t need = subset_max_degree(g, half) + 1;
  const auto assignment = vizing_on_subgraph(g, half, ColourBlock::range(100, need));
  ASSERT_EQ(assignment.size(), half.size());
  std::vector<Colour> colours(g.edge_count(), 0);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    EXPECT_EQ(assignment[i].first, half[i]);
    colours[assignment[i].first] = assignment[i].second;
  }
  EXPECT_TRUE(oracle::proper(g, colours));
}

TEST(Vizing, ExtendPartialKeepsColouredEdges) {
  std::mt19937_64 rng(5);
  const Graph g = gen_classic(ClassicKind::RandomRegular, 60, 8, 6);
  auto colours = oracle::random_proper_colouring(g, rng, 2 * 8 - 1);
  for (std::size_t e = 0; e < colours.size(); e += 3) colours[e] = kNoColour;
  const PartialColouring partial(colours);
  std::size_t max_u = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) max_u = std::max(max_u, partial.uncoloured_at(g, v).size());
  const auto full = extend_partial(g, partial, ColourBlock::range(100, max_u + 1));
  for (std::size_t e = 0; e < colours.size(); ++e) {
    if (colours[e] != kNoColour) {
      EXPECT_EQ(full[e], colours[e]);
    } else {
      EXPECT_GE(full[e], 100u);
    }
  }
  EXPECT_TRUE(is_proper(g, full).proper);
}

TEST(Vizing, BlockErrors) {
  const Graph k4 = gen_classic(ClassicKind::Complete, 4);
  try {
    vizing_colour(k4, ColourBlock::range(1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BlockTooSmall);
  }
  PartialColouring partial(k4.edge_count());
  partial.set(0, 2);
  try {
    extend_partial(k4, partial, ColourBlock::range(1, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BlockNotDisjoint);
  }
  EXPECT_THROW(ColourBlock(std::vector<Colour>{1, 1}), Error);
  EXPECT_THROW(ColourBlock(std::vector<Colour>{0, 1}), Error);
}
