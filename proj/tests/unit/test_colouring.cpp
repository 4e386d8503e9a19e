#include <gtest/gtest.h>

#include "chromadist/colouring.hpp"
#include "chromadist/error.hpp"
#include "chromadist/generators.hpp"

using namespace chromadist;

TEST(Palette, SetsSumsAndSymmetricDifference) {
  // Star centred at 0 with leaves 1..3; edge ids 0..2.
  const Graph s = gen_classic(ClassicKind::Star, 4);
  const EdgeColouring c({3, 1, 2});
  EXPECT_EQ(palette(s, c, 0), (ColourSet{1, 2, 3}));
  EXPECT_EQ(palette(s, c, 1), (ColourSet{3}));
  EXPECT_EQ(colour_sum(s, c, 0), 6u);
  EXPECT_EQ(symmetric_difference_size(s, c, 0, 1), 2u);
  EXPECT_EQ(symmetric_difference_size(s, c, 1, 2), 2u);
  EXPECT_THROW(symmetric_difference_size(s, c, 1, 1), Error);
  EXPECT_EQ(symmetric_difference_size(ColourSet{1, 2, 5}, ColourSet{2, 3}), 3u);
}

TEST(Palette, PartialColouringIgnoresUncolouredEdges) {
  const Graph p = gen_classic(ClassicKind::Path, 4);
  PartialColouring c(p.edge_count());
  c.set(0, 2);
  c.set(2, 2);
  EXPECT_FALSE(c.complete());
  EXPECT_EQ(c.uncoloured(), std::vector<EdgeId>{1});
  EXPECT_EQ(c.uncoloured_at(p, 1), std::vector<EdgeId>{1});
  EXPECT_EQ(c.coloured_degree(p, 1), 1u);
  EXPECT_TRUE(is_proper(p, c).proper);
  EXPECT_TRUE(palette(p, c, 1) == palette(p, c, 2));
  EXPECT_THROW(EdgeColouring::from_partial(c), Error);
}

TEST(Proper, DetectsClashAtSharedVertex) {
  const Graph p = gen_classic(ClassicKind::Path, 3);
  const auto bad = is_proper(p, EdgeColouring({4, 4}));
  EXPECT_FALSE(bad.proper);
  ASSERT_TRUE(bad.violation);
  EXPECT_TRUE(is_proper(p, EdgeColouring({4, 5})).proper);
  EXPECT_THROW(EdgeColouring({1, 0}), Error);
}

TEST(Colouring, CountsDistinctColours) {
  const EdgeColouring c({5, 1, 5, 9});
  EXPECT_EQ(c.colour_count(), 3u);
  EXPECT_EQ(c.max_colour(), 9u);
  const std::vector<Colour> partial{0, 2, 2, 0};
  EXPECT_EQ(distinct_colours(partial), 1u);
}
