#include <gtest/gtest.h>

#include "chromadist/generators.hpp"
#include "chromadist/lll/census.hpp"

using namespace chromadist;
using namespace chromadist::lll;

TEST(Census, RowsAreFixedAndCountsConsistent) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 60, 10, 2);
  const auto params = make_dense_params(g, 1, Epsilon::of(1, 1), 3);
  const auto rows = event_census(g, params, 20, 3);
  const std::vector<std::string> kinds{"R_density", "LU_density",   "AR_density",  "DenseA_v",
                                       "DenseA_uv", "StageTwoA_uS", "StageTwoB_uv"};
  ASSERT_EQ(rows.size(), kinds.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].kind, kinds[i]);
    EXPECT_EQ(rows[i].trials, 20u);
    EXPECT_LE(rows[i].violations, rows[i].instances);
    if (rows[i].instances > 0) {
      EXPECT_DOUBLE_EQ(rows[i].frequency,
                       static_cast<double>(rows[i].violations) / static_cast<double>(rows[i].instances));
    }
    EXPECT_GT(rows[i].target_bound, 0.0);
  }
  // One instance per vertex and trial for vertex events.
  EXPECT_EQ(rows[3].instances, 20u * g.vertex_count());
}

TEST(Census, ThreadCountDoesNotChangeResults) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 60, 10, 2);
  const auto params = make_dense_params(g, 2, Epsilon::of(1, 1), 3);
  const auto one = event_census(g, params, 12, 9, 1);
  const auto four = event_census(g, params, 12, 9, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].violations, four[i].violations);
    EXPECT_EQ(one[i].instances, four[i].instances);
  }
}

TEST(Census, NeedsTrials) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 20, 4, 2);
  EXPECT_THROW(event_census(g, make_dense_params(g, 1, Epsilon::of(1, 1), 0), 0, 0), std::exception);
}
