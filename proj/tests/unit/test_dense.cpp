#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chromadist/distance.hpp"
#include "chromadist/error.hpp"
#include "chromadist/generators.hpp"
#include "chromadist/lll/dense.hpp"
#include "chromadist/verify.hpp"
#include "chromadist/vizing.hpp"
#include "oracle.hpp"

using namespace chromadist;
using namespace chromadist::lll;

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

// Stage-one classes straight from their definitions.
struct Classes {
  std::vector<std::uint32_t> u, uc;
  std::vector<char> R, LU, AR, L;
};

Classes reference_classes(const Graph& g, const std::vector<char>& flips, std::size_t threshold, std::size_t low) {
  const std::size_t n = g.vertex_count();
  Classes k{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n), std::vector<char>(n),
            std::vector<char>(n), std::vector<char>(n), std::vector<char>(n)};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (flips[e]) ++k.u[g.edge(e).u], ++k.u[g.edge(e).v];
  }
  for (std::size_t v = 0; v < n; ++v) k.R[v] = k.u[v] > threshold;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = std::pair(g.edge(e).u, g.edge(e).v);
    if (!flips[e]) continue;
    if (k.R[a]) k.AR[b] = 1;
    if (k.R[b]) k.AR[a] = 1;
    if (!k.R[a] && !k.R[b]) ++k.uc[a], ++k.uc[b];
  }
  for (std::size_t v = 0; v < n; ++v) {
    k.LU[v] = k.u[v] < low;
    k.L[v] = k.uc[v] < low;
  }
  return k;
}

}  // namespace

TEST(DenseParams, FormulasAtEpsilonOne) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 40, 8, 1);
  const auto p = make_dense_params(g, 1, Epsilon::of(1, 1), 5);
  EXPECT_TRUE(p.p_clamped);  // 105 / 8 > 1
  EXPECT_DOUBLE_EQ(p.p_uncolour, 1.0);
  EXPECT_EQ(p.recover_threshold, 207u);
  EXPECT_EQ(p.low_threshold, 18u);
  EXPECT_EQ(p.stage_two_count, 6u);
  EXPECT_EQ(p.sym_diff_target, 12u);
  EXPECT_EQ(p.fresh_block_size(), 213u);
  EXPECT_EQ(p.colour_bound(), 8u + 1 + 213);
  EXPECT_EQ(p.max_resamples, 50u * g.edge_count());
  // L-density cap eps^2 Delta / (10 r) = 0.8: one L-neighbour already exceeds it.
  EXPECT_FALSE(p.exceeds_l_density(0));
  EXPECT_TRUE(p.exceeds_l_density(1));
}

TEST(DenseParams, FormulasAtSmallerEpsilon) {
  const Graph g = gen_classic(ClassicKind::PathPower, 300, 100);
  const auto p = make_dense_params(g, 2, Epsilon::parse("1/2"), 5, 17);
  // p = (5r+100) / (eps^2 Delta) = 110 * 4 / 200
  EXPECT_TRUE(p.p_clamped);
  EXPECT_EQ(p.recover_threshold, 4u * 214);
  EXPECT_EQ(p.max_resamples, 17u);
  // cap = Delta / (4 * 20) = 2.5
  EXPECT_FALSE(p.exceeds_l_density(2));
  EXPECT_TRUE(p.exceeds_l_density(3));

  const Graph big = gen_classic(ClassicKind::RandomRegular, 250, 120, 3);
  const auto q = make_dense_params(big, 1, Epsilon::parse("1"), 5);
  EXPECT_FALSE(q.p_clamped);
  EXPECT_DOUBLE_EQ(q.p_uncolour, 105.0 / 120.0);
}

TEST(DenseParams, Guards) {
  const Graph star = gen_classic(ClassicKind::Star, 6);
  EXPECT_EQ(code_of([&] { make_dense_params(star, 1, Epsilon::of(1, 1), 0); }), ErrorCode::DegreeRatioViolated);
  EXPECT_NO_THROW(make_dense_params(star, 1, Epsilon::of(1, 5), 0));
  EXPECT_EQ(code_of([] { Epsilon::parse("0"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Epsilon::parse("3/2"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Epsilon::parse("abc"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(Epsilon::parse("0.25").str(), Epsilon::parse("1/4").str());

  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {2, 3}, {3, 4}, {2, 4}};
  const Graph with_k2(5, edges);
  EXPECT_EQ(code_of([&] { construct_dense(with_k2, 1, Epsilon::of(1, 2), 0); }), ErrorCode::IsolatedEdge);
}

TEST(StageOne, EvaluationMatchesDefinitions) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = gen_classic(ClassicKind::RandomRegular, 40, 6 + 2 * (trial % 3), trial);
    DensePipelineParams p = make_dense_params(g, 1, Epsilon::of(1, 1), 0);
    // Small thresholds so that every class is populated.
    p.recover_threshold = 2 + trial % 3;
    p.low_threshold = 2;
    std::bernoulli_distribution coin(0.3);
    std::vector<char> flips(g.edge_count());
    for (auto& f : flips) f = coin(rng);
    const auto c0 = vizing_colour(g, ColourBlock::range(1, g.max_degree() + 1));
    const auto s = evaluate_stage_one(g, c0, flips, p);
    const auto k = reference_classes(g, flips, p.recover_threshold, p.low_threshold);
    ASSERT_EQ(s.u_deg, k.u);
    ASSERT_EQ(s.uc_deg, k.uc);
    ASSERT_EQ(s.in_r, k.R);
    ASSERT_EQ(s.in_lu, k.LU);
    ASSERT_EQ(s.in_ar, k.AR);
    ASSERT_EQ(s.in_l, k.L);
    const auto inv = check_stage_one_invariants(s, p);
    EXPECT_TRUE(inv.recovery_cap);
    EXPECT_TRUE(inv.l_inclusion);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (s.c.coloured(e)) {
        EXPECT_EQ(s.c[e], c0[e]);
      }
    }
  }
}

TEST(StageOne, EventsMatchDefinitions) {
  std::mt19937_64 rng(8);
  const Graph g = gen_classic(ClassicKind::RandomRegular, 30, 6, 2);
  DensePipelineParams p = make_dense_params(g, 1, Epsilon::of(1, 1), 0);
  p.recover_threshold = 3;
  p.low_threshold = 2;
  p.sym_diff_target = 3;
  p.l_density_num = 2;
  p.l_density_den = 1;
  const auto c0 = vizing_colour(g, ColourBlock::range(1, 7));
  std::bernoulli_distribution coin(0.35);
  std::vector<char> flips(g.edge_count());
  for (auto& f : flips) f = coin(rng);
  const auto s = evaluate_stage_one(g, c0, flips, p);
  const auto pairs = r_adjacent_pairs(g, 1, true);
  const auto events = stage_one_events(g, s, p, pairs);

  std::set<std::vector<VertexId>> dense_v, dense_uv;
  for (const auto& ev : events) (ev.kind == EventKind::DenseA_v ? dense_v : dense_uv).insert(ev.scope);
  const auto colours = std::vector<Colour>(s.c.assignment().begin(), s.c.assignment().end());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t l = 0;
    for (const auto& inc : g.incident(v)) l += s.in_l[inc.neighbour];
    EXPECT_EQ(dense_v.count({v}) == 1, l > 2) << v;
  }
  for (const auto& [u, v, d] : pairs) {
    std::set<Colour> a, b;
    for (const auto& inc : g.incident(u)) if (colours[inc.edge]) a.insert(colours[inc.edge]);
    for (const auto& inc : g.incident(v)) if (colours[inc.edge]) b.insert(colours[inc.edge]);
    std::size_t diff = 0;
    for (Colour c : a) diff += !b.count(c);
    for (Colour c : b) diff += !a.count(c);
    const bool bad = !(s.in_l[u] && s.in_l[v]) && diff < 3;
    EXPECT_EQ(dense_uv.count({u, v}) == 1, bad) << u << "," << v;
  }
}

TEST(Dense, PostconditionsOnSmallRegularGraphs) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t d = seed % 2 ? 8 : 6;
    const std::uint32_t r = 1 + seed % 3 / 2;
    const Graph g = gen_classic(ClassicKind::RandomRegular, 60, d, 100 + seed);
    const auto res = construct_dense(g, r, Epsilon::of(1, 1), seed);
    EXPECT_TRUE(res.report.proper);
    EXPECT_EQ(res.report.final_conflicts, 0u);
    EXPECT_TRUE(res.diagnostics.invariants.recovery_cap);
    EXPECT_TRUE(res.diagnostics.invariants.l_inclusion);
    EXPECT_LE(res.report.colours_used_pre_repair, d + 7 * r + 200 + r + 6);
    EXPECT_TRUE(res.report.bound_respected_pre_repair);
    const std::vector<Colour> colours(res.colouring.assignment().begin(), res.colouring.assignment().end());
    EXPECT_TRUE(oracle::conflicts(g, colours, r).empty());
    EXPECT_TRUE(oracle::proper(g, colours));
  }
}

TEST(Dense, DegenerateLawIsFlaggedNotLooped) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 60, 8, 1);
  const auto res = construct_dense(g, 1, Epsilon::of(1, 1), 3);
  // p clamps to 1: every edge is uncoloured and resampling cannot change that.
  EXPECT_EQ(res.diagnostics.u_edges, g.edge_count());
  EXPECT_TRUE(res.diagnostics.stage_one.degenerate);
  EXPECT_TRUE(res.diagnostics.stage_one.flagged);
  EXPECT_EQ(res.diagnostics.l_vertices, g.vertex_count());
  EXPECT_FALSE(res.report.notes.empty());
}

TEST(Dense, NonDegenerateRegimeResamplesToACleanState) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 250, 120, 3);
  const auto res = construct_dense(g, 1, Epsilon::of(1, 1), 7);
  EXPECT_FALSE(res.diagnostics.stage_one.degenerate);
  EXPECT_FALSE(res.diagnostics.stage_one.flagged);
  EXPECT_EQ(res.diagnostics.stage_one.remaining_events, 0u);
  EXPECT_GT(res.diagnostics.u_edges, 0u);
  EXPECT_LT(res.diagnostics.u_edges, g.edge_count());
  EXPECT_TRUE(res.report.proper);
  EXPECT_EQ(res.report.final_conflicts, 0u);
  EXPECT_LE(res.report.colours_used_pre_repair, res.diagnostics.params.colour_bound());
}

TEST(Dense, SameSeedSameOutput) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 80, 8, 9);
  const auto a = construct_dense(g, 2, Epsilon::of(1, 1), 42);
  const auto b = construct_dense(g, 2, Epsilon::of(1, 1), 42);
  EXPECT_EQ(a.colouring, b.colouring);
  EXPECT_EQ(a.report.repairs.size(), b.report.repairs.size());
  EXPECT_EQ(a.report.resample_counts, b.report.resample_counts);
}

TEST(Repair, ResolvesConflictsWithFreshColours) {
  // C4 with 1,2,1,2: every vertex has palette {1, 2}.
  const Graph c4 = gen_classic(ClassicKind::Cycle, 4);
  EdgeColouring c({1, 2, 1, 2});
  const auto records = repair_conflicts(c4, c, 2);
  EXPECT_FALSE(records.empty());
  EXPECT_TRUE(verify_distinguishing(c4, c, 2).distinguishing());
  for (const auto& rec : records) {
    EXPECT_GT(rec.new_colour, 2u);
    EXPECT_LT(rec.u, rec.v);
  }
}
