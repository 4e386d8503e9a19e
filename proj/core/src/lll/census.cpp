#include "chromadist/lll/census.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <thread>

#include "chromadist/distance.hpp"
#include "chromadist/error.hpp"
#include "chromadist/rng.hpp"
#include "chromadist/vizing.hpp"

namespace chromadist::lll {

namespace {

enum Row : std::size_t { RDensity, LUDensity, ARDensity, AV, AUV, S2A, S2B, kRows };

struct TrialCounts {
  std::array<std::uint64_t, kRows> instances{};
  std::array<std::uint64_t, kRows> violations{};
};

}  // namespace

std::vector<CensusRow> event_census(const Graph& g, const DensePipelineParams& params, std::uint64_t trials,
                                    std::uint64_t seed, std::size_t threads) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "census needs at least one trial");
  if (!g.isolated_edges().empty()) {
    throw Error(ErrorCode::IsolatedEdge, "graph has a K2 component; no distinguishing colouring exists");
  }
  const std::size_t n = g.vertex_count();
  const auto c0 = vizing_colour(g, ColourBlock::range(1, g.max_degree() + 1));
  const auto pairs = r_adjacent_pairs(g, params.r, true);
  // eps^2 Delta / (30 r) is a third of the L-density cap.
  auto exceeds_third = [&](std::size_t count) {
    return static_cast<UInt128>(count) * 3 * params.l_density_den > params.l_density_num;
  };

  std::vector<TrialCounts> per_trial(trials);
  auto run_trial = [&](std::uint64_t trial) {
    TrialCounts& tc = per_trial[trial];
    const std::uint64_t trial_seed = derive_seed(seed, "census", trial);
    Rng rng(trial_seed);
    std::vector<char> flips(g.edge_count());
    for (auto& f : flips) f = rng.bernoulli(params.p_uncolour);
    const auto state = evaluate_stage_one(g, c0, flips, params);

    for (VertexId v = 0; v < n; ++v) {
      std::size_t in_r = 0, in_lu = 0, in_ar = 0, in_l = 0;
      for (const auto& inc : g.incident(v)) {
        in_r += state.in_r[inc.neighbour];
        in_lu += state.in_lu[inc.neighbour];
        in_ar += state.in_ar[inc.neighbour];
        in_l += state.in_l[inc.neighbour];
      }
      tc.violations[RDensity] += exceeds_third(in_r);
      tc.violations[LUDensity] += exceeds_third(in_lu);
      tc.violations[ARDensity] += exceeds_third(in_ar);
      tc.violations[AV] += params.exceeds_l_density(in_l);
    }
    tc.instances[RDensity] = tc.instances[LUDensity] = tc.instances[ARDensity] = tc.instances[AV] = n;

    std::vector<ColourSet> palettes(n);
    for (VertexId v = 0; v < n; ++v) palettes[v] = palette(g, state.c, v);
    for (const auto& p : pairs) {
      const std::size_t d = symmetric_difference_size(palettes[p.u], palettes[p.v]);
      tc.instances[AUV] += 2;
      if (d < params.sym_diff_target) tc.violations[AUV] += !state.in_l[p.u] + !state.in_l[p.v];
    }

    DensePipelineParams fresh = params;
    fresh.seed = trial_seed;
    fresh.max_resamples = 0;
    const auto two = stage_two(g, state, fresh);
    for (VertexId u = 0; u < n; ++u) {
      if (state.in_l[u]) continue;
      ++tc.instances[S2A];
      tc.violations[S2A] += two.state.u_prime_deg[u] >= params.stage_two_count;
    }
    for (const auto& p : pairs) {
      if (!state.in_l[p.u] || !state.in_l[p.v]) continue;
      ++tc.instances[S2B];
      tc.violations[S2B] += palette(g, two.state.c_prime, p.u) == palette(g, two.state.c_prime, p.v);
    }
  };

  threads = std::max<std::size_t>(1, std::min<std::size_t>(threads, trials));
  if (threads == 1) {
    for (std::uint64_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) {
      pool.emplace_back([&] {
        for (std::uint64_t t; (t = next.fetch_add(1)) < trials;) run_trial(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  const double delta = static_cast<double>(params.max_degree);
  const double r = params.r;
  const double small = 1.0 / std::pow(delta, r + 4);
  const double stage_two_bound = std::pow((r + 5) / (0.8 * params.epsilon.value() * delta), r + 5);
  const std::array<std::pair<const char*, const char*>, kRows> names{{
      {"R_density", "1/(30 Delta^(r+4))"},
      {"LU_density", "1/(30 Delta^(r+4))"},
      {"AR_density", "1/(30 Delta^(r+4))"},
      {"DenseA_v", "1/(10 Delta^(r+4))"},
      {"DenseA_uv", "1/(10 Delta^(r+4))"},
      {"StageTwoA_uS", "((r+5)/(0.8 eps Delta))^(r+5)"},
      {"StageTwoB_uv", "((r+5)/(0.8 eps Delta))^(r+5)"},
  }};
  const std::array<double, kRows> bounds{small / 30, small / 30, small / 30, small / 10, small / 10, stage_two_bound,
                                         stage_two_bound};

  std::vector<CensusRow> rows(kRows);
  for (std::size_t k = 0; k < kRows; ++k) {
    auto& row = rows[k];
    row.kind = names[k].first;
    row.bound_formula = names[k].second;
    row.target_bound = bounds[k];
    row.trials = trials;
    for (const auto& tc : per_trial) {
      row.instances += tc.instances[k];
      row.violations += tc.violations[k];
    }
    row.frequency = row.instances ? static_cast<double>(row.violations) / static_cast<double>(row.instances) : 0.0;
  }
  return rows;
}

}  // namespace chromadist::lll
