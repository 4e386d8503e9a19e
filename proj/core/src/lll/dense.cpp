#include "chromadist/lll/dense.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

#include "chromadist/error.hpp"
#include "chromadist/rng.hpp"
#include "chromadist/verify.hpp"
#include "chromadist/vizing.hpp"
#include "resample.hpp"

namespace chromadist::lll {

namespace {

using u128 = UInt128;

std::uint64_t narrow(u128 value, const char* what) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " overflows; use a simpler epsilon");
  }
  return static_cast<std::uint64_t>(value);
}

void require_degree_ratio(const Graph& g, Epsilon eps) {
  // delta >= (num / den) Delta
  if (static_cast<u128>(g.min_degree()) * static_cast<u128>(eps.den) <
      static_cast<u128>(g.max_degree()) * static_cast<u128>(eps.num)) {
    throw Error(ErrorCode::DegreeRatioViolated, "min degree " + std::to_string(g.min_degree()) + " is below " +
                                                    eps.str() + " * max degree " + std::to_string(g.max_degree()));
  }
}

void require_no_isolated_edge(const Graph& g) {
  if (!g.isolated_edges().empty()) {
    throw Error(ErrorCode::IsolatedEdge, "graph has a K2 component; no distinguishing colouring exists");
  }
}

std::vector<ColourSet> all_palettes(const Graph& g, std::span<const Colour> colours) {
  std::vector<ColourSet> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = palette(g, colours, v);
  return out;
}

}  // namespace

std::size_t count_members(std::span<const char> membership) {
  return static_cast<std::size_t>(std::count(membership.begin(), membership.end(), 1));
}

DensePipelineParams make_dense_params(const Graph& g, std::uint32_t r, Epsilon epsilon, std::uint64_t seed,
                                      std::optional<std::uint64_t> max_resamples) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  require_degree_ratio(g, epsilon);
  DensePipelineParams p;
  p.r = r;
  p.epsilon = epsilon;
  p.max_degree = g.max_degree();
  p.seed = seed;
  p.max_resamples = max_resamples.value_or(50 * static_cast<std::uint64_t>(g.edge_count()));

  const u128 num2 = static_cast<u128>(epsilon.num) * static_cast<u128>(epsilon.num);
  const u128 den2 = static_cast<u128>(epsilon.den) * static_cast<u128>(epsilon.den);
  const double raw_p = static_cast<double>(5 * r + 100) * static_cast<double>(den2) /
                       (static_cast<double>(num2) * static_cast<double>(p.max_degree));
  p.p_clamped = raw_p > 1.0;
  p.p_uncolour = std::min(raw_p, 1.0);
  p.recover_threshold = narrow(static_cast<u128>(7 * r + 200) * den2 / num2, "recovery threshold");
  p.low_threshold = 3 * r + 15;
  p.stage_two_count = r + 5;
  p.sym_diff_target = 2 * r + 10;
  p.l_density_num = narrow(num2 * p.max_degree, "L-density cap");
  p.l_density_den = narrow(static_cast<u128>(10 * r) * den2, "L-density cap");
  return p;
}

StageOneState evaluate_stage_one(const Graph& g, const EdgeColouring& c0, std::span<const char> uncolour,
                                 const DensePipelineParams& params) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (uncolour.size() != m || c0.edge_count() != m) {
    throw Error(ErrorCode::InvalidArgument, "stage one: flip vector or colouring does not match the graph");
  }
  StageOneState s;
  s.c = c0.to_partial();
  s.in_u.assign(uncolour.begin(), uncolour.end());
  s.in_r.assign(n, 0);
  s.in_lu.assign(n, 0);
  s.in_ar.assign(n, 0);
  s.in_l.assign(n, 0);
  s.u_deg.assign(n, 0);
  s.uc_deg.assign(n, 0);

  for (EdgeId e = 0; e < m; ++e) {
    if (!s.in_u[e]) continue;
    s.c.clear(e);
    ++s.u_deg[g.edge(e).u];
    ++s.u_deg[g.edge(e).v];
  }
  for (VertexId v = 0; v < n; ++v) s.in_r[v] = s.u_deg[v] > params.recover_threshold;
  for (VertexId v = 0; v < n; ++v) {
    if (!s.in_r[v]) continue;
    for (const auto& inc : g.incident(v)) {
      if (s.in_u[inc.edge]) s.c.set(inc.edge, c0[inc.edge]);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& inc : g.incident(v)) {
      if (!s.c.coloured(inc.edge)) ++s.uc_deg[v];
      if (s.in_u[inc.edge] && s.in_r[inc.neighbour]) s.in_ar[v] = 1;
    }
    s.in_lu[v] = s.u_deg[v] < params.low_threshold;
    s.in_l[v] = s.uc_deg[v] < params.low_threshold;
  }
  return s;
}

std::vector<BadEvent> stage_one_events(const Graph& g, const StageOneState& state, const DensePipelineParams& params,
                                       std::span<const RAdjacentPair> pairs) {
  std::vector<BadEvent> events;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t in_l = 0;
    for (const auto& inc : g.incident(v)) in_l += state.in_l[inc.neighbour];
    if (params.exceeds_l_density(in_l)) {
      events.push_back({EventKind::DenseA_v, {v}, 0, static_cast<double>(in_l)});
    }
  }
  const auto palettes = all_palettes(g, state.c.assignment());
  for (const auto& p : pairs) {
    if (state.in_l[p.u] && state.in_l[p.v]) continue;
    const std::size_t d = symmetric_difference_size(palettes[p.u], palettes[p.v]);
    if (d < params.sym_diff_target) {
      events.push_back({EventKind::DenseA_uv, {p.u, p.v}, 0, static_cast<double>(d)});
    }
  }
  return events;
}

StageOneInvariants check_stage_one_invariants(const StageOneState& state, const DensePipelineParams& params) {
  StageOneInvariants inv{true, true};
  for (std::size_t v = 0; v < state.uc_deg.size(); ++v) {
    if (state.uc_deg[v] > params.recover_threshold) inv.recovery_cap = false;
    if (state.in_l[v] && !(state.in_r[v] || state.in_lu[v] || state.in_ar[v])) inv.l_inclusion = false;
  }
  return inv;
}

StageOneResult stage_one(const Graph& g, const DensePipelineParams& params) {
  require_no_isolated_edge(g);
  require_degree_ratio(g, params.epsilon);
  StageOneResult out;
  out.c0 = vizing_colour(g, ColourBlock::range(1, g.max_degree() + 1));
  Rng rng(derive_seed(params.seed, "dense.stage-one"));
  out.flips.resize(g.edge_count());
  for (auto& f : out.flips) f = rng.bernoulli(params.p_uncolour);

  const auto pairs = r_adjacent_pairs(g, params.r, true);
  const bool forced = params.p_uncolour >= 1.0 || params.p_uncolour <= 0.0;
  out.stats = detail::resample_until_clean(
      [&] {
        out.state = evaluate_stage_one(g, out.c0, out.flips, params);
        return stage_one_events(g, out.state, params, pairs);
      },
      [&](const BadEvent& ev) {
        for (EdgeId e : dependency_edges(g, ev.scope)) out.flips[e] = rng.bernoulli(params.p_uncolour);
      },
      [&](const std::vector<BadEvent>&) { return forced; }, params.max_resamples);

  const auto inv = check_stage_one_invariants(out.state, params);
  if (!inv.recovery_cap || !inv.l_inclusion) throw std::logic_error("stage one invariant broken");
  return out;
}

namespace {

void rebuild_stage_two(const Graph& g, const StageOneState& one, StageTwoState& two) {
  two.c_prime = one.c;
  two.u_prime_deg.assign(g.vertex_count(), 0);
  for (const auto& sel : two.selections) {
    for (EdgeId e : sel) {
      two.c_prime.clear(e);
      ++two.u_prime_deg[g.edge(e).u];
      ++two.u_prime_deg[g.edge(e).v];
    }
  }
}

void draw_selection(const std::vector<EdgeId>& eligible, std::size_t k, Rng& rng, std::vector<EdgeId>& out) {
  out = eligible;
  if (out.size() > k) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(out.size() - i));
      std::swap(out[i], out[j]);
    }
    out.resize(k);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<BadEvent> stage_two_events(const Graph& g, const StageOneState& one, const StageTwoState& two,
                                       const DensePipelineParams& params, std::span<const RAdjacentPair> pairs) {
  std::vector<BadEvent> events;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (!one.in_l[u] && two.u_prime_deg[u] >= params.stage_two_count) {
      events.push_back({EventKind::StageTwoA_uS, {u}, 0, static_cast<double>(two.u_prime_deg[u])});
    }
  }
  std::vector<ColourSet> palettes(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (one.in_l[v]) palettes[v] = palette(g, two.c_prime, v);
  }
  for (const auto& p : pairs) {
    if (one.in_l[p.u] && one.in_l[p.v] && palettes[p.u] == palettes[p.v]) {
      events.push_back({EventKind::StageTwoB_uv, {p.u, p.v}, 0, static_cast<double>(palettes[p.u].size())});
    }
  }
  return events;
}

StageTwoResult stage_two(const Graph& g, const StageOneState& one, const DensePipelineParams& params) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = params.stage_two_count;
  StageTwoResult out;
  auto& two = out.state;
  two.selections.assign(n, {});
  two.eligible.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    if (!one.in_l[v]) continue;
    for (const auto& inc : g.incident(v)) {
      if (one.c.coloured(inc.edge) && !one.in_l[inc.neighbour]) two.eligible[v].push_back(inc.edge);
    }
    out.shortfall_vertices += two.eligible[v].size() < k;
  }

  Rng rng(derive_seed(params.seed, "dense.stage-two"));
  for (VertexId v = 0; v < n; ++v) {
    if (one.in_l[v]) draw_selection(two.eligible[v], k, rng, two.selections[v]);
  }

  const auto pairs = r_adjacent_pairs(g, params.r, true);
  auto has_choice = [&](VertexId x) { return one.in_l[x] && two.eligible[x].size() > k; };
  out.stats = detail::resample_until_clean(
      [&] {
        rebuild_stage_two(g, one, two);
        return stage_two_events(g, one, two, params, pairs);
      },
      [&](const BadEvent& ev) {
        for (VertexId x : closed_neighbourhood(g, ev.scope)) {
          if (one.in_l[x]) draw_selection(two.eligible[x], k, rng, two.selections[x]);
        }
      },
      [&](const std::vector<BadEvent>& events) {
        return std::none_of(events.begin(), events.end(), [&](const BadEvent& ev) {
          const auto around = closed_neighbourhood(g, ev.scope);
          return std::any_of(around.begin(), around.end(), has_choice);
        });
      },
      params.max_resamples);

  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : two.selections[v]) {
      const auto ends = g.edge(e);
      if (one.in_l[ends.u] == one.in_l[ends.v]) throw std::logic_error("stage two edge without exactly one L end");
    }
  }
  return out;
}

DenseResult construct_dense(const Graph& g, std::uint32_t r, Epsilon epsilon, std::uint64_t seed,
                            std::optional<std::uint64_t> max_resamples) {
  const auto start = std::chrono::steady_clock::now();
  require_no_isolated_edge(g);
  DenseResult out;
  auto& diag = out.diagnostics;
  auto& rep = out.report;
  diag.params = make_dense_params(g, r, epsilon, seed, max_resamples);
  const auto& params = diag.params;

  rep.method = "dense";
  rep.r = r;
  rep.seed = seed;
  rep.max_degree = g.max_degree();
  rep.min_degree = g.min_degree();
  if (params.p_clamped) rep.notes.push_back("uncolour probability clamped to 1");

  auto one = stage_one(g, params);
  const auto& s = one.state;
  diag.u_edges = count_members(s.in_u);
  diag.r_vertices = count_members(s.in_r);
  diag.lu_vertices = count_members(s.in_lu);
  diag.ar_vertices = count_members(s.in_ar);
  diag.l_vertices = count_members(s.in_l);
  diag.max_uc_degree = s.uc_deg.empty() ? 0 : *std::max_element(s.uc_deg.begin(), s.uc_deg.end());
  diag.invariants = check_stage_one_invariants(s, params);
  diag.stage_one = one.stats;
  if (one.stats.flagged) {
    rep.notes.push_back(std::string("stage one flagged with ") + std::to_string(one.stats.remaining_events) +
                        " violated events" + (one.stats.degenerate ? " (degenerate law)" : " (budget exhausted)"));
  }

  auto two = stage_two(g, s, params);
  diag.stage_two = two.stats;
  diag.shortfall_vertices = two.shortfall_vertices;
  for (const auto& sel : two.state.selections) diag.stage_two_edges += sel.size();
  if (two.shortfall_vertices > 0) {
    rep.notes.push_back(std::to_string(two.shortfall_vertices) + " L-vertices had fewer than " +
                        std::to_string(params.stage_two_count) + " eligible edges");
  }
  if (two.stats.flagged) {
    rep.notes.push_back(std::string("stage two flagged with ") + std::to_string(two.stats.remaining_events) +
                        " violated events" + (two.stats.degenerate ? " (forced selections)" : " (budget exhausted)"));
  }
  for (std::size_t i = 0; i < kEventKindCount; ++i) {
    rep.resample_counts[i] = one.stats.per_kind[i] + two.stats.per_kind[i];
  }

  const auto& c_prime = two.state.c_prime;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    diag.max_uncoloured_degree = std::max(diag.max_uncoloured_degree, g.degree(v) - c_prime.coloured_degree(g, v));
  }
  diag.fresh_block = std::max(params.fresh_block_size(), diag.max_uncoloured_degree + 1);
  if (diag.fresh_block > params.fresh_block_size()) {
    rep.notes.push_back("fresh block enlarged to " + std::to_string(diag.fresh_block));
  }
  const Colour first_fresh = static_cast<Colour>(g.max_degree() + 2);
  EdgeColouring colouring = extend_partial(g, c_prime, ColourBlock::range(first_fresh, diag.fresh_block));
  if (!is_proper(g, colouring).proper) throw std::logic_error("dense pipeline produced an improper colouring");

  rep.colours_used_pre_repair = colouring.colour_count();
  rep.theorem_bound = params.colour_bound();
  rep.bound_respected_pre_repair = rep.colours_used_pre_repair <= rep.theorem_bound;

  rep.repairs = repair_conflicts(g, colouring, r);
  const auto final_check = verify_distinguishing(g, colouring, r);
  rep.final_conflicts = final_check.conflict_count;
  rep.proper = final_check.proper;
  rep.colours_used = colouring.colour_count();
  out.colouring = std::move(colouring);
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace chromadist::lll
