#include "chromadist/lll/asymptotic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chromadist/distance.hpp"
#include "chromadist/error.hpp"
#include "chromadist/rng.hpp"
#include "chromadist/verify.hpp"
#include "resample.hpp"

namespace chromadist::lll {

ColourBlock AsymptoticPlan::c_prime(std::size_t i) const {
  return ColourBlock::range(static_cast<Colour>(i * block_size + 1), c_prime_size);
}

ColourBlock AsymptoticPlan::c_double_prime(std::size_t i) const {
  return ColourBlock::range(static_cast<Colour>(i * block_size + c_prime_size + 1), c_double_prime_size);
}

std::size_t AsymptoticPlan::block_of(Colour c) const {
  if (c == kNoColour || c > colour_bound()) return t;
  return (c - 1) / block_size;
}

AsymptoticPlan make_asymptotic_plan(std::size_t max_degree) {
  AsymptoticPlan p;
  p.max_degree = max_degree;
  p.ln_delta = max_degree > 1 ? std::log(static_cast<double>(max_degree)) : 0.0;
  p.ln3 = std::pow(p.ln_delta, 3);
  p.ln4 = std::pow(p.ln_delta, 4);
  if (p.ln3 < 2.0) {
    throw Error(ErrorCode::DeltaBelowFloor,
                "max degree " + std::to_string(max_degree) + " is below the floor of the class plan (ln^3 < 2)");
  }
  const auto ln3c = static_cast<std::size_t>(std::ceil(p.ln3));
  const auto ln4c = static_cast<std::size_t>(std::ceil(p.ln4));
  p.t = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(static_cast<double>(max_degree) / p.ln4)));
  p.c_prime_size = ln4c + ln3c + 1;
  p.c_double_prime_size = 4 * ln3c + 1;
  p.block_size = p.c_prime_size + p.c_double_prime_size;
  const double raw = 2.0 / p.ln_delta;
  p.clamped = raw > 1.0;
  p.uncolour_probability = std::min(raw, 1.0);
  return p;
}

namespace {

// Colours `edges` (all of one class) from `block`, appending overflow colours
// past the plan when the class subgraph is too dense for it.
void colour_class(const Graph& g, const std::vector<EdgeId>& edges, const ColourBlock& block, Colour& next_overflow,
                  std::size_t& overflow_used, std::vector<Colour>& colours) {
  if (edges.empty()) return;
  const std::size_t need = subset_max_degree(g, edges) + 1;
  ColourBlock use = block;
  if (need > block.size()) {
    auto list = block.colours();
    while (list.size() < need) list.push_back(next_overflow++);
    overflow_used += need - block.size();
    use = ColourBlock(std::move(list));
  }
  for (const auto& [e, c] : vizing_on_subgraph(g, edges, use)) colours[e] = c;
}

std::vector<std::uint32_t> class_set(const Graph& g, const std::vector<std::uint32_t>& q, VertexId v) {
  std::vector<std::uint32_t> s;
  for (const auto& inc : g.incident(v)) s.push_back(q[inc.edge]);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

AsymptoticResult construct_asymptotic(const Graph& g, std::uint32_t r, std::uint64_t seed,
                                      std::optional<std::uint64_t> max_resamples) {
  const auto start = std::chrono::steady_clock::now();
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  if (!g.isolated_edges().empty()) {
    throw Error(ErrorCode::IsolatedEdge, "graph has a K2 component; no distinguishing colouring exists");
  }
  AsymptoticResult out;
  auto& diag = out.diagnostics;
  auto& rep = out.report;
  diag.plan = make_asymptotic_plan(g.max_degree());
  const auto& plan = diag.plan;
  if (g.min_degree() < r + 2) {
    throw Error(ErrorCode::MinDegreeTooSmall,
                "min degree " + std::to_string(g.min_degree()) + " is below r + 2 = " + std::to_string(r + 2));
  }
  const std::uint64_t budget = max_resamples.value_or(50 * static_cast<std::uint64_t>(g.edge_count()));
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const double ln = plan.ln_delta;

  rep.method = "asymptotic";
  rep.r = r;
  rep.seed = seed;
  rep.max_degree = g.max_degree();
  rep.min_degree = g.min_degree();
  if (plan.clamped) rep.notes.push_back("uncolour probability clamped to 1");

  const auto pairs = r_adjacent_pairs(g, r, true);

  // Class colouring q.
  auto& q = diag.q;
  q.resize(m);
  Rng qrng(derive_seed(seed, "asym.q"));
  for (auto& x : q) x = static_cast<std::uint32_t>(qrng.below(plan.t));
  const double class_cap = plan.ln4 + plan.ln3;
  diag.q_stage = detail::resample_until_clean(
      [&] {
        std::vector<BadEvent> events;
        std::vector<std::uint32_t> load(plan.t);
        for (VertexId v = 0; v < n; ++v) {
          std::fill(load.begin(), load.end(), 0);
          for (const auto& inc : g.incident(v)) ++load[q[inc.edge]];
          for (std::uint32_t i = 0; i < plan.t; ++i) {
            if (load[i] > class_cap) events.push_back({EventKind::AsymD_vi, {v}, i, static_cast<double>(load[i])});
          }
        }
        for (const auto& p : pairs) {
          if (static_cast<double>(g.degree(p.u)) > plan.ln3) continue;
          if (class_set(g, q, p.u) == class_set(g, q, p.v)) {
            events.push_back({EventKind::AsymD_uv, {p.u, p.v}, 0, static_cast<double>(g.degree(p.u))});
          }
        }
        return events;
      },
      [&](const BadEvent& ev) {
        for (EdgeId e : dependency_edges(g, ev.scope)) q[e] = static_cast<std::uint32_t>(qrng.below(plan.t));
      },
      [&](const std::vector<BadEvent>&) { return plan.t == 1; }, budget);
  if (diag.q_stage.flagged) {
    rep.notes.push_back("class stage flagged with " + std::to_string(diag.q_stage.remaining_events) +
                        " violated events" + (diag.q_stage.degenerate ? " (single class)" : " (budget exhausted)"));
  }

  std::vector<std::vector<EdgeId>> classes(plan.t);
  for (EdgeId e = 0; e < m; ++e) classes[q[e]].push_back(e);
  for (const auto& cls : classes) diag.max_class_degree = std::max(diag.max_class_degree, subset_max_degree(g, cls));

  std::vector<Colour> c(m, kNoColour);
  Colour next_overflow = static_cast<Colour>(plan.colour_bound() + 1);
  for (std::size_t i = 0; i < plan.t; ++i) {
    colour_class(g, classes[i], plan.c_prime(i), next_overflow, diag.overflow_colours, c);
  }

  // Random uncolouring of c.
  std::vector<char> flips(m);
  Rng urng(derive_seed(seed, "asym.uncolour"));
  for (auto& f : flips) f = urng.bernoulli(plan.uncolour_probability);
  const double leftover_cap = 4 * plan.ln3;
  diag.uncolour_stage = detail::resample_until_clean(
      [&] {
        std::vector<BadEvent> events;
        std::vector<std::uint32_t> udeg(n, 0);
        std::vector<std::uint32_t> load(plan.t);
        for (VertexId v = 0; v < n; ++v) {
          std::fill(load.begin(), load.end(), 0);
          for (const auto& inc : g.incident(v)) {
            if (!flips[inc.edge]) continue;
            ++udeg[v];
            ++load[q[inc.edge]];
          }
          const double d = static_cast<double>(g.degree(v));
          if (d >= plan.ln3 && std::abs(udeg[v] - 2 * d / ln) > d / ln) {
            events.push_back({EventKind::AsymA_v0, {v}, 0, static_cast<double>(udeg[v])});
          }
          for (std::uint32_t i = 0; i < plan.t; ++i) {
            if (load[i] > leftover_cap) events.push_back({EventKind::AsymA_vi, {v}, i, static_cast<double>(load[i])});
          }
        }
        std::vector<Colour> partial(c);
        for (EdgeId e = 0; e < m; ++e) {
          if (flips[e]) partial[e] = kNoColour;
        }
        for (const auto& p : pairs) {
          const double d = static_cast<double>(g.degree(p.u));
          if (d < plan.ln3) continue;
          auto in_window = [&](VertexId x) { return udeg[x] >= d / ln && udeg[x] <= 3 * d / ln; };
          if (in_window(p.u) && in_window(p.v) && palette(g, partial, p.u) == palette(g, partial, p.v)) {
            events.push_back({EventKind::AsymB_uv, {p.u, p.v}, 0, d});
          }
        }
        return events;
      },
      [&](const BadEvent& ev) {
        for (EdgeId e : dependency_edges(g, ev.scope)) flips[e] = urng.bernoulli(plan.uncolour_probability);
      },
      [&](const std::vector<BadEvent>&) { return plan.uncolour_probability >= 1.0; }, budget);
  if (diag.uncolour_stage.flagged) {
    rep.notes.push_back("uncolouring stage flagged with " + std::to_string(diag.uncolour_stage.remaining_events) +
                        " violated events" +
                        (diag.uncolour_stage.degenerate ? " (degenerate law)" : " (budget exhausted)"));
  }
  for (std::size_t i = 0; i < kEventKindCount; ++i) {
    rep.resample_counts[i] = diag.q_stage.per_kind[i] + diag.uncolour_stage.per_kind[i];
  }

  // Recolour the uncoloured part of every class from C''_i.
  std::vector<std::vector<EdgeId>> leftovers(plan.t);
  for (EdgeId e = 0; e < m; ++e) {
    if (!flips[e]) continue;
    c[e] = kNoColour;
    leftovers[q[e]].push_back(e);
    ++diag.uncoloured_edges;
  }
  for (std::size_t i = 0; i < plan.t; ++i) {
    diag.max_leftover_degree = std::max(diag.max_leftover_degree, subset_max_degree(g, leftovers[i]));
    colour_class(g, leftovers[i], plan.c_double_prime(i), next_overflow, diag.overflow_colours, c);
  }
  if (diag.overflow_colours > 0) {
    rep.notes.push_back(std::to_string(diag.overflow_colours) + " overflow colours used past the class blocks");
  }

  EdgeColouring colouring(std::move(c));
  if (!is_proper(g, colouring).proper) throw std::logic_error("asymptotic pipeline produced an improper colouring");
  auto classes_hold = [&](const EdgeColouring& col) {
    for (EdgeId e = 0; e < m; ++e) {
      if (plan.block_of(col[e]) != q[e]) return false;
    }
    return true;
  };
  diag.class_invariant_pre_repair = classes_hold(colouring);
  rep.colours_used_pre_repair = colouring.colour_count();
  rep.theorem_bound = plan.colour_bound();
  rep.bound_respected_pre_repair = rep.colours_used_pre_repair <= rep.theorem_bound;

  rep.repairs = repair_conflicts(g, colouring, r);
  diag.class_invariant_final = classes_hold(colouring);
  const auto final_check = verify_distinguishing(g, colouring, r);
  rep.final_conflicts = final_check.conflict_count;
  rep.proper = final_check.proper;
  rep.colours_used = colouring.colour_count();
  out.colouring = std::move(colouring);
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace chromadist::lll
