#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chromadist/colouring.hpp"
#include "chromadist/distance.hpp"
#include "chromadist/graph.hpp"
#include "chromadist/lll/common.hpp"

namespace chromadist::lll {

/// Every constant of the two-stage construction for graphs with
/// min degree >= eps * max degree. Ratios involving epsilon are stored as
/// integer fractions so each threshold test is exact.
struct DensePipelineParams {
  std::uint32_t r = 1;
  Epsilon epsilon;
  std::size_t max_degree = 0;

  /// (5r + 100) / (eps^2 Delta), clamped to 1.
  double p_uncolour = 1.0;
  bool p_clamped = false;

  /// floor(eps^-2 (7r + 200)); a vertex with more uncoloured edges is
  /// recovered, and no vertex keeps more afterwards.
  std::size_t recover_threshold = 0;
  /// 3r + 15: L and LU are the vertices strictly below it.
  std::size_t low_threshold = 0;
  /// r + 5 edges uncoloured per L-vertex in stage two.
  std::size_t stage_two_count = 0;
  /// 2r + 10: required palette separation outside L.
  std::size_t sym_diff_target = 0;
  /// eps^2 Delta / (10 r) as l_density_num / l_density_den.
  std::uint64_t l_density_num = 0;
  std::uint64_t l_density_den = 1;

  std::uint64_t max_resamples = 0;
  std::uint64_t seed = 0;

  bool exceeds_l_density(std::size_t count) const {
    return static_cast<UInt128>(count) * l_density_den > l_density_num;
  }
  /// recover_threshold + (r + 4) + 1.
  std::size_t fresh_block_size() const { return recover_threshold + stage_two_count; }
  /// Delta + recover_threshold + r + 6.
  std::size_t colour_bound() const { return max_degree + 1 + fresh_block_size(); }
};

/// Derives the parameters for g. Throws DegreeRatioViolated when
/// delta(g) < eps * Delta(g). max_resamples defaults to 50 |E|.
DensePipelineParams make_dense_params(const Graph& g, std::uint32_t r, Epsilon epsilon, std::uint64_t seed,
                                      std::optional<std::uint64_t> max_resamples = std::nullopt);

struct StageOneState {
  PartialColouring c;               // c_0 after uncolouring and recovery
  std::vector<char> in_u;           // per edge: uncoloured by the coin flips
  std::vector<char> in_r;           // per vertex: recovered
  std::vector<char> in_lu;          // |U(v)| < 3r + 15
  std::vector<char> in_ar;          // joined through U to a recovered vertex
  std::vector<char> in_l;           // |U_c(v)| < 3r + 15
  std::vector<std::uint32_t> u_deg;   // |U(v)|
  std::vector<std::uint32_t> uc_deg;  // |U_c(v)|
};

std::size_t count_members(std::span<const char> membership);

/// Applies the coin flips (`uncolour[e]` set means e is uncoloured) to the
/// proper colouring c0, recovers once, and classifies the vertices.
StageOneState evaluate_stage_one(const Graph& g, const EdgeColouring& c0, std::span<const char> uncolour,
                                 const DensePipelineParams& params);

/// Violated stage-one events against `pairs` (the same-degree r-adjacent
/// pairs of g). An A_uv event is recorded when either endpoint is outside L.
std::vector<BadEvent> stage_one_events(const Graph& g, const StageOneState& state, const DensePipelineParams& params,
                                       std::span<const RAdjacentPair> pairs);

/// Recovery cap and L inside R | LU | AR.
struct StageOneInvariants {
  bool recovery_cap = false;
  bool l_inclusion = false;
};

StageOneInvariants check_stage_one_invariants(const StageOneState& state, const DensePipelineParams& params);

struct StageOneResult {
  EdgeColouring c0;
  std::vector<char> flips;
  StageOneState state;
  ResampleStats stats;
};

/// Colours g with Delta + 1 colours, then flips, recovers and resamples until
/// event-free or flagged. Throws DegreeRatioViolated, IsolatedEdge.
StageOneResult stage_one(const Graph& g, const DensePipelineParams& params);

struct StageTwoState {
  PartialColouring c_prime;
  /// Per vertex, the stage-two edges chosen by an L-vertex (empty otherwise).
  std::vector<std::vector<EdgeId>> selections;
  /// Per vertex, the edges an L-vertex may choose from.
  std::vector<std::vector<EdgeId>> eligible;
  /// Per vertex, how many stage-two edges it is incident to.
  std::vector<std::uint32_t> u_prime_deg;
};

/// Violated stage-two events. A_uS: u outside L with |U'(u)| >= r + 5.
/// B_uv: u, v in L, r-adjacent of equal degree, equal palettes under c'.
std::vector<BadEvent> stage_two_events(const Graph& g, const StageOneState& one, const StageTwoState& two,
                                       const DensePipelineParams& params, std::span<const RAdjacentPair> pairs);

struct StageTwoResult {
  StageTwoState state;
  ResampleStats stats;
  /// L-vertices with fewer than r + 5 eligible edges (all were taken).
  std::size_t shortfall_vertices = 0;
};

/// Every L-vertex uncolours r + 5 edges, chosen uniformly among its edges that
/// are coloured under c and lead outside L; selections are re-drawn until
/// event-free or flagged.
StageTwoResult stage_two(const Graph& g, const StageOneState& one, const DensePipelineParams& params);

struct DenseDiagnostics {
  DensePipelineParams params;
  std::size_t u_edges = 0;
  std::size_t r_vertices = 0;
  std::size_t lu_vertices = 0;
  std::size_t ar_vertices = 0;
  std::size_t l_vertices = 0;
  std::size_t max_uc_degree = 0;
  StageOneInvariants invariants;
  ResampleStats stage_one;
  ResampleStats stage_two;
  std::size_t stage_two_edges = 0;
  std::size_t shortfall_vertices = 0;
  std::size_t max_uncoloured_degree = 0;
  std::size_t fresh_block = 0;
};

struct DenseResult {
  EdgeColouring colouring;
  ConstructionReport report;
  DenseDiagnostics diagnostics;
};

/// Both stages, extension of c' by a fresh block, verification and repair.
/// The output is proper and free of r-distant conflicts.
DenseResult construct_dense(const Graph& g, std::uint32_t r, Epsilon epsilon, std::uint64_t seed,
                            std::optional<std::uint64_t> max_resamples = std::nullopt);

}  // namespace chromadist::lll
