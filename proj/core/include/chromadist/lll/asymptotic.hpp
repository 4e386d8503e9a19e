#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chromadist/colouring.hpp"
#include "chromadist/graph.hpp"
#include "chromadist/lll/common.hpp"
#include "chromadist/vizing.hpp"

namespace chromadist::lll {

/// Colour layout for the class-partition construction. Colours
/// 1..t*block_size form t consecutive blocks C_0..C_{t-1}; each block starts
/// with C'_i and ends with C''_i. Natural logarithms throughout.
struct AsymptoticPlan {
  std::size_t max_degree = 0;
  double ln_delta = 0;
  double ln3 = 0;  // ln^3 Delta
  double ln4 = 0;  // ln^4 Delta
  std::size_t t = 0;                    // ceil(Delta / ln^4 Delta)
  std::size_t c_prime_size = 0;         // ceil(ln^4) + ceil(ln^3) + 1
  std::size_t c_double_prime_size = 0;  // 4 ceil(ln^3) + 1
  std::size_t block_size = 0;           // ceil(ln^4) + 5 ceil(ln^3) + 2
  double uncolour_probability = 0;      // 2 / ln Delta, clamped to 1
  bool clamped = false;

  ColourBlock c_prime(std::size_t i) const;
  ColourBlock c_double_prime(std::size_t i) const;
  /// Block index of a planned colour, or t for colours past the plan.
  std::size_t block_of(Colour c) const;
  std::size_t colour_bound() const { return t * block_size; }
};

/// Throws DeltaBelowFloor when ln^3 Delta < 2 (Delta <= 3).
AsymptoticPlan make_asymptotic_plan(std::size_t max_degree);

struct AsymptoticDiagnostics {
  AsymptoticPlan plan;
  /// Class index per edge, 0-based.
  std::vector<std::uint32_t> q;
  ResampleStats q_stage;
  ResampleStats uncolour_stage;
  std::size_t max_class_degree = 0;
  std::size_t uncoloured_edges = 0;
  std::size_t max_leftover_degree = 0;
  /// Colours handed out past t * block_size because a class outgrew its block.
  std::size_t overflow_colours = 0;
  bool class_invariant_pre_repair = false;
  /// Edges touched by repair carry fresh colours outside every block.
  bool class_invariant_final = false;
};

struct AsymptoticResult {
  EdgeColouring colouring;
  ConstructionReport report;
  AsymptoticDiagnostics diagnostics;
};

/// Class colouring q, per-class Vizing from C'_i, random uncolouring,
/// per-class recolouring from C''_i, verification and repair. Throws
/// IsolatedEdge, DeltaBelowFloor, MinDegreeTooSmall (delta < r + 2).
AsymptoticResult construct_asymptotic(const Graph& g, std::uint32_t r, std::uint64_t seed,
                                      std::optional<std::uint64_t> max_resamples = std::nullopt);

}  // namespace chromadist::lll
