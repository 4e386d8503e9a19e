#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chromadist/graph.hpp"
#include "chromadist/lll/dense.hpp"

namespace chromadist::lll {

struct CensusRow {
  std::string kind;
  std::uint64_t trials = 0;
  /// Event instances examined, summed over trials.
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  /// violations / instances, 0 when nothing was examined.
  double frequency = 0;
  /// The probability bound the construction relies on; an asymptotic
  /// statement, so small graphs routinely exceed it.
  double target_bound = 0;
  std::string bound_formula;
};

inline constexpr const char* kCensusBoundNote = "asymptotic - not expected to hold at small Delta";

/// Monte Carlo frequencies of the two-stage construction's bad events under
/// fresh randomness (no resampling). Each trial re-draws the stage-one flips
/// and the stage-two selections from a seed derived from (seed, trial).
/// Rows: R, LU and AR densities, DenseA_v, DenseA_uv (ordered pairs),
/// StageTwoA_uS, StageTwoB_uv. Throws InvalidArgument for trials = 0.
std::vector<CensusRow> event_census(const Graph& g, const DensePipelineParams& params, std::uint64_t trials,
                                    std::uint64_t seed, std::size_t threads = 1);

}  // namespace chromadist::lll
