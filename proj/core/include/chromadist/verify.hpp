#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chromadist/colouring.hpp"
#include "chromadist/graph.hpp"

namespace chromadist {

struct Conflict {
  VertexId u;  // u < v
  VertexId v;
  std::uint32_t dist;
  ColourSet palette;  // the common palette S(u) = S(v)

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct ConflictReport {
  std::uint32_t r = 0;
  bool proper = true;
  std::optional<std::pair<EdgeId, EdgeId>> proper_violation;
  /// Pairs with equal palettes at distance 1..r, sorted by (u, v). At most
  /// VerifyOptions::max_listed entries; conflict_count counts all of them.
  std::vector<Conflict> conflicts;
  std::uint64_t conflict_count = 0;
  /// Number of r-adjacent pairs examined.
  std::uint64_t checked_pairs = 0;
  std::size_t colours_used = 0;
  /// K2 components. Their two ends always share a palette, so such graphs
  /// admit no distinguishing colouring at all.
  std::vector<EdgeId> isolated_edges;

  bool distinguishing() const { return proper && conflict_count == 0; }
};

struct VerifyOptions {
  std::size_t max_listed = 10'000;
};

/// Checks S(u) != S(v) for every pair with 1 <= d(u,v) <= r. For a proper
/// total colouring |S(v)| = d(v), so only equal-degree pairs are compared.
ConflictReport verify_distinguishing(const Graph& g, const EdgeColouring& colouring, std::uint32_t r,
                                     const VerifyOptions& options = {});
ConflictReport verify_distinguishing(const Graph& g, const PartialColouring& colouring, std::uint32_t r,
                                     const VerifyOptions& options = {});

}  // namespace chromadist
