#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromadist/colouring.hpp"
#include "chromadist/graph.hpp"

namespace chromadist::lll {

/// A rational epsilon in (0, 1], kept exact so that degree-ratio and
/// threshold comparisons are decided in integer arithmetic.
struct Epsilon {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// Accepts "1", "0.25" or "1/4". Throws InvalidArgument outside (0, 1].
  static Epsilon parse(std::string_view text);
  static Epsilon of(std::int64_t num, std::int64_t den);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

enum class EventKind : std::uint8_t {
  DenseA_v,      // |N(v) & L| above eps^2 Delta / (10 r)
  DenseA_uv,     // u or v outside L and |S(u) ^ S(v)| < 2r + 10
  StageTwoA_uS,  // u outside L lost r + 5 edges in stage two
  StageTwoB_uv,  // u, v in L with equal partial palettes
  AsymD_uv,      // small equal degrees, S_q(u) = S_q(v)
  AsymD_vi,      // more than ln^4 + ln^3 edges of class i at v
  AsymA_v0,      // |U(v)| far from 2d / ln Delta
  AsymA_vi,      // more than 4 ln^3 uncoloured class-i edges at v
  AsymB_uv,      // equal partial palettes, equal degrees at least ln^3
};

inline constexpr std::size_t kEventKindCount = 9;

std::string_view to_string(EventKind kind);

/// A violated event, re-checkable from the state it was recorded against.
struct BadEvent {
  EventKind kind;
  std::vector<VertexId> scope;    // sorted
  std::uint32_t class_index = 0;  // index colour i for AsymD_vi / AsymA_vi
  double witness = 0;             // the offending measurement
};

/// Edges within distance 2 of the scope: every edge with an endpoint at
/// distance at most 1 from a scope vertex. Sorted ascending.
std::vector<EdgeId> dependency_edges(const Graph& g, std::span<const VertexId> scope);

/// Scope vertices and their neighbours, sorted ascending.
std::vector<VertexId> closed_neighbourhood(const Graph& g, std::span<const VertexId> scope);

using ResampleCounts = std::array<std::uint64_t, kEventKindCount>;

/// Book-keeping of one resampling loop.
struct ResampleStats {
  std::uint64_t rounds = 0;
  std::uint64_t resamples = 0;
  ResampleCounts per_kind{};
  /// Events still violated when the loop stopped.
  std::size_t remaining_events = 0;
  /// Budget exhausted, or the law is degenerate, with events still violated.
  bool flagged = false;
  /// The random choices are forced (probability 0 or 1, or no freedom of
  /// choice), so resampling cannot change the outcome.
  bool degenerate = false;
};

struct RepairRecord {
  VertexId u;  // the conflicting pair, u < v
  VertexId v;
  EdgeId edge;  // recoloured edge, incident to u and not to v
  Colour old_colour;
  Colour new_colour;
};

/// Resolves every r-distant palette conflict of a proper total colouring by
/// giving one edge of the lower-id vertex (its highest-coloured edge that
/// avoids the partner) a colour unused anywhere. Each step removes at least
/// one conflicting pair and creates none.
std::vector<RepairRecord> repair_conflicts(const Graph& g, EdgeColouring& colouring, std::uint32_t r);

struct ConstructionReport {
  std::string method;
  std::uint32_t r = 0;
  std::uint64_t seed = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t colours_used = 0;
  std::size_t colours_used_pre_repair = 0;
  std::size_t theorem_bound = 0;
  bool bound_respected_pre_repair = false;
  ResampleCounts resample_counts{};
  std::vector<RepairRecord> repairs;
  std::uint64_t final_conflicts = 0;
  bool proper = false;
  /// Clamped probabilities, truncated counts, degenerate laws, exhausted budgets.
  std::vector<std::string> notes;
  /// Wall-clock time; kept out of the reproducible report formats.
  double elapsed_seconds = 0;
};

}  // namespace chromadist::lll
