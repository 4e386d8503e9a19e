#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromadist/colouring.hpp"
#include "chromadist/graph.hpp"

namespace chromadist {

enum class EdgeOrder { Degeneracy, Input, MaxConflict };

std::optional<EdgeOrder> parse_edge_order(std::string_view name);

struct SolverConfig {
  /// Largest colour count tried. Defaults to kMaxSolverColours.
  std::optional<std::size_t> k_max;
  double time_limit_seconds = 60.0;
  /// Colour j may be used only after colours 1..j-1 have appeared.
  bool symmetry_break = true;
  EdgeOrder edge_order = EdgeOrder::Degeneracy;
};

/// Palettes are 64-bit masks inside the search.
inline constexpr std::size_t kMaxSolverColours = 64;

enum class SolverStatus { Exact, LowerBoundOnly, Timeout };

std::string_view to_string(SolverStatus status);

struct SolverResult {
  SolverStatus status = SolverStatus::Exact;
  /// The index itself when Exact; otherwise a proven lower bound (every
  /// smaller colour count was refuted by exhausted search).
  std::size_t value = 0;
  std::optional<EdgeColouring> witness;
  std::uint64_t nodes_explored = 0;
  std::size_t k_max = 0;
};

/// Smallest k admitting a proper edge colouring with k colours in which every
/// two vertices at distance 1..r have different palettes.
///
/// Tries k = Delta, Delta+1, ... by depth-first search with properness pruning
/// and a palette check whenever a vertex becomes saturated. Throws
/// IsolatedEdge for graphs with a K2 component, BudgetExceeded when
/// k_max < Delta, InvalidArgument for r = 0 or k_max above kMaxSolverColours.
SolverResult chi_exact(const Graph& g, std::uint32_t r, const SolverConfig& config = {});

struct ScanOptions {
  /// Bound Delta + c. When unset, the Delta + 2 bound is used with K2 and C5
  /// as the documented exceptions for r = 1.
  std::optional<std::size_t> custom_c;
  SolverConfig solver;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

struct ScanEntry {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t bound = 0;
  /// Non-empty when the graph is outside the bound's scope ("K2", "C5",
  /// "isolated-edge").
  std::string excluded;
  /// Set when the solver rejected this graph (e.g. BudgetExceeded).
  std::string error;
  std::optional<SolverResult> result;
  bool violation = false;
};

struct ScanReport {
  std::uint32_t r = 0;
  std::vector<ScanEntry> entries;
  std::size_t violations = 0;
  std::size_t excluded = 0;
  std::size_t timeouts = 0;
};

/// Solves every graph exactly and flags values above the requested bound.
/// Timeouts are recorded and the scan continues.
ScanReport conjecture_scan(std::span<const Graph> graphs, std::uint32_t r, const ScanOptions& options = {});

/// True when g is a 5-cycle.
bool is_c5(const Graph& g);

}  // namespace chromadist
