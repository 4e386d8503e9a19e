#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chromadist::harness {

enum class Command { Gen, Colour, Solve, Construct, Verify, Certificate, Scan, Census, Bench };
enum class Format { Json, Csv, Text };

std::string_view to_string(Command c);
std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,      // bad flags, unreadable or malformed input
  kExitConflicts = 2,  // verification found conflicts, or a scan found a violation
  kExitGuard = 3,      // a precondition guard fired (IsolatedEdge, DegreeRatioViolated, ...)
  kExitBudget = 4,     // timeout or exhausted budget
};

/// Fully resolved options of one invocation. Every report echoes it.
struct RunConfig {
  Command command = Command::Verify;
  /// Positional inputs: graph file, then colouring file for verify.
  std::vector<std::string> inputs;
  /// Report destination; empty writes to the output stream.
  std::string output;
  /// Colouring destination for colour / construct / solve.
  std::string colouring_out;
  Format format = Format::Json;

  std::uint64_t seed = 0;
  std::uint32_t r = 1;
  std::string epsilon = "1";
  std::optional<std::size_t> kmax;
  double time_limit = 60.0;
  std::optional<std::uint64_t> max_resamples;
  std::size_t threads = 1;

  // solve / scan
  std::string edge_order = "degeneracy";
  bool symmetry_break = true;
  std::optional<std::size_t> custom_c;

  // colour / construct
  std::string method;

  // gen
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> param;
  std::size_t t = 2;
  std::size_t k = 1;
  std::size_t n_scale = 1;

  // certificate
  std::string certificate_kind = "palette";
  std::uint64_t c = 0;
  std::optional<std::uint64_t> sweep_n;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  // census
  std::uint64_t trials = 100;

  // bench
  std::string suite;
};

/// Seed resolution: an explicit flag wins, then CHROMADIST_SEED, then entropy.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Executes the command. Reports go to `out` (or config.output), diagnostics
/// to `err`. Returns one of the ExitCode values.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace chromadist::harness
