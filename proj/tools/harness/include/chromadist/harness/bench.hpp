#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromadist/graph.hpp"

namespace chromadist::harness {

/// A CSV table with fixed columns. Cells are pre-formatted strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

inline constexpr std::string_view kBenchSuites[] = {"regular-sweep", "conjecture-scan", "census-sweep",
                                                    "certificate-sweep"};

bool is_bench_suite(std::string_view name);

/// regular-sweep: construct_dense over d in {6, 8, 10}, n = 200, r in {1, 2},
/// five derived seeds per (d, r). One row per cell; a failing cell records
/// its error and the sweep continues.
Table bench_regular_sweep(std::uint64_t seed);

/// conjecture-scan: exact values against Delta + 2 over `corpus` (r = 1).
Table bench_conjecture_scan(const std::vector<Graph>& corpus, double time_limit);

/// census-sweep: event_census on random 20-regular graphs for r in {1, 2}.
Table bench_census_sweep(std::uint64_t seed, std::uint64_t trials);

/// certificate-sweep: margin check and N-threshold per r = 3..10, C in {0, 300}.
Table bench_certificate_sweep();

/// A small built-in corpus: paths, cycles, stars and complete graphs on up to
/// six vertices, used when conjecture-scan gets no input file.
std::vector<Graph> builtin_small_corpus();

/// Throws InvalidArgument for an unknown suite.
Table run_bench(std::string_view suite, std::uint64_t seed, const std::optional<std::string>& corpus_path,
                double time_limit, std::uint64_t trials);

}  // namespace chromadist::harness
