#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromadist/extremal/interval.hpp"

namespace chromadist::extremal {

/// Pigeonhole certificate for the lower-bound graph G'(r, N): its special
/// vertices have degree r - 1 and are pairwise r-adjacent, so a colouring
/// with Delta(G') + C colours needs more distinct (r-1)-subsets than exist.
struct Certificate {
  std::uint32_t r = 0;
  std::uint64_t n_scale = 0;
  std::uint64_t c = 0;
  BigInt max_degree;  // 2 N (r-1)^2
  BigInt lhs;         // 2 [N (r-1)]^(r-1) (r-2)^(r-2), the special vertices
  BigInt rhs;         // binom(max_degree + C, r - 1), the available palettes
  bool verdict = false;  // lhs > rhs
  std::vector<std::string> derivation;
};

/// Throws InvalidArgument unless r >= 3 and N >= 1.
Certificate palette_count_certificate(std::uint32_t r, std::uint64_t n_scale, std::uint64_t c);

struct ThresholdSearch {
  std::uint32_t r = 0;
  std::uint64_t c = 0;
  /// Least N with a true verdict, if one was found up to max_n.
  std::optional<std::uint64_t> threshold;
  /// The verdict stayed true on threshold .. threshold + confirm.
  bool confirmed = false;
  std::uint64_t confirm = 0;
  /// N values past the threshold whose verdict was false.
  std::vector<std::uint64_t> reversals;
};

/// Scans N = 1, 2, ... up to max_n for the first true verdict, then checks
/// the next `confirm` values.
ThresholdSearch find_palette_threshold(std::uint32_t r, std::uint64_t c, std::uint64_t max_n,
                                       std::uint64_t confirm = 50);

struct MarginCheck {
  std::uint32_t r = 0;
  Rational value;       // (2 (r-2) / 11)^(r-2)
  Rational target;      // 11/4
  bool holds = false;   // value > target
  Rational next_value;  // the same at r + 1
  bool increasing = false;  // next_value > value
};

/// Throws InvalidArgument for r < 3.
MarginCheck asymptotic_margin_check(std::uint32_t r);

/// Rational lower bound on e used where e appears on the larger side.
Rational e_lower_bound();

struct BinomialBounds {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool lower = false;   // (a/b)^b <= binom(a, b)
  bool middle = false;  // binom(a, b) <= a^b / b!
  bool upper = false;   // a^b / b! <= (e a / b)^b
  bool all() const { return lower && middle && upper; }
};

/// Throws InvalidArgument unless 1 <= b <= a.
BinomialBounds binomial_bounds_check(std::uint64_t a, std::uint64_t b);

enum class Verdict { True, False, Undetermined };

const char* to_string(Verdict v);

struct InequalityCheck {
  Verdict verdict = Verdict::Undetermined;
  unsigned precision_bits = 0;  // precision at which the verdict was reached
  Interval lhs;
  Rational rhs;
};

struct Observation2Result {
  Rational epsilon;
  std::uint32_t r = 0;
  /// e^(10 (1 - 1/eps)) eps^-2 <= eps^2
  InequalityCheck density;
  /// 2 e^(-(4r + 170) / 15) (5r + 100) <= 1 / (100 r)
  InequalityCheck tail;
  bool holds() const { return density.verdict == Verdict::True && tail.verdict == Verdict::True; }
};

/// Decides both inequalities with outward-rounded enclosures, doubling the
/// precision from 64 bits until a verdict is certain or max_bits is passed.
/// Throws InvalidArgument unless 0 < eps <= 1 and r >= 1.
Observation2Result observation2_check(const Rational& epsilon, std::uint32_t r, unsigned max_bits = 4096);

}  // namespace chromadist::extremal
