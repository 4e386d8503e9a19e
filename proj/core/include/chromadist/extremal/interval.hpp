#pragma once

#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromadist::extremal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Largest / smallest rational with `bits` significant bits that is <= / >= x.
/// x must be positive.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

/// Enclosure of exp(x) whose endpoints carry about `bits` significant bits.
/// exp(0) is exactly [1, 1].
Interval exp_interval(const Rational& x, unsigned bits);

/// Exact parse of "3", "0.25" or "1/4".
Rational parse_rational(std::string_view text);

}  // namespace chromadist::extremal
