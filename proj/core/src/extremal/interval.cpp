#include "chromadist/extremal/interval.hpp"

#include <string>

#include "chromadist/error.hpp"

namespace chromadist::extremal {

namespace {

long msb(const BigInt& v) { return static_cast<long>(boost::multiprecision::msb(v)); }

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a) ++q;
  return q;
}

Rational scaled(const BigInt& m, long shift) {
  // m * 2^-shift
  if (shift >= 0) return Rational(m, BigInt(1) << shift);
  return Rational(m << -shift);
}

template <bool Up>
Rational round_bits(const Rational& x, unsigned bits) {
  if (x <= 0) throw Error(ErrorCode::InvalidArgument, "outward rounding needs a positive value");
  const BigInt n = boost::multiprecision::numerator(x);
  const BigInt d = boost::multiprecision::denominator(x);
  const long shift = static_cast<long>(bits) - (msb(n) - msb(d));
  BigInt num = n;
  BigInt den = d;
  if (shift >= 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  return scaled(Up ? ceil_div(num, den) : BigInt(num / den), shift);
}

}  // namespace

Rational round_down(const Rational& x, unsigned bits) { return round_bits<false>(x, bits); }
Rational round_up(const Rational& x, unsigned bits) { return round_bits<true>(x, bits); }

Interval exp_interval(const Rational& x, unsigned bits) {
  if (x == 0) return {Rational(1), Rational(1)};
  if (x < 0) {
    const Interval pos = exp_interval(-x, bits + 2);
    return {round_down(1 / pos.hi, bits), round_up(1 / pos.lo, bits)};
  }
  // exp(x) = exp(y)^(2^s) with 0 < y <= 1/2.
  unsigned s = 0;
  Rational y = x;
  while (y > Rational(1, 2)) {
    y /= 2;
    ++s;
  }
  const unsigned w = bits + s + 8;
  const Rational tiny = Rational(1, BigInt(1) << (w + 2));
  Rational lo = 1, hi = 1;
  Rational term_lo = 1, term_hi = 1;
  for (unsigned j = 1;; ++j) {
    term_lo = round_down(term_lo * y / j, w);
    term_hi = round_up(term_hi * y / j, w);
    lo = round_down(lo + term_lo, w);
    hi = round_up(hi + term_hi, w);
    if (term_hi < tiny) {
      // Tail after term j is at most 2 * y^(j+1) / (j+1)!.
      hi = round_up(hi + 2 * term_hi * y / (j + 1), w);
      break;
    }
  }
  for (unsigned i = 0; i < s; ++i) {
    lo = round_down(lo * lo, w);
    hi = round_up(hi * hi, w);
  }
  return {round_down(lo, bits), round_up(hi, bits)};
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "cannot parse rational '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') throw bad();
    }
    return BigInt(std::string(s));
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty()) throw bad();
    const bool negative = !whole.empty() && whole[0] == '-';
    const BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Rational f(parse_int(frac), scale);
    return negative ? Rational(w) - f : Rational(w) + f;
  }
  return Rational(parse_int(text));
}

}  // namespace chromadist::extremal
