#include <gtest/gtest.h>
#include <mpfr.h>

#include "chromadist/error.hpp"
#include "chromadist/extremal/certificates.hpp"

using namespace chromadist::extremal;

namespace {

// Correctly rounded bracket [exp(x)]_down, [exp(x)]_up at `prec` bits via MPFR,
// with x = num / den given exactly as decimal strings.
struct MpfrBracket {
  double lo, hi;
};

MpfrBracket mpfr_exp_bracket(const Rational& x, mpfr_prec_t prec) {
  mpfr_t num, den, q, e;
  mpfr_inits2(prec, num, den, q, e, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_str(num, numerator(x).str().c_str(), 10, MPFR_RNDN);
  mpfr_set_str(den, denominator(x).str().c_str(), 10, MPFR_RNDN);
  MpfrBracket out{};
  mpfr_div(q, num, den, MPFR_RNDD);
  mpfr_exp(e, q, MPFR_RNDD);
  out.lo = mpfr_get_d(e, MPFR_RNDD);
  mpfr_div(q, num, den, MPFR_RNDU);
  mpfr_exp(e, q, MPFR_RNDU);
  out.hi = mpfr_get_d(e, MPFR_RNDU);
  mpfr_clears(num, den, q, e, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// C(n, k) for k <= kmax through Pascal's rule, one row at a time.
BigInt pascal_binomial(std::uint64_t n, std::uint64_t k) {
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

BigInt ipow(BigInt b, unsigned e) {
  BigInt out = 1;
  while (e--) out *= b;
  return out;
}

bool oracle_palette_verdict(std::uint32_t r, std::uint64_t N, std::uint64_t C) {
  const BigInt lhs = 2 * ipow(BigInt(N) * (r - 1), r - 1) * ipow(BigInt(r - 2), r - 2);
  const std::uint64_t delta = 2 * N * (r - 1) * (r - 1);
  return lhs > pascal_binomial(delta + C, r - 1);
}

}  // namespace

TEST(Interval, ExpZeroIsExact) {
  const auto i = exp_interval(Rational(0), 64);
  EXPECT_EQ(i.lo, 1);
  EXPECT_EQ(i.hi, 1);
}

TEST(Interval, ExpEnclosesMpfrValue) {
  const std::vector<Rational> xs{Rational(1),    Rational(-1),   Rational(1, 3),   Rational(-170, 15),
                                 Rational(25, 2), Rational(-90), Rational(7, 1000), Rational(-53, 9)};
  for (const auto& x : xs) {
    for (unsigned bits : {64u, 128u, 256u}) {
      const auto iv = exp_interval(x, bits);
      ASSERT_LE(iv.lo, iv.hi);
      const auto ref = mpfr_exp_bracket(x, 200);
      // The interval must overlap MPFR's bracket, and be tight relative to it.
      EXPECT_LE(static_cast<double>(iv.lo), ref.hi * (1 + 1e-15)) << x.str();
      EXPECT_GE(static_cast<double>(iv.hi), ref.lo * (1 - 1e-15)) << x.str();
      const double width = static_cast<double>((iv.hi - iv.lo) / iv.lo);
      EXPECT_LT(width, 1e-15) << x.str() << " bits " << bits;
    }
  }
}

TEST(Interval, RoundingIsOutward) {
  const Rational third(1, 3);
  for (unsigned bits : {8u, 53u, 100u}) {
    const auto lo = round_down(third, bits);
    const auto hi = round_up(third, bits);
    EXPECT_LT(lo, third);
    EXPECT_GT(hi, third);
    EXPECT_LT(hi - lo, Rational(1, 1) / Rational(BigInt(1) << (bits - 2)));
  }
  EXPECT_EQ(round_down(Rational(3, 4), 8), Rational(3, 4));
  EXPECT_THROW(round_up(Rational(-3, 4), 8), chromadist::Error);
}

TEST(Interval, ParseRational) {
  EXPECT_EQ(parse_rational("1/4"), Rational(1, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_THROW(parse_rational("1/0"), chromadist::Error);
  EXPECT_THROW(parse_rational("x"), chromadist::Error);
}

TEST(PaletteCertificate, MatchesPascalOracle) {
  for (std::uint32_t r = 3; r <= 9; ++r) {
    for (std::uint64_t N : {1, 2, 5, 13, 59}) {
      for (std::uint64_t C : {0, 300}) {
        const auto cert = palette_count_certificate(r, N, C);
        EXPECT_EQ(cert.verdict, oracle_palette_verdict(r, N, C)) << r << " " << N << " " << C;
        EXPECT_EQ(cert.max_degree, BigInt(2 * N * (r - 1) * (r - 1)));
        EXPECT_EQ(cert.rhs, pascal_binomial(2 * N * (r - 1) * (r - 1) + C, r - 1));
        EXPECT_FALSE(cert.derivation.empty());
      }
    }
  }
  // Special-vertex counts agree with the generator's closed form at r = 3.
  EXPECT_EQ(palette_count_certificate(3, 1, 0).lhs, 8);
  EXPECT_EQ(palette_count_certificate(3, 2, 0).lhs, 32);
}

// Thresholds frozen from the oracle scan below.
TEST(PaletteCertificate, ThresholdsAtC300) {
  const std::pair<std::uint32_t, std::uint64_t> expected[] = {{7, 59}, {8, 13}, {9, 6}};
  std::uint64_t previous = UINT64_MAX;
  for (const auto& [r, n] : expected) {
    std::uint64_t first = 0;
    for (std::uint64_t N = 1; N <= 120 && !first; ++N) {
      if (oracle_palette_verdict(r, N, 300)) first = N;
    }
    ASSERT_EQ(first, n) << "oracle disagrees with the frozen threshold for r = " << r;
    const auto search = find_palette_threshold(r, 300, 2000);
    ASSERT_TRUE(search.threshold);
    EXPECT_EQ(*search.threshold, n);
    EXPECT_TRUE(search.confirmed);
    EXPECT_TRUE(search.reversals.empty());
    EXPECT_LT(*search.threshold, previous);
    previous = *search.threshold;
  }
}

TEST(MarginCheck, HoldsFromNineOn) {
  for (std::uint32_t r = 3; r <= 20; ++r) {
    // (2(r-2)/11)^(r-2) > 11/4  <=>  4 (2(r-2))^(r-2) > 11^(r-1)
    const bool expected = 4 * ipow(BigInt(2 * (r - 2)), r - 2) > ipow(BigInt(11), r - 1);
    const auto m = asymptotic_margin_check(r);
    EXPECT_EQ(m.holds, expected) << r;
    EXPECT_EQ(m.holds, r >= 9) << r;
    EXPECT_EQ(m.target, Rational(11, 4));
  }
  EXPECT_TRUE(asymptotic_margin_check(9).increasing);
}

TEST(BinomialBounds, HoldOnTheFullTriangle) {
  // Independent e bound: 2.71828 < e.
  const Rational e_low(271828, 100000);
  for (std::uint64_t a = 1; a <= 60; ++a) {
    for (std::uint64_t b = 1; b <= a; ++b) {
      const auto res = binomial_bounds_check(a, b);
      ASSERT_TRUE(res.all()) << a << " " << b;
      const BigInt binom = pascal_binomial(a, b);
      BigInt fact = 1;
      for (std::uint64_t i = 2; i <= b; ++i) fact *= i;
      EXPECT_LE(ipow(BigInt(a), b), binom * ipow(BigInt(b), b));
      EXPECT_LE(binom * fact, ipow(BigInt(a), b));
      Rational e_pow = 1;
      for (std::uint64_t i = 0; i < b; ++i) e_pow *= e_low;
      EXPECT_LE(Rational(ipow(BigInt(b), b)), Rational(fact) * e_pow);
    }
  }
  EXPECT_LT(e_lower_bound(), Rational(2718281829, 1000000000));
  EXPECT_THROW(binomial_bounds_check(3, 4), chromadist::Error);
}

TEST(Observation2, GridHoldsAndAgreesWithMpfr) {
  for (const char* eps : {"1", "1/2", "1/4", "1/10"}) {
    const Rational e = parse_rational(eps);
    for (std::uint32_t r = 1; r <= 10; ++r) {
      const auto res = observation2_check(e, r);
      EXPECT_TRUE(res.holds()) << eps << " r=" << r;
      // density: eps^-2 exp(10 (1 - 1/eps)) <= eps^2
      const auto d = mpfr_exp_bracket(10 * (1 - 1 / e), 200);
      EXPECT_LE(d.hi / static_cast<double>(e * e), static_cast<double>(e * e) * (1 + 1e-12));
      // tail: 2 (5r + 100) exp(-(4r + 170) / 15) <= 1 / (100 r)
      const auto t = mpfr_exp_bracket(-Rational(4 * r + 170, 15), 200);
      EXPECT_LE(2.0 * (5 * r + 100) * t.hi, 1.0 / (100.0 * r));
    }
  }
}

TEST(Observation2, InsufficientPrecisionIsUndetermined) {
  // A cap below the 64-bit starting precision leaves both sides open.
  const auto res = observation2_check(Rational(1), 1, 32);
  EXPECT_EQ(res.tail.verdict, Verdict::Undetermined);
  EXPECT_FALSE(res.holds());
  // At eps = 1 the density side is the equality 1 <= 1.
  const auto exact = observation2_check(Rational(1), 1);
  EXPECT_EQ(exact.density.verdict, Verdict::True);
  EXPECT_EQ(exact.density.precision_bits, 64u);
}
