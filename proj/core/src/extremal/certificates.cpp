#include "chromadist/extremal/certificates.hpp"

#include "chromadist/error.hpp"

namespace chromadist::extremal {

namespace {

BigInt power(BigInt base, std::uint64_t exp) {
  BigInt out = 1;
  while (exp) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

Rational power(const Rational& base, std::uint64_t exp) {
  return Rational(power(boost::multiprecision::numerator(base), exp),
                  power(boost::multiprecision::denominator(base), exp));
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < k) return 0;
  BigInt out = 1;
  // Each prefix product out * (n - i) / (i + 1) is itself a binomial.
  for (std::uint64_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

BigInt factorial(std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

Certificate palette_count_certificate(std::uint32_t r, std::uint64_t n_scale, std::uint64_t c) {
  if (r < 3) throw Error(ErrorCode::InvalidArgument, "certificate needs r >= 3");
  if (n_scale < 1) throw Error(ErrorCode::InvalidArgument, "certificate needs N >= 1");
  Certificate cert;
  cert.r = r;
  cert.n_scale = n_scale;
  cert.c = c;
  const BigInt big_n = n_scale;
  const std::uint64_t rm1 = r - 1;
  const std::uint64_t rm2 = r - 2;
  cert.max_degree = 2 * big_n * rm1 * rm1;
  cert.lhs = 2 * power(BigInt(big_n * rm1), rm1) * power(BigInt(rm2), rm2);
  cert.rhs = binomial(BigInt(cert.max_degree + c), rm1);
  cert.verdict = cert.lhs > cert.rhs;

  auto& log = cert.derivation;
  log.push_back("backbone: de Bruijn graph D(" + BigInt(big_n * rm2 * rm1).str() + ", " + std::to_string(rm2) +
                "), order [N(r-1)(r-2)]^(r-2), eccentricity <= r-2");
  log.push_back("each backbone vertex carries 2N copies of K_r, each adding r-1 special vertices of degree r-1");
  log.push_back("special vertices = 2 [N(r-1)]^(r-1) (r-2)^(r-2) = " + cert.lhs.str());
  log.push_back("special vertices are pairwise within distance r, so their palettes must differ");
  log.push_back("max degree = 2N(r-1)^2 = " + cert.max_degree.str());
  log.push_back("palettes of size r-1 from max degree + C = " + BigInt(cert.max_degree + c).str() +
                " colours: binom(" + BigInt(cert.max_degree + c).str() + ", " + std::to_string(rm1) + ") = " +
                cert.rhs.str());
  log.push_back(cert.verdict ? "special vertices > palettes: no colouring with max degree + C colours exists"
                             : "special vertices <= palettes: the count does not refute max degree + C colours");
  return cert;
}

ThresholdSearch find_palette_threshold(std::uint32_t r, std::uint64_t c, std::uint64_t max_n, std::uint64_t confirm) {
  ThresholdSearch out;
  out.r = r;
  out.c = c;
  out.confirm = confirm;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (palette_count_certificate(r, n, c).verdict) {
      out.threshold = n;
      break;
    }
  }
  if (!out.threshold) return out;
  for (std::uint64_t n = *out.threshold + 1; n <= *out.threshold + confirm; ++n) {
    if (!palette_count_certificate(r, n, c).verdict) out.reversals.push_back(n);
  }
  out.confirmed = out.reversals.empty();
  return out;
}

MarginCheck asymptotic_margin_check(std::uint32_t r) {
  if (r < 3) throw Error(ErrorCode::InvalidArgument, "margin check needs r >= 3");
  auto value_at = [](std::uint32_t s) { return power(Rational(2 * (s - 2), 11), s - 2); };
  MarginCheck m;
  m.r = r;
  m.value = value_at(r);
  m.target = Rational(11, 4);
  m.holds = m.value > m.target;
  m.next_value = value_at(r + 1);
  m.increasing = m.next_value > m.value;
  return m;
}

Rational e_lower_bound() { return Rational(2718281828, 1000000000); }

BinomialBounds binomial_bounds_check(std::uint64_t a, std::uint64_t b) {
  if (b < 1 || b > a) throw Error(ErrorCode::InvalidArgument, "binomial bounds need 1 <= b <= a");
  BinomialBounds out;
  out.a = a;
  out.b = b;
  const Rational ratio(a, b);
  const Rational binom(binomial(BigInt(a), b));
  const Rational middle(power(BigInt(a), b), factorial(b));
  out.lower = power(ratio, b) <= binom;
  out.middle = binom <= middle;
  out.upper = middle <= power(e_lower_bound() * ratio, b);
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

// Decides lhs <= rhs where lhs = factor * exp(exponent), factor > 0.
InequalityCheck decide(const Rational& exponent, const Rational& factor, const Rational& rhs, unsigned max_bits) {
  InequalityCheck out;
  out.rhs = rhs;
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    const Interval e = exp_interval(exponent, bits);
    out.lhs = {e.lo * factor, e.hi * factor};
    out.precision_bits = bits;
    if (out.lhs.hi <= rhs) {
      out.verdict = Verdict::True;
      return out;
    }
    if (out.lhs.lo > rhs) {
      out.verdict = Verdict::False;
      return out;
    }
  }
  out.verdict = Verdict::Undetermined;
  return out;
}

}  // namespace

Observation2Result observation2_check(const Rational& epsilon, std::uint32_t r, unsigned max_bits) {
  if (epsilon <= 0 || epsilon > 1) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1]");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  Observation2Result out;
  out.epsilon = epsilon;
  out.r = r;
  const Rational eps2 = epsilon * epsilon;
  out.density = decide(10 * (1 - 1 / epsilon), 1 / eps2, eps2, max_bits);
  out.tail = decide(-Rational(4 * r + 170, 15), Rational(2 * (5 * r + 100)), Rational(1, 100 * r), max_bits);
  return out;
}

}  // namespace chromadist::extremal
