#pragma once

// Exact arithmetic and the small number-theoretic toolkit used by the
// counting formulas: arbitrary-precision integers/rationals (GMP),
// Euler's totient, divisor lists, central binomial coefficients, and a
// smallest-prime-factor sieve for batched table generation.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace scoreseq {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Reduced rational num/den with positive denominator. Throws
// std::invalid_argument when den == 0.
BigRat make_rat(BigInt num, BigInt den);

// Euler's totient of n >= 1 by trial-division factorization.
std::uint64_t totient(std::uint64_t n);

// All divisors of n >= 1, ascending, including 1 and n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// binomial(2d, d), exact.
BigInt central_binomial(std::uint64_t d);

// Exact sum of a span of rationals. Pairwise merging keeps the
// intermediate denominators small when summing long prefixes.
BigRat exact_sum(std::span<const BigRat> terms);

// Smallest-prime-factor sieve over [2, limit]. Backs the batched
// totient/divisor queries of the table builders; single-shot queries go
// through the trial-division functions above.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  // Smallest prime factor of n in [2, limit].
  std::uint64_t smallest_factor(std::uint64_t n) const;

  // Totient of n in [1, limit].
  std::uint64_t totient(std::uint64_t n) const;

  // Divisors of n in [1, limit], ascending.
  std::vector<std::uint64_t> divisors(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace scoreseq
