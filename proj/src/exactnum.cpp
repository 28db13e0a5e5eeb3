#include "scoreseq/exactnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace scoreseq {

BigRat make_rat(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  BigRat q;
  mpz_set(mpq_numref(q.get_mpq_t()), num.get_mpz_t());
  mpz_set(mpq_denref(q.get_mpq_t()), den.get_mpz_t());
  q.canonicalize();
  return q;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt central_binomial(std::uint64_t d) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * d, d);
  return b;
}

namespace {

BigRat sum_range(std::span<const BigRat> terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return terms[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return sum_range(terms, lo, mid) + sum_range(terms, mid, hi);
}

}  // namespace

BigRat exact_sum(std::span<const BigRat> terms) {
  if (terms.empty()) return BigRat(0);
  return sum_range(terms, 0, terms.size());
}

SpfSieve::SpfSieve(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("SpfSieve: limit must be positive");
  if (limit > 0xFFFFFFFFull) throw std::invalid_argument("SpfSieve: limit too large");
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

std::uint64_t SpfSieve::smallest_factor(std::uint64_t n) const {
  if (n < 2 || n > limit_) throw std::out_of_range("SpfSieve::smallest_factor");
  return spf_[n];
}

std::uint64_t SpfSieve::totient(std::uint64_t n) const {
  if (n == 0 || n > limit_) throw std::out_of_range("SpfSieve::totient");
  std::uint64_t result = 1;
  while (n > 1) {
    std::uint64_t p = spf_[n];
    std::uint64_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    result *= pk - pk / p;
  }
  return result;
}

std::vector<std::uint64_t> SpfSieve::divisors(std::uint64_t n) const {
  if (n == 0 || n > limit_) throw std::out_of_range("SpfSieve::divisors");
  std::vector<std::uint64_t> divs{1};
  while (n > 1) {
    std::uint64_t p = spf_[n];
    std::size_t base = divs.size();
    std::uint64_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace scoreseq
