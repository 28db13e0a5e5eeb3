#pragma once

// The discrete Lévy–Khintchine transform on sequence prefixes: the pair
// of exact convolution recursions
//
//   n a_n = sum_{k=1}^{n} a*_k a_{n-k}        (forward: a -> a*)
//
// together with the infinite-divisibility criterion (a* nonnegative),
// the induced asymptotic estimator a_n ~ (a*_n/n) exp(sum a*_k/k), and
// the score-count limit constant lim n^{5/2} S_n / 4^n.

#include "scoreseq/bigfloat.hpp"
#include "scoreseq/exactnum.hpp"
#include "scoreseq/sequences.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace scoreseq {

// Finite prefix of an exact rational sequence indexed from 0. Forward
// inputs start with a_0 = 1; transforms start with a*_0 = 0.
using RatSeq = std::vector<BigRat>;

// Integer prefix reinterpreted as rationals.
RatSeq to_ratseq(const IntSeq& s);

// Entrywise a_n * c^n. The transform commutes with this rescaling.
RatSeq scale_by_powers(const RatSeq& a, const BigRat& c);

// a* with a*_0 = 0 and a*_n = n a_n - sum_{k=1}^{n-1} a*_k a_{n-k}.
// Requires a_0 = 1.
RatSeq lk_forward(const RatSeq& a);

// a with a_0 = 1 and a_n = (1/n) sum_{k=1}^{n} a*_k a_{n-k}. Requires
// a*_0 = 0. Inverse of lk_forward on prefixes.
RatSeq lk_inverse(const RatSeq& a_star);

// Verdict of the nonnegativity criterion on a prefix. The verdict
// certifies the inspected prefix only.
struct LKReport {
  RatSeq transform;
  bool all_nonnegative = false;
  std::optional<std::size_t> first_negative_index;
  BigRat normalization;       // sum of a_k over the prefix
  std::size_t verified_to = 0;  // largest index inspected
};

// Requires a_0 = 1 and a_n > 0 for all entries.
LKReport check_infinite_divisibility(const RatSeq& a);

struct AsymptoticsConfig {
  BigRat gamma;              // regular-variation index, must be < 0
  std::size_t truncation = 1;  // K, number of terms kept in the exponent sum
  int digits = 10;           // output precision in significant digits
};

// (a*_n/n) exp(sum_{k=1}^{K} a*_k/k), the exponent sum exact, one
// high-precision exponentiation at the end.
BigFloat asymptotic_estimate(const RatSeq& a_star, const AsymptoticsConfig& cfg,
                             std::size_t n);

// Empirical regular-variation index log2(a*_{2n}/a*_n); absent when the
// entries needed are missing or nonpositive.
std::optional<double> regular_variation_diagnostic(const RatSeq& a_star, std::size_t n);

struct MoserResult {
  BigFloat value;       // (1/(2 sqrt pi)) exp(sum_{k<=K} N_k/(k 4^k))
  BigFloat tail_bound;  // rigorous bound on (limit - value), rounded up
  std::size_t truncation = 0;
  int digits = 0;
};

// The truncated score-count limit constant with its truncation bound.
// The bound comes from N_k <= binomial(2k,k)/k <= 4^k / (k sqrt(pi k)),
// so the dropped exponent mass is at most (2/3) K^{-3/2} / sqrt(pi).
MoserResult moser_constant(std::size_t truncation, int digits);
MoserResult moser_constant(const IntSeq& egz, std::size_t truncation, int digits);

// n^{5/2} S_n / 4^n from the exact count, evaluated in high precision.
BigFloat moser_ratio(const BigInt& s_n, std::uint64_t n, int digits);

}  // namespace scoreseq
