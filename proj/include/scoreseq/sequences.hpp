#pragma once

// Exact integer sequences: the Erdős–Ginzburg–Ziv numbers N_n from their
// divisor-sum closed form, the score-sequence counts S_n from the
// convolution recurrence n S_n = sum_{k=1}^{n} N_k S_{n-k}, the strong
// (single irreducible part) counts from renewal inversion, and the table
// A[n][m] of counts refined by number of irreducible parts.

#include "scoreseq/exactnum.hpp"

#include <cstdint>
#include <vector>

namespace scoreseq {

enum class SeqKind { score_counts, egz_numbers, strong_counts, generic };

// Finite prefix of an exact integer sequence indexed from 0. Sequences
// defined only for n >= 1 (egz_numbers, strong_counts) carry a
// placeholder 0 at index 0.
struct IntSeq {
  std::vector<BigInt> values;
  SeqKind kind = SeqKind::generic;

  std::size_t max_index() const { return values.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return values[i]; }
};

// N_n = sum over d | n of (-1)^{n+d} binomial(2d, d) phi(n/d) / (2n).
// The divisor sum is accumulated exactly and must be divisible by 2n;
// a non-exact division signals an internal error (std::logic_error).
BigInt egz_number(std::uint64_t n);

// N_1..N_{n_max} in one pass using sieved totients and an incrementally
// updated central binomial.
IntSeq egz_table(std::uint64_t n_max);

// S_0 = 1 and S_n = (1/n) sum_{k=1}^{n} N_k S_{n-k}; the division is
// checked exact. The second form reuses an already built EGZ table
// covering at least n_max.
IntSeq score_counts(std::uint64_t n_max);
IntSeq score_counts(const IntSeq& egz, std::uint64_t n_max);

// Strong counts T_n recovered by inverting the renewal convolution
// S_n = sum_{k=1}^{n} T_k S_{n-k}.
IntSeq strong_counts(std::uint64_t n_max);

// Triangular table A[n][m] = number of score sequences of length n with
// exactly m irreducible parts, 1 <= m <= n. Row sums equal S_n and
// A[n][1] is the strong count.
struct PartsTable {
  std::uint64_t n_max = 0;
  std::vector<std::vector<BigInt>> rows;  // rows[n][m-1], rows[0] unused

  const BigInt& at(std::uint64_t n, std::uint64_t m) const;
};

PartsTable parts_table(std::uint64_t n_max);

// E[1/I_n]: the mean inverse number of irreducible parts of a uniformly
// random length-n score sequence, (sum_m A[n][m]/m) / S_n, exact.
BigRat mean_inverse_parts(const PartsTable& table, std::uint64_t n);

}  // namespace scoreseq
