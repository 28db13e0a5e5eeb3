#pragma once

// Lattice bridges and score sequences. A bridge of length 2n is a +-1
// walk from 0 back to 0, stored as its strictly increasing list of
// down-step times; its sawtooth area is the signed diamond count against
// the reference bridge that steps down at every odd time. Score
// sequences of length n embed into bridges via d_i = s_i + i, and that
// encoding turns Landau's partial-sum conditions into area conditions.
// The exhaustive enumerators here double as brute-force oracles for the
// closed-form counts.

#include "scoreseq/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace scoreseq {

// Exhaustive enumeration is kept to small n by default; callers may
// raise the bound explicitly (cost grows like binomial(2n, n)).
inline constexpr std::uint32_t kDefaultEnumBound = 10;

class Bridge {
 public:
  // down_steps must be strictly increasing within [1, 2n] and contain
  // exactly n entries; throws std::invalid_argument otherwise.
  Bridge(std::uint32_t half_length, std::vector<std::uint32_t> down_steps);

  std::uint32_t half_length() const { return n_; }
  const std::vector<std::uint32_t>& down_steps() const { return down_; }

  // B_0..B_{2n}.
  std::vector<std::int32_t> walk() const;

  bool ends_with_up_step() const { return down_.back() != 2 * n_; }

  friend bool operator==(const Bridge&, const Bridge&) = default;
  friend auto operator<=>(const Bridge&, const Bridge&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> down_;
};

class ScoreSeq {
 public:
  // scores must be nondecreasing in [0, n-1], sum to n(n-1)/2, and have
  // partial sums >= k(k-1)/2; throws std::invalid_argument otherwise.
  explicit ScoreSeq(std::vector<std::uint32_t> scores);

  std::uint32_t length() const { return static_cast<std::uint32_t>(scores_.size()); }
  const std::vector<std::uint32_t>& scores() const { return scores_; }

  friend bool operator==(const ScoreSeq&, const ScoreSeq&) = default;
  friend auto operator<=>(const ScoreSeq&, const ScoreSeq&) = default;

 private:
  std::vector<std::uint32_t> scores_;
};

// Sawtooth area a(B) = -n^2 + sum of down-step times.
std::int64_t sawtooth_area(const Bridge& b);

// Same area from the step decomposition (1/2)[n + sum (2n+1-t) dB_t].
std::int64_t sawtooth_area_step_form(const Bridge& b);

// Times 0 < k <= n with B_{2k} = 0, ascending. Always ends with n.
std::vector<std::uint32_t> zero_return_times(const Bridge& b);

// Area of the length-2k prefix treated as a bridge of half-length k.
// Only defined at return times; throws std::invalid_argument if
// B_{2k} != 0.
std::int64_t prefix_area(const Bridge& b, std::uint32_t k);

// Landau validity of a raw integer list (n = list length; empty is
// vacuously valid).
bool is_score_sequence(const std::vector<std::int64_t>& s);

// Encoding d_i = s_i + i. The image always has sawtooth area 0.
Bridge bridge_from_scores(const ScoreSeq& s);

// Inverse encoding s_i = d_i - i, empty when the result is not a valid
// score sequence.
std::optional<ScoreSeq> scores_from_bridge(const Bridge& b);

// All score sequences of length n in lexicographic order.
std::vector<ScoreSeq> enumerate_score_sequences(std::uint32_t n,
                                                std::uint32_t bound = kDefaultEnumBound);

// All bridges of length 2n with sawtooth area divisible by n.
std::vector<Bridge> enumerate_bridges_area_zero_mod_n(std::uint32_t n,
                                                      std::uint32_t bound = kDefaultEnumBound);

// Up/down reflection: the new down-step set is the complement of the old
// one. Involution; maps area a to n - a.
Bridge reflect(const Bridge& b);

// Count of n-element subsets of {1, ..., 2n-1} with sum divisible by n.
BigInt brute_force_egz(std::uint32_t n, std::uint32_t bound = kDefaultEnumBound);

}  // namespace scoreseq
