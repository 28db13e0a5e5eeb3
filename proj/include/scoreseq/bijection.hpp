#pragma once

// The cyclic-shift correspondence between pairs (score bridge B, shift
// m < 2l(B)) and bridges with sawtooth area divisible by n, where l(B)
// is the half-length of the first irreducible part of B. Shifting only
// within the first irreducible part makes the assignment injective; the
// exhaustive verifier checks injectivity and surjectivity outright and
// in passing confirms the counting identity sum 2l(B) = 2 N_n.

#include "scoreseq/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scoreseq {

// Times 0 < k <= n at which both the walk and the prefix area vanish,
// i.e. the separation points of the irreducible parts. Throws
// std::invalid_argument unless b corresponds to a score sequence. The
// last entry is always n.
std::vector<std::uint32_t> irreducible_breakpoints(const Bridge& b);

// Smallest breakpoint: half-length of the first irreducible part.
std::uint32_t first_part_length(const Bridge& b);

// Left rotation of the increments by m in [0, 2n): down-step times map
// to ((d - m - 1) mod 2n) + 1. Preserves the area mod n.
Bridge cyclic_shift(const Bridge& b, std::uint32_t m);

// A score bridge together with a shift m < 2 * first_part_length.
class ShiftPair {
 public:
  ShiftPair(Bridge bridge, std::uint32_t shift);  // validates both halves

  const Bridge& bridge() const { return bridge_; }
  std::uint32_t shift() const { return shift_; }

  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;

 private:
  Bridge bridge_;
  std::uint32_t shift_;
};

// The pair (B, m) goes to B shifted left by m; the image has area
// divisible by n.
Bridge forward_map(const ShiftPair& p);

// The unique preimage of a bridge with area divisible by n, found by
// scanning all 2n rotations for score bridges with an admissible shift.
// Throws std::invalid_argument when the area condition fails and
// std::logic_error when the preimage is not unique (which would refute
// the correspondence).
ShiftPair inverse_map(const Bridge& b_prime);

struct BijectionReport {
  std::uint32_t n = 0;
  std::uint64_t domain_size = 0;    // sum of 2 l(B) over score bridges
  std::uint64_t codomain_size = 0;  // bridges with area divisible by n
  bool injective = false;
  bool surjective = false;
  std::vector<std::string> failures;

  bool bijective() const { return injective && surjective; }
};

// Exhaustive check of the correspondence at a given n.
BijectionReport verify_bijection(std::uint32_t n, std::uint32_t bound = kDefaultEnumBound);

}  // namespace scoreseq
