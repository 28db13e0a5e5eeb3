#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scoreseq/bijection.hpp"
#include "scoreseq/sequences.hpp"

#include <map>

using namespace scoreseq;

namespace {

Bridge bridge_of(std::vector<std::uint32_t> scores) {
  return bridge_from_scores(ScoreSeq(std::move(scores)));
}

}  // namespace

TEST_CASE("breakpoints of small score bridges") {
  // staircase: every even time is a fresh irreducible part
  CHECK(irreducible_breakpoints(bridge_of({0, 1, 2, 3})) ==
        std::vector<std::uint32_t>{1, 2, 3, 4});
  CHECK(irreducible_breakpoints(bridge_of({1, 1, 1})) == std::vector<std::uint32_t>{3});
  CHECK(irreducible_breakpoints(bridge_of({0, 2, 2, 2})) == std::vector<std::uint32_t>{1, 4});
  CHECK(first_part_length(bridge_of({0, 2, 2, 2})) == 1);
  CHECK(first_part_length(bridge_of({1, 1, 1, 3})) == 3);
  CHECK(first_part_length(bridge_of({1, 1, 2, 2})) == 4);
  // not the encoding of any score sequence
  CHECK_THROWS_AS(irreducible_breakpoints(Bridge(2, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(first_part_length(Bridge(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("breakpoint counts reproduce the refined table") {
  PartsTable table = parts_table(7);
  for (std::uint32_t n = 1; n <= 7; ++n) {
    std::map<std::size_t, BigInt> by_parts;
    for (const ScoreSeq& s : enumerate_score_sequences(n))
      ++by_parts[irreducible_breakpoints(bridge_from_scores(s)).size()];
    for (std::uint64_t m = 1; m <= n; ++m) {
      BigInt want = table.at(n, m);
      auto it = by_parts.find(m);
      CHECK((it == by_parts.end() ? BigInt(0) : it->second) == want);
    }
  }
}

TEST_CASE("cyclic shift of the increments") {
  Bridge b(5, {3, 4, 5, 7, 8});
  CHECK(cyclic_shift(b, 0) == b);
  CHECK(cyclic_shift(b, 2).down_steps() == std::vector<std::uint32_t>{1, 2, 3, 5, 6});
  CHECK(cyclic_shift(b, 4).down_steps() == std::vector<std::uint32_t>{1, 3, 4, 9, 10});
  CHECK_THROWS_AS(cyclic_shift(b, 10), std::invalid_argument);

  // composition and area invariance over every bridge and shift
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (const Bridge& c : enumerate_bridges_area_zero_mod_n(n))
      for (std::uint32_t m = 0; m < 2 * n; ++m) {
        Bridge once = cyclic_shift(c, m);
        CHECK(sawtooth_area(once) % n == sawtooth_area(c) % n);
        CHECK(cyclic_shift(once, (2 * n - m) % (2 * n)) == c);
        Bridge twice = cyclic_shift(once, 1);
        CHECK(twice == cyclic_shift(c, (m + 1) % (2 * n)));
      }
}

TEST_CASE("pairs admit only shifts inside the first irreducible part") {
  Bridge strong = bridge_of({1, 1, 1});  // single part, l = 3
  for (std::uint32_t m = 0; m < 6; ++m) CHECK(ShiftPair(strong, m).shift() == m);
  Bridge staircase = bridge_of({0, 1, 2});  // l = 1
  CHECK(ShiftPair(staircase, 1).shift() == 1);
  CHECK_THROWS_AS(ShiftPair(staircase, 2), std::invalid_argument);
  CHECK_THROWS_AS(ShiftPair(Bridge(2, {1, 2}), 0), std::invalid_argument);
}

TEST_CASE("forward map lands in the divisible-area family") {
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (const ScoreSeq& s : enumerate_score_sequences(n)) {
      Bridge b = bridge_from_scores(s);
      std::uint32_t l = first_part_length(b);
      for (std::uint32_t m = 0; m < 2 * l; ++m) {
        Bridge image = forward_map(ShiftPair(b, m));
        CHECK(sawtooth_area(image) % static_cast<std::int64_t>(n) == 0);
        if (m == 0) CHECK(image == b);
      }
    }
}

TEST_CASE("inverse map undoes the forward map") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (const ScoreSeq& s : enumerate_score_sequences(n)) {
      Bridge b = bridge_from_scores(s);
      std::uint32_t l = first_part_length(b);
      for (std::uint32_t m = 0; m < 2 * l; ++m) {
        ShiftPair p(b, m);
        ShiftPair back = inverse_map(forward_map(p));
        CHECK(back == p);
      }
    }
    for (const Bridge& b_prime : enumerate_bridges_area_zero_mod_n(n))
      CHECK(forward_map(inverse_map(b_prime)) == b_prime);
  }
  // area 1 mod 3 is outside the codomain
  CHECK_THROWS_AS(inverse_map(Bridge(3, {2, 3, 6})), std::invalid_argument);
}

TEST_CASE("exhaustive verification of the correspondence") {
  IntSeq egz = egz_table(6);
  for (std::uint32_t n = 1; n <= 6; ++n) {
    BijectionReport r = verify_bijection(n);
    CHECK(r.n == n);
    CHECK(r.injective);
    CHECK(r.surjective);
    CHECK(r.bijective());
    CHECK(r.failures.empty());
    CHECK(r.domain_size == r.codomain_size);
    CHECK(BigInt(static_cast<unsigned long>(r.domain_size)) == 2 * egz[n]);
  }
  BijectionReport four = verify_bijection(4);
  CHECK(four.domain_size == 18);
  CHECK(four.codomain_size == 18);
  BijectionReport one = verify_bijection(1);
  CHECK(one.domain_size == 2);
  CHECK(one.codomain_size == 2);
  CHECK_THROWS_AS(verify_bijection(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_bijection(11), std::invalid_argument);
}
