#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scoreseq/lattice.hpp"
#include "scoreseq/sequences.hpp"

using namespace scoreseq;

namespace {

std::vector<unsigned long> row_as_ulongs(const PartsTable& t, std::uint64_t n) {
  std::vector<unsigned long> out;
  for (std::uint64_t m = 1; m <= n; ++m) out.push_back(t.at(n, m).get_ui());
  return out;
}

}  // namespace

TEST_CASE("EGZ numbers, small cases") {
  CHECK(egz_number(1) == 1);
  CHECK(egz_number(2) == 1);
  CHECK(egz_number(3) == 4);
  CHECK(egz_number(4) == 9);
  CHECK(egz_number(5) == 26);
  CHECK(egz_number(10) == 9226);
  CHECK_THROWS_AS(egz_number(0), std::invalid_argument);
}

TEST_CASE("EGZ table matches the one-shot formula and brute force") {
  IntSeq t = egz_table(500);
  CHECK(t.kind == SeqKind::egz_numbers);
  CHECK(t.max_index() == 500);
  CHECK(t[0] == 0);  // placeholder
  const std::vector<unsigned long> first = {1, 1, 4, 9, 26, 76, 246, 809, 2704, 9226};
  for (std::size_t n = 1; n <= first.size(); ++n) CHECK(t[n] == first[n - 1]);
  for (std::uint64_t n : {1ull, 2ull, 17ull, 100ull, 256ull, 499ull, 500ull})
    CHECK(t[n] == egz_number(n));
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(t[n] > 0);
  for (std::uint32_t n = 1; n <= 8; ++n) CHECK(t[n] == brute_force_egz(n));
  CHECK_THROWS_AS(egz_table(0), std::invalid_argument);
}

TEST_CASE("score-sequence counts, small cases") {
  IntSeq s = score_counts(12);
  CHECK(s.kind == SeqKind::score_counts);
  const std::vector<unsigned long> want = {1,   1,   1,    2,    4,    9,   22,
                                           59,  167, 490,  1486, 4639, 14805};
  REQUIRE(s.max_index() == 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(s[n] == want[n]);
  IntSeq s0 = score_counts(0);
  CHECK(s0.max_index() == 0);
  CHECK(s0[0] == 1);
}

TEST_CASE("score counts agree with exhaustive enumeration") {
  IntSeq s = score_counts(8);
  for (std::uint32_t n = 0; n <= 8; ++n)
    CHECK(s[n] == BigInt(static_cast<unsigned long>(enumerate_score_sequences(n).size())));
}

TEST_CASE("convolution recurrence holds exactly") {
  const std::uint64_t n_max = 300;
  IntSeq egz = egz_table(n_max);
  IntSeq s = score_counts(egz, n_max);
  CHECK(s.values == score_counts(n_max).values);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt conv = 0;
    for (std::uint64_t k = 1; k <= n; ++k) conv += egz[k] * s[n - k];
    CHECK(conv == BigInt(static_cast<unsigned long>(n)) * s[n]);
  }
}

TEST_CASE("strong counts invert the renewal identity") {
  IntSeq t = strong_counts(200);
  CHECK(t.kind == SeqKind::strong_counts);
  const std::vector<unsigned long> first = {1, 0, 1, 1, 3, 7, 21};
  for (std::size_t n = 1; n <= first.size(); ++n) CHECK(t[n] == first[n - 1]);
  IntSeq s = score_counts(200);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    BigInt conv = 0;
    for (std::uint64_t k = 1; k <= n; ++k) conv += t[k] * s[n - k];
    CHECK(conv == s[n]);
  }
}

TEST_CASE("table of counts refined by irreducible parts") {
  PartsTable table = parts_table(100);
  CHECK(table.n_max == 100);
  CHECK(row_as_ulongs(table, 1) == std::vector<unsigned long>{1});
  CHECK(row_as_ulongs(table, 2) == std::vector<unsigned long>{0, 1});
  CHECK(row_as_ulongs(table, 3) == std::vector<unsigned long>{1, 0, 1});
  CHECK(row_as_ulongs(table, 4) == std::vector<unsigned long>{1, 2, 0, 1});
  CHECK(row_as_ulongs(table, 5) == std::vector<unsigned long>{3, 2, 3, 0, 1});
  CHECK(row_as_ulongs(table, 6) == std::vector<unsigned long>{7, 7, 3, 4, 0, 1});
  CHECK(row_as_ulongs(table, 7) == std::vector<unsigned long>{21, 16, 12, 4, 5, 0, 1});

  IntSeq s = score_counts(100);
  IntSeq t = strong_counts(100);
  for (std::uint64_t n = 1; n <= 100; ++n) {
    BigInt row_sum = 0;
    for (std::uint64_t m = 1; m <= n; ++m) row_sum += table.at(n, m);
    CHECK(row_sum == s[n]);
    CHECK(table.at(n, 1) == t[n]);
    CHECK(table.at(n, n) == 1);  // all-singleton decomposition
  }

  CHECK_THROWS_AS(table.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS(table.at(101, 1), std::out_of_range);
  CHECK_THROWS_AS(table.at(5, 0), std::out_of_range);
  CHECK_THROWS_AS(table.at(5, 6), std::out_of_range);
}

TEST_CASE("mean inverse number of parts ties the sequences together") {
  PartsTable table = parts_table(30);
  CHECK(mean_inverse_parts(table, 1) == 1);
  CHECK(mean_inverse_parts(table, 3) == BigRat(2, 3));

  IntSeq egz = egz_table(30);
  IntSeq s = score_counts(egz, 30);
  for (std::uint64_t n = 1; n <= 30; ++n) {
    BigRat lhs = mean_inverse_parts(table, n) * BigRat(s[n]) * BigRat(static_cast<unsigned long>(n));
    CHECK(lhs == BigRat(egz[n]));
  }
  CHECK_THROWS_AS(mean_inverse_parts(table, 0), std::out_of_range);
  CHECK_THROWS_AS(mean_inverse_parts(table, 31), std::out_of_range);
}
