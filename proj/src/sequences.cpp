#include "scoreseq/sequences.hpp"

#include <stdexcept>
#include <string>

namespace scoreseq {

namespace {

// acc must be divisible by div; quotient returned.
BigInt exact_div(const BigInt& acc, const BigInt& div, const char* what) {
  if (!mpz_divisible_p(acc.get_mpz_t(), div.get_mpz_t()))
    throw std::logic_error(std::string(what) + ": non-exact division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), div.get_mpz_t());
  return q;
}

}  // namespace

BigInt egz_number(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("egz_number: n must be positive");
  BigInt acc = 0;
  for (std::uint64_t d : divisors(n)) {
    BigInt term = central_binomial(d) * totient(n / d);
    if ((n + d) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return exact_div(acc, BigInt(2) * BigInt(static_cast<unsigned long>(n)), "egz_number");
}

IntSeq egz_table(std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("egz_table: n_max must be positive");
  SpfSieve sieve(n_max);
  std::vector<std::uint64_t> phi(n_max + 1);
  for (std::uint64_t k = 1; k <= n_max; ++k) phi[k] = sieve.totient(k);

  // Accumulate the divisor sums inside out: walk d with a running
  // binomial(2d, d) and add (-1)^{n+d} binomial(2d, d) phi(n/d) to every
  // multiple n of d.
  std::vector<BigInt> acc(n_max + 1, BigInt(0));
  BigInt binom = 1;  // binomial(2d, d) for the current d
  for (std::uint64_t d = 1; d <= n_max; ++d) {
    binom *= 2 * (2 * d - 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), d);
    for (std::uint64_t n = d; n <= n_max; n += d) {
      unsigned long p = static_cast<unsigned long>(phi[n / d]);
      if ((n + d) % 2 == 0)
        mpz_addmul_ui(acc[n].get_mpz_t(), binom.get_mpz_t(), p);
      else
        mpz_submul_ui(acc[n].get_mpz_t(), binom.get_mpz_t(), p);
    }
  }

  IntSeq seq{.values = std::vector<BigInt>(n_max + 1), .kind = SeqKind::egz_numbers};
  for (std::uint64_t n = 1; n <= n_max; ++n)
    seq.values[n] =
        exact_div(acc[n], BigInt(2) * BigInt(static_cast<unsigned long>(n)), "egz_table");
  return seq;
}

IntSeq score_counts(std::uint64_t n_max) {
  if (n_max == 0)
    return IntSeq{.values = {BigInt(1)}, .kind = SeqKind::score_counts};
  return score_counts(egz_table(n_max), n_max);
}

IntSeq score_counts(const IntSeq& egz, std::uint64_t n_max) {
  if (n_max > 0 && egz.values.size() <= n_max)
    throw std::invalid_argument("score_counts: EGZ table shorter than n_max");
  IntSeq s{.values = std::vector<BigInt>(n_max + 1), .kind = SeqKind::score_counts};
  s.values[0] = 1;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
      mpz_addmul(acc.get_mpz_t(), egz.values[k].get_mpz_t(), s.values[n - k].get_mpz_t());
    s.values[n] = exact_div(acc, BigInt(static_cast<unsigned long>(n)), "score_counts");
  }
  return s;
}

IntSeq strong_counts(std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("strong_counts: n_max must be positive");
  IntSeq s = score_counts(n_max);
  IntSeq t{.values = std::vector<BigInt>(n_max + 1), .kind = SeqKind::strong_counts};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt acc = s.values[n];
    for (std::uint64_t k = 1; k < n; ++k)
      mpz_submul(acc.get_mpz_t(), t.values[k].get_mpz_t(), s.values[n - k].get_mpz_t());
    t.values[n] = acc;
  }
  return t;
}

const BigInt& PartsTable::at(std::uint64_t n, std::uint64_t m) const {
  if (n == 0 || n > n_max || m == 0 || m > n)
    throw std::out_of_range("PartsTable::at: need 1 <= m <= n <= n_max");
  return rows[n][m - 1];
}

PartsTable parts_table(std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("parts_table: n_max must be positive");
  IntSeq t = strong_counts(n_max);

  // A[n][m] = sum_k T_k A[n-k][m-1], seeded by A[0][0] = 1: peel off the
  // first irreducible part.
  PartsTable table{.n_max = n_max, .rows = std::vector<std::vector<BigInt>>(n_max + 1)};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    table.rows[n].assign(n, BigInt(0));
    table.rows[n][0] = t.values[n];
    for (std::uint64_t m = 2; m <= n; ++m) {
      BigInt acc = 0;
      for (std::uint64_t k = 1; k + m - 1 <= n; ++k)
        mpz_addmul(acc.get_mpz_t(), t.values[k].get_mpz_t(),
                   table.rows[n - k][m - 2].get_mpz_t());
      table.rows[n][m - 1] = acc;
    }
  }
  return table;
}

BigRat mean_inverse_parts(const PartsTable& table, std::uint64_t n) {
  if (n == 0 || n > table.n_max)
    throw std::out_of_range("mean_inverse_parts: n outside built table");
  std::vector<BigRat> terms;
  terms.reserve(n);
  BigInt row_sum = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    const BigInt& a = table.at(n, m);
    row_sum += a;
    if (a != 0) terms.push_back(make_rat(a, BigInt(static_cast<unsigned long>(m))));
  }
  return exact_sum(terms) / make_rat(row_sum, 1);
}

}  // namespace scoreseq
