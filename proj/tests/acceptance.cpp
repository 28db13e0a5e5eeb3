// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit
// when anything fails. Gates are fixed here on purpose — exact equality
// wherever the mathematics is exact, numeric tolerances only where a
// limit is being approximated.

#include "scoreseq/bijection.hpp"
#include "scoreseq/lattice.hpp"
#include "scoreseq/lktransform.hpp"
#include "scoreseq/sequences.hpp"

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace scoreseq;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail = "") {
  if (ok) {
    std::printf("PASS: %s\n", name.c_str());
  } else {
    ++failures;
    std::printf("FAIL: %s%s\n", name.c_str(),
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
  }
  std::fflush(stdout);
}

BigRat rat_pow(unsigned long base, unsigned long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, e);
  return BigRat(p);
}

RatSeq random_prefix(std::mt19937_64& rng, std::size_t len, const BigRat& head) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  RatSeq a;
  a.push_back(head);
  while (a.size() < len) a.push_back(make_rat(num(rng), den(rng)));
  return a;
}

}  // namespace

int main() {
  // shared exact tables, built once
  IntSeq egz = egz_table(20000);
  IntSeq s = score_counts(egz, 1000);

  // 1. forward transform of the score counts gives the EGZ numbers,
  //    exactly, through n = 500
  {
    RatSeq a = to_ratseq(s);
    a.resize(501);
    RatSeq want = to_ratseq(egz);
    want.resize(501);
    report(lk_forward(a) == want,
           "transform identity: lk_forward(score_counts) = egz_numbers for n <= 500");
  }

  // 2. the n = 4 picture: four score sequences, 18 = 2 N_4 qualifying
  //    bridges, and a verified bijection
  {
    std::set<std::vector<std::uint32_t>> got;
    for (const ScoreSeq& q : enumerate_score_sequences(4)) got.insert(q.scores());
    std::set<std::vector<std::uint32_t>> want = {
        {0, 1, 2, 3}, {0, 2, 2, 2}, {1, 1, 1, 3}, {1, 1, 2, 2}};
    BijectionReport r = verify_bijection(4);
    bool ok = got == want && enumerate_bridges_area_zero_mod_n(4).size() == 18 &&
              BigInt(18) == 2 * egz_number(4) && r.bijective() && r.domain_size == 18 &&
              r.codomain_size == 18;
    report(ok, "n = 4: sequences {0123,0222,1113,1122}, 18 = 2 N_4 bridges, bijective");
  }

  // 3. worked bridge example: area 2 by both formulas
  {
    Bridge b(5, {3, 4, 5, 7, 8});
    report(sawtooth_area(b) == 2 && sawtooth_area_step_form(b) == 2,
           "bridge n = 5, d = {3,4,5,7,8} has sawtooth area 2 by both formulas");
  }

  // 4. brute-force oracles: closed forms match exhaustive counts
  {
    bool ok = true;
    std::string detail;
    for (std::uint32_t n = 1; n <= 8 && ok; ++n)
      if (egz_number(n) != brute_force_egz(n)) {
        ok = false;
        detail = "egz mismatch at n = " + std::to_string(n);
      }
    for (std::uint32_t n = 0; n <= 8 && ok; ++n)
      if (s[n] != BigInt(static_cast<unsigned long>(enumerate_score_sequences(n).size()))) {
        ok = false;
        detail = "score count mismatch at n = " + std::to_string(n);
      }
    for (std::uint32_t n = 1; n <= 6 && ok; ++n) {
      BijectionReport r = verify_bijection(n);
      if (!r.bijective() ||
          BigInt(static_cast<unsigned long>(r.domain_size)) != 2 * egz[n]) {
        ok = false;
        detail = "bijection failure at n = " + std::to_string(n);
      }
    }
    report(ok, "oracles: egz n <= 8, enumeration n <= 8, bijection with 2 N_n domain n <= 6",
           detail);
  }

  // 5. transform round trips and scaling covariance on 100 random
  //    rational prefixes
  {
    std::mt19937_64 rng(13571113);
    std::uniform_int_distribution<std::size_t> len(1, 50);
    const BigRat cs[] = {BigRat(2), BigRat(1, 3), BigRat(7, 5)};
    bool ok = true;
    for (int rep = 0; rep < 100 && ok; ++rep) {
      RatSeq a = random_prefix(rng, len(rng), BigRat(1));
      RatSeq star = lk_forward(a);
      if (lk_inverse(star) != a) ok = false;
      RatSeq b = random_prefix(rng, len(rng), BigRat(0));
      if (lk_forward(lk_inverse(b)) != b) ok = false;
      for (const BigRat& c : cs)
        if (lk_forward(scale_by_powers(a, c)) != scale_by_powers(star, c)) ok = false;
    }
    report(ok, "transform: 100 random prefixes, round trips and scaling (2, 1/3, 7/5) exact");
  }

  // 6. convergence toward the limit constant: within 5% at n = 1000 and
  //    strictly shrinking deviations along the doubling schedule
  MoserResult c10k = moser_constant(egz, 10000, 30);
  {
    const mpfr_prec_t prec = BigFloat::prec_for_digits(40);
    BigFloat one = BigFloat::from_ui(1, prec);
    std::vector<BigFloat> dev;
    for (std::uint64_t n : {125u, 250u, 500u, 1000u})
      dev.push_back(abs(sub(div(moser_ratio(s[n], n, 30), c10k.value), one)));
    bool shrinking = dev[0] > dev[1] && dev[1] > dev[2] && dev[2] > dev[3];
    bool within = dev[3] <= BigFloat::from_rat(BigRat(1, 20), prec);
    report(shrinking && within,
           "limit constant: |n^{5/2} S_n / 4^n / C - 1| <= 0.05 at n = 1000, "
           "deviations strictly decreasing over n in {125,250,500,1000}",
           "devs " + dev[0].to_string(3) + " " + dev[1].to_string(3) + " " +
               dev[2].to_string(3) + " " + dev[3].to_string(3));
  }

  // 7. stability of the constant under doubling the truncation, plus a
  //    small rigorous tail bound
  {
    MoserResult c20k = moser_constant(egz, 20000, 30);
    const mpfr_prec_t prec = BigFloat::prec_for_digits(40);
    BigFloat rel = div(abs(sub(c10k.value, c20k.value)), c20k.value);
    bool six_digits = rel <= BigFloat::from_rat(BigRat(1) / rat_pow(10, 6), prec);
    bool same_rounded = c10k.value.to_string(6) == c20k.value.to_string(6);
    bool tail_small =
        c10k.tail_bound < BigFloat::from_rat(BigRat(1) / rat_pow(10, 5), prec);
    report(six_digits && same_rounded && tail_small,
           "limit constant stable: K = 10^4 vs 2*10^4 agree to 6 digits, tail bound < 1e-5",
           "rel diff " + rel.to_string(3) + ", tail " + c10k.tail_bound.to_string(3));
  }

  // 8. renewal identities tying all exact sequences together
  {
    IntSeq t = strong_counts(200);
    bool ok = true;
    std::string detail;
    for (std::uint64_t n = 1; n <= 200 && ok; ++n) {
      BigInt conv = 0;
      for (std::uint64_t k = 1; k <= n; ++k) conv += t[k] * s[n - k];
      if (conv != s[n]) {
        ok = false;
        detail = "strong convolution fails at n = " + std::to_string(n);
      }
    }
    PartsTable table = parts_table(100);
    for (std::uint64_t n = 1; n <= 100 && ok; ++n) {
      BigInt row_sum = 0;
      for (std::uint64_t m = 1; m <= n; ++m) row_sum += table.at(n, m);
      if (row_sum != s[n]) {
        ok = false;
        detail = "row sum fails at n = " + std::to_string(n);
      }
    }
    for (std::uint64_t n = 1; n <= 30 && ok; ++n) {
      BigRat lhs = mean_inverse_parts(table, n) * BigRat(s[n]) *
                   BigRat(static_cast<unsigned long>(n));
      if (lhs != BigRat(egz[n])) {
        ok = false;
        detail = "mean-inverse identity fails at n = " + std::to_string(n);
      }
    }
    report(ok,
           "renewal: T*S = S to n = 200, row sums = S_n to n = 100, "
           "E[1/I_n] n S_n = N_n to n = 30",
           detail);
  }

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
