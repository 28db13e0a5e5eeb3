#include "scoreseq/lktransform.hpp"

#include <cmath>
#include <stdexcept>

namespace scoreseq {

RatSeq to_ratseq(const IntSeq& s) {
  RatSeq out;
  out.reserve(s.values.size());
  for (const BigInt& v : s.values) out.emplace_back(v);
  return out;
}

RatSeq scale_by_powers(const RatSeq& a, const BigRat& c) {
  RatSeq out;
  out.reserve(a.size());
  BigRat power(1);
  for (const BigRat& v : a) {
    out.push_back(v * power);
    power *= c;
  }
  return out;
}

RatSeq lk_forward(const RatSeq& a) {
  if (a.empty() || a[0] != 1)
    throw std::invalid_argument("lk_forward: input must start with a_0 = 1");
  const std::size_t len = a.size();
  RatSeq star(len, BigRat(0));
  for (std::size_t n = 1; n < len; ++n) {
    BigRat acc = BigRat(static_cast<unsigned long>(n)) * a[n];
    for (std::size_t k = 1; k < n; ++k) acc -= star[k] * a[n - k];
    star[n] = acc;
  }
  return star;
}

RatSeq lk_inverse(const RatSeq& a_star) {
  if (a_star.empty() || a_star[0] != 0)
    throw std::invalid_argument("lk_inverse: input must start with a*_0 = 0");
  const std::size_t len = a_star.size();
  RatSeq a(len, BigRat(0));
  a[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    BigRat acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += a_star[k] * a[n - k];
    a[n] = acc / BigRat(static_cast<unsigned long>(n));
  }
  return a;
}

LKReport check_infinite_divisibility(const RatSeq& a) {
  if (a.empty() || a[0] != 1)
    throw std::invalid_argument("check_infinite_divisibility: input must start with a_0 = 1");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] <= 0)
      throw std::invalid_argument("check_infinite_divisibility: nonpositive entry at index " +
                                  std::to_string(i));
  LKReport report;
  report.transform = lk_forward(a);
  report.verified_to = a.size() - 1;
  report.all_nonnegative = true;
  for (std::size_t i = 1; i < report.transform.size(); ++i) {
    if (report.transform[i] < 0) {
      report.all_nonnegative = false;
      report.first_negative_index = i;
      break;
    }
  }
  report.normalization = exact_sum(a);
  return report;
}

namespace {

// sum_{k=1}^{K} a*_k / k, exact.
BigRat exponent_sum(const RatSeq& a_star, std::size_t K) {
  std::vector<BigRat> terms;
  terms.reserve(K);
  for (std::size_t k = 1; k <= K; ++k)
    terms.push_back(a_star[k] / BigRat(static_cast<unsigned long>(k)));
  return exact_sum(terms);
}

}  // namespace

BigFloat asymptotic_estimate(const RatSeq& a_star, const AsymptoticsConfig& cfg,
                             std::size_t n) {
  if (a_star.empty() || a_star[0] != 0)
    throw std::invalid_argument("asymptotic_estimate: transform must start with a*_0 = 0");
  if (cfg.gamma >= 0)
    throw std::invalid_argument("asymptotic_estimate: regular-variation index must be negative");
  if (cfg.truncation == 0 || cfg.truncation >= a_star.size())
    throw std::invalid_argument("asymptotic_estimate: truncation outside available prefix");
  if (n == 0 || n >= a_star.size())
    throw std::invalid_argument("asymptotic_estimate: n outside available prefix");

  const mpfr_prec_t prec = BigFloat::prec_for_digits(cfg.digits + 10);
  BigRat lead = a_star[n] / BigRat(static_cast<unsigned long>(n));
  BigRat s = exponent_sum(a_star, cfg.truncation);
  return BigFloat::from_rat(lead, prec) * exp(BigFloat::from_rat(s, prec));
}

std::optional<double> regular_variation_diagnostic(const RatSeq& a_star, std::size_t n) {
  if (n == 0 || 2 * n >= a_star.size()) return std::nullopt;
  if (a_star[n] <= 0 || a_star[2 * n] <= 0) return std::nullopt;
  BigRat ratio = a_star[2 * n] / a_star[n];
  return std::log2(mpq_get_d(ratio.get_mpq_t()));
}

MoserResult moser_constant(std::size_t truncation, int digits) {
  if (truncation == 0) throw std::invalid_argument("moser_constant: truncation must be positive");
  if (digits < 1) throw std::invalid_argument("moser_constant: digits must be positive");
  return moser_constant(egz_table(truncation), truncation, digits);
}

MoserResult moser_constant(const IntSeq& egz, std::size_t truncation, int digits) {
  if (truncation == 0) throw std::invalid_argument("moser_constant: truncation must be positive");
  if (digits < 1) throw std::invalid_argument("moser_constant: digits must be positive");
  if (egz.values.size() <= truncation)
    throw std::invalid_argument("moser_constant: table shorter than truncation");

  // sum_{k=1}^{K} N_k / (k 4^k), exact
  std::vector<BigRat> terms;
  terms.reserve(truncation);
  for (std::size_t k = 1; k <= truncation; ++k) {
    BigInt den(static_cast<unsigned long>(k));
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * k);
    terms.push_back(make_rat(egz.values[k], den));
  }
  BigRat s = exact_sum(terms);

  const mpfr_prec_t prec = BigFloat::prec_for_digits(digits + 10);
  BigFloat pi = BigFloat::pi(prec);
  BigFloat two = BigFloat::from_ui(2, prec);
  BigFloat value = exp(BigFloat::from_rat(s, prec)) / (two * sqrt(pi));

  // Tail of the exponent sum, everything rounded outward: the dropped
  // mass is below 2 / (3 sqrt(pi) K^{3/2}).
  BigFloat k_f = BigFloat::from_ui(static_cast<unsigned long>(truncation), prec);
  BigFloat k32_lo = mul(k_f, sqrt(k_f, MPFR_RNDD), MPFR_RNDD);
  BigFloat sqrt_pi_lo = sqrt(BigFloat::pi(prec, MPFR_RNDD), MPFR_RNDD);
  BigFloat den_lo = mul(mul(BigFloat::from_ui(3, prec), sqrt_pi_lo, MPFR_RNDD), k32_lo, MPFR_RNDD);
  BigFloat exponent_tail = div(two, den_lo, MPFR_RNDU);

  // (limit - value) <= value_up * (exp(tail) - 1)
  BigFloat value_up =
      div(exp(BigFloat::from_rat(s, prec), MPFR_RNDU), mul(two, sqrt_pi_lo, MPFR_RNDD), MPFR_RNDU);
  BigFloat tail_bound = mul(value_up, expm1(exponent_tail, MPFR_RNDU), MPFR_RNDU);

  return MoserResult{.value = value,
                     .tail_bound = tail_bound,
                     .truncation = truncation,
                     .digits = digits};
}

BigFloat moser_ratio(const BigInt& s_n, std::uint64_t n, int digits) {
  if (n == 0) throw std::invalid_argument("moser_ratio: n must be positive");
  const mpfr_prec_t prec = BigFloat::prec_for_digits(digits + 10);
  // n^{5/2} S_n / 4^n = (n^2 S_n) sqrt(n) / 2^{2n}
  BigInt n2s = BigInt(static_cast<unsigned long>(n)) * BigInt(static_cast<unsigned long>(n)) * s_n;
  BigFloat r = BigFloat::from_int(n2s, prec) * sqrt(BigFloat::from_ui(n, prec));
  return mul_2exp(r, -2 * static_cast<long>(n));
}

}  // namespace scoreseq
