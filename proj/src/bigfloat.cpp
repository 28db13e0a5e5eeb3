#include "scoreseq/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scoreseq {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

mpfr_prec_t BigFloat::prec_for_digits(int decimal_digits) {
  if (decimal_digits < 1) throw std::invalid_argument("prec_for_digits: need >= 1 digit");
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 16;
}

BigFloat BigFloat::from_rat(const BigRat& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_int(const BigInt& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::from_ui(unsigned long u, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui(r.v_, u, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, rnd);
  return r;
}

std::string BigFloat::to_string(int significant_digits) const {
  if (significant_digits < 1)
    throw std::invalid_argument("BigFloat::to_string: need >= 1 digit");
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", significant_digits - 1, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, Op op) {
  BigFloat r(std::max(a.precision(), b.precision()));
  op(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

}  // namespace

BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  return binary(a, b, rnd, mpfr_add);
}
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  return binary(a, b, rnd, mpfr_sub);
}
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  return binary(a, b, rnd, mpfr_mul);
}
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  return binary(a, b, rnd, mpfr_div);
}

BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_exp(r.raw(), x.raw(), rnd);
  return r;
}

BigFloat expm1(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_expm1(r.raw(), x.raw(), rnd);
  return r;
}

BigFloat sqrt(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), rnd);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat mul_2exp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  if (e >= 0)
    mpfr_mul_2ui(r.raw(), x.raw(), static_cast<unsigned long>(e), MPFR_RNDN);
  else
    mpfr_div_2ui(r.raw(), x.raw(), static_cast<unsigned long>(-e), MPFR_RNDN);
  return r;
}

}  // namespace scoreseq
