#pragma once

// Thin RAII wrapper over MPFR. Exact rational work stays in BigRat; this
// type only hosts the final transcendental evaluations (exp, sqrt, pi)
// at a caller-chosen precision.

#include "scoreseq/exactnum.hpp"

#include <mpfr.h>

#include <string>

namespace scoreseq {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  // Working precision in bits for a decimal significant-digit budget.
  static mpfr_prec_t prec_for_digits(int decimal_digits);

  static BigFloat from_rat(const BigRat& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_int(const BigInt& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_ui(unsigned long u, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Scientific notation with the given number of significant digits,
  // e.g. "3.925e-01" for 4 digits.
  std::string to_string(int significant_digits) const;

  // Sign of *this - o.
  int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

 private:
  mpfr_t v_;
};

// Results carry the larger precision of the two operands.
BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) { return add(a, b); }
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) { return sub(a, b); }
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) { return mul(a, b); }
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) { return div(a, b); }

inline bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }

BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat expm1(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat sqrt(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat abs(const BigFloat& x);

// x * 2^e (exact apart from precision clamping).
BigFloat mul_2exp(const BigFloat& x, long e);

}  // namespace scoreseq
