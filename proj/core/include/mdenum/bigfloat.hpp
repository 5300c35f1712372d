#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace mdenum {

/// Minimal RAII wrapper over an mpfr_t with an explicit precision.
class BigFloat {
 public:
  /// Precision in bits large enough for `digits` decimal digits.
  static mpfr_prec_t bits_for_digits(int digits);

  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(mpfr_prec_t bits, const mpz_class& value);
  BigFloat(mpfr_prec_t bits, double value);
  BigFloat(const BigFloat& other);
  BigFloat& operator=(const BigFloat& other);
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  /// value^(1/k) via exp(log(value)/k); value must be positive.
  BigFloat root(unsigned long k) const;

  /// Nearest integer.
  mpz_class round() const;

  double to_double() const;

  /// Decimal rendering with `digits` significant digits, fixed notation when
  /// the exponent is small.
  std::string to_string(int digits) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

}  // namespace mdenum
