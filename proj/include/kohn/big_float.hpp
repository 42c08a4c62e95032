#pragma once

// Arbitrary-precision binary floating point (MPFR) with an explicit working
// precision carried by every value. No global precision state is touched.

#include <string>
#include <string_view>

#include <mpfr.h>

#include "kohn/exact.hpp"

namespace kohn {

/// Working precision in significant decimal digits; at least 16.
class PrecisionSpec {
 public:
  static constexpr unsigned kDefaultDigits = 50;
  static constexpr unsigned kMinDigits = 16;

  constexpr PrecisionSpec() = default;
  /// Throws std::invalid_argument when digits < 16.
  explicit PrecisionSpec(unsigned decimal_digits);

  constexpr unsigned decimal_digits() const { return digits_; }
  /// Binary precision including guard bits.
  mpfr_prec_t bits() const;
  PrecisionSpec doubled() const { return PrecisionSpec(2 * digits_); }

  friend constexpr bool operator==(PrecisionSpec, PrecisionSpec) = default;

 private:
  unsigned digits_ = kDefaultDigits;
};

class BigFloat {
 public:
  explicit BigFloat(PrecisionSpec prec = {});
  BigFloat(double v, PrecisionSpec prec);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  static BigFloat pi(PrecisionSpec prec);
  static BigFloat from_rational(const Rational& r, PrecisionSpec prec);
  static BigFloat from_integer(const Integer& z, PrecisionSpec prec);
  /// Parses a decimal/scientific literal. Throws std::invalid_argument.
  static BigFloat parse(std::string_view text, PrecisionSpec prec);

  PrecisionSpec precision() const { return prec_; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  BigFloat abs() const;
  BigFloat log() const;
  BigFloat pow(unsigned long e) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b);

  double to_double() const;
  /// Scientific notation with `digits` significant digits, e.g.
  /// "4.1123351671205660911e-01". 0 means the value's own precision.
  std::string to_string(unsigned digits = 0) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  PrecisionSpec prec_;
  mpfr_t value_;
};

}  // namespace kohn
