#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kohn/big_float.hpp"
#include "kohn/exact.hpp"

namespace kohn {

/// Exact polynomial in pi^2 with rational coefficients:
///
///   (c_0 + c_1 pi^2 + c_2 pi^4 + ...) * pi^odd
///
/// where `odd` is 0 or 1. The odd factor exists only for ball volumes and
/// the Weyl constants built from them; every zeta value and leading
/// coefficient has odd == 0.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial has no
/// coefficients and no odd factor.
class PiPolynomial {
 public:
  PiPolynomial() = default;
  explicit PiPolynomial(std::vector<Rational> coefficients, bool odd_pi = false);

  static PiPolynomial constant(const Rational& c);
  /// c * pi^power, for any power >= 0.
  static PiPolynomial pi_power(const Rational& c, unsigned power);

  std::span<const Rational> coefficients() const { return coefficients_; }
  /// Coefficient of (pi^2)^j, zero past the end.
  Rational coefficient(std::size_t j) const;
  bool has_odd_pi() const { return odd_pi_; }
  bool is_zero() const { return coefficients_.empty(); }

  /// Sum/difference; throws std::invalid_argument if the odd factors differ
  /// and neither side is zero.
  PiPolynomial& operator+=(const PiPolynomial& rhs);
  PiPolynomial& operator-=(const PiPolynomial& rhs);
  PiPolynomial& operator*=(const Rational& s);
  friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
  friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
  friend PiPolynomial operator*(PiPolynomial a, const Rational& s) { return a *= s; }
  friend PiPolynomial operator*(const Rational& s, PiPolynomial a) { return a *= s; }

  friend bool operator==(const PiPolynomial&, const PiPolynomial&) = default;

  /// "a0 + a1*pi^2 + a2*pi^4", negative terms joined with " - ", unit
  /// coefficients dropped ("pi^2"), "0" for the zero polynomial. With the
  /// odd factor each exponent is one higher ("pi", "1/6*pi^3").
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument.
  static PiPolynomial parse(std::string_view text);

 private:
  void normalize();

  std::vector<Rational> coefficients_;
  bool odd_pi_ = false;
};

/// Floating value with pi computed at `prec`.
BigFloat pipoly_eval(const PiPolynomial& p, PrecisionSpec prec);

/// zeta(two_m) = |B_{2m}| 2^{2m} / (2 (2m)!) * pi^{2m}.
/// Throws std::invalid_argument unless two_m is even and >= 2.
PiPolynomial zeta_even(unsigned two_m);

/// Volume of the unit ball in R^d, pi^{d/2} / (d/2)!.
/// Throws std::invalid_argument for odd d or d == 0.
PiPolynomial ball_volume_even(unsigned d);

}  // namespace kohn
