#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kohn/pi_polynomial.hpp"
#include "oracles.hpp"

using namespace kohn;

TEST_CASE("zeta at even integers") {
  CHECK(zeta_even(2) == PiPolynomial::pi_power(Rational(1, 6), 2));
  CHECK(zeta_even(4) == PiPolynomial::pi_power(Rational(1, 90), 4));
  CHECK(zeta_even(6) == PiPolynomial::pi_power(Rational(1, 945), 6));
  CHECK_THROWS_AS(zeta_even(3), std::invalid_argument);
  CHECK_THROWS_AS(zeta_even(0), std::invalid_argument);

  // (1/3) zeta(2) + (11/3) zeta(4) = pi^2/18 + 11 pi^4/270
  const PiPolynomial combo = zeta_even(2) * Rational(1, 3) + zeta_even(4) * Rational(11, 3);
  CHECK(combo == PiPolynomial({Rational(0), Rational(1, 18), Rational(11, 270)}));
}

TEST_CASE("zeta values against partial sums with tail bound") {
  const std::uint64_t terms = 200000;
  for (unsigned m = 1; m <= 5; ++m) {
    const long double partial = oracle::inverse_power_sum(2 * m, 1, terms);
    const double exact = pipoly_eval(zeta_even(2 * m), PrecisionSpec{}).to_double();
    const long double tail = std::pow(static_cast<long double>(terms), 1.0L - 2 * m) / (2 * m - 1);
    const long double gap = exact - partial;
    CHECK(gap >= -1e-15L);
    CHECK(gap <= tail + 1e-15L);
  }
}

TEST_CASE("ball volumes") {
  const auto disk = ball_volume_even(2);
  CHECK(disk.has_odd_pi());
  CHECK(disk.to_string() == "pi");
  CHECK(ball_volume_even(4) == PiPolynomial::pi_power(Rational(1, 2), 2));
  CHECK(ball_volume_even(6).to_string() == "1/6*pi^3");
  CHECK_THROWS_AS(ball_volume_even(3), std::invalid_argument);
  CHECK(pipoly_eval(ball_volume_even(6), PrecisionSpec{}).to_double() == doctest::Approx(std::pow(M_PI, 3) / 6));
}

TEST_CASE("canonical form and arithmetic") {
  PiPolynomial p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.coefficients().size() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).to_string() == "0");
  CHECK_FALSE((p - p).has_odd_pi());
  CHECK_THROWS_AS(PiPolynomial::constant(Rational(1)) + ball_volume_even(2), std::invalid_argument);
  CHECK(PiPolynomial({Rational(2, 4)}).coefficient(0) == Rational(1, 2));
}

TEST_CASE("string form") {
  const PiPolynomial p({make_rational(-1, 1024), Rational(1, 18), Rational(11, 270)});
  CHECK(p.to_string() == "-1/1024 + 1/18*pi^2 + 11/270*pi^4");
  CHECK(PiPolynomial({Rational(1), Rational(-1)}).to_string() == "1 - pi^2");
  CHECK(PiPolynomial::pi_power(Rational(4), 4).to_string() == "4*pi^4");
  CHECK(PiPolynomial::constant(Rational(1, 4)).to_string() == "1/4");

  for (const char* text : {"-1/1024 + 1/18*pi^2 + 11/270*pi^4", "0", "pi", "1/6*pi^3", "1 - pi^2", "4*pi^8",
                           "-pi^2 - 3/7*pi^6"}) {
    CAPTURE(text);
    CHECK(PiPolynomial::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(PiPolynomial::parse("1 + pi"), std::invalid_argument);
  CHECK_THROWS_AS(PiPolynomial::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(PiPolynomial::parse("2pi^2"), std::invalid_argument);
  CHECK_THROWS_AS(PiPolynomial::parse(""), std::invalid_argument);
}

TEST_CASE("evaluation") {
  CHECK(pipoly_eval(PiPolynomial{}, PrecisionSpec{}).to_double() == 0.0);

  const PrecisionSpec p30(30);
  // zeta(2) to 30 digits
  CHECK(pipoly_eval(zeta_even(2), p30).to_string(21) == "1.64493406684822643647e+00");

  // Precision doubling changes the value by less than 10^-(digits-2).
  const PiPolynomial p({make_rational(-1, 1024), Rational(1, 18), Rational(11, 270)});
  for (unsigned digits : {16U, 30U, 50U}) {
    const PrecisionSpec prec(digits);
    const BigFloat lo = pipoly_eval(p, prec);
    const BigFloat hi = pipoly_eval(p, prec.doubled());
    const BigFloat bound = BigFloat::parse("1e-" + std::to_string(digits - 2), prec.doubled());
    CHECK((hi - lo).abs() < bound);
  }
  CHECK_THROWS_AS(PrecisionSpec(15), std::invalid_argument);
}
