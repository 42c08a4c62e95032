#pragma once

// Leading coefficient c(n) = lim N(lambda)/lambda^n and the remainder
// N(lambda) - c lambda^n, computed three ways that check each other:
//
//   series       truncated sum_k k^{-n} h(k) with a certified tail bracket
//   closed_form  exact polynomial in pi^2 via Stirling numbers and zeta(2m)
//   empirical    exact counts N(lambda)/lambda^n
//
// with h(k) = C(k+n-2, n-2) + C(k-1, n-2) and
//
//   c(n) = (sum_k k^{-n} h(k) - [paper_restricted] (n-1)^{-n}) / (2^n n!).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "kohn/big_float.hpp"
#include "kohn/exact.hpp"
#include "kohn/pi_polynomial.hpp"
#include "kohn/spectrum.hpp"

namespace kohn {

enum class CoefficientMethod { series, closed_form, empirical };

std::string_view to_string(CoefficientMethod method);
CoefficientMethod parse_method(std::string_view text);

struct CoefficientReport {
  int n = 2;
  CountingConvention convention = CountingConvention::full_spectrum;
  CoefficientMethod method = CoefficientMethod::closed_form;
  /// closed_form only.
  std::optional<PiPolynomial> exact;
  BigFloat value;
  /// series: certified bound on |c - value|. closed_form: 0.
  /// empirical: heuristic size of the remaining O(ln(lambda)/lambda) drift.
  double error_bound = 0.0;
  /// series: truncation index.
  std::optional<std::uint64_t> K;
  /// empirical: the lambda the ratio was taken at.
  std::optional<double> lambda;
};

/// Thrown when a requested series accuracy cannot be certified within the
/// iteration cap or double-precision rounding floor.
class PrecisionUnattainable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeriesOptions {
  double eps = 1e-12;
  std::uint64_t iteration_cap = 1'000'000'000;
  PrecisionSpec precision;
  /// Overrides the automatically chosen truncation index (still capped).
  std::optional<std::uint64_t> fixed_K;
};

struct RemainderSample {
  double lambda;
  Integer count;
  BigFloat residual;  ///< N(lambda) - c lambda^n
  double normalized;  ///< residual / (lambda^{n-1} ln lambda)
};

struct RemainderProfile {
  std::vector<RemainderSample> samples;
  double fitted_C = 0.0;
};

enum class WeylNormalization { paper_text, conventional };

/// Accepts "paper-text"/"paper_text" and "conventional".
WeylNormalization parse_normalization(std::string_view text);

/// C(k+n-2, n-2) + C(k-1, n-2). Any integer k; for k <= 0 the binomials
/// take their generalized values, so h agrees with its polynomial extension.
Integer h_poly(SphereParam n, std::int64_t k);

/// Rational coefficients of h as a polynomial in k, lowest degree first,
/// expanded by multiplying out the linear factors of both binomials.
std::vector<Rational> h_poly_coefficients(SphereParam n);

/// 1 / (2^n n!).
Rational coefficient_prefactor(SphereParam n);

/// (n-1)^{-n}, the term the paper_restricted convention subtracts.
Rational convention_gap_term(SphereParam n);

/// Exact sum_{k>=1} k^{-n} h(k) through the Stirling/zeta chain.
PiPolynomial series_sum_closed(SphereParam n);

/// Truncated series with certified error. Throws PrecisionUnattainable.
CoefficientReport leading_coefficient_series(SphereParam n, CountingConvention conv, const SeriesOptions& opts = {});

CoefficientReport leading_coefficient_closed(SphereParam n, CountingConvention conv, PrecisionSpec prec = {});

/// N(lambda)/lambda^n. Throws std::invalid_argument for lambda < 2.
double empirical_ratio(SphereParam n, double lambda, CountingConvention conv, unsigned threads = 1);

/// Report wrapper around empirical_ratio.
CoefficientReport leading_coefficient_empirical(SphereParam n, double lambda, CountingConvention conv,
                                                PrecisionSpec prec = {}, unsigned threads = 1);

/// Residuals against the closed-form constant of `conv`.
/// Throws std::invalid_argument unless lambdas is nonempty, ascending and
/// every lambda >= 4.
RemainderProfile remainder_profile(SphereParam n, std::span<const double> lambdas, CountingConvention conv,
                                   PrecisionSpec prec = {}, unsigned threads = 1);

/// Same, against an explicitly supplied constant.
RemainderProfile remainder_profile_against(SphereParam n, std::span<const double> lambdas, CountingConvention conv,
                                           const BigFloat& constant, unsigned threads = 1);

/// Unit-ball Weyl constant in R^{2n}. paper_text: (2 pi)^{2n} omega_{2n}^2.
/// conventional: omega_{2n}^2 / (2 pi)^{2n}. Requires n >= 1.
PiPolynomial weyl_ball_constant(int n, WeylNormalization normalization);

/// hockey_stick_sum(floor(y), b, a) (a+1)! / y^{a+1}. Requires y >= 1.
double lemma_ratio(unsigned a, unsigned b, double y);

}  // namespace kohn
