#include "kohn/asymptotics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "kohn/simd/power_sum.hpp"

namespace kohn {

std::string_view to_string(CoefficientMethod method) {
  switch (method) {
    case CoefficientMethod::series:
      return "series";
    case CoefficientMethod::closed_form:
      return "closed_form";
    case CoefficientMethod::empirical:
      return "empirical";
  }
  return "unknown";
}

CoefficientMethod parse_method(std::string_view text) {
  if (text == "series") {
    return CoefficientMethod::series;
  }
  if (text == "closed" || text == "closed_form") {
    return CoefficientMethod::closed_form;
  }
  if (text == "empirical") {
    return CoefficientMethod::empirical;
  }
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

WeylNormalization parse_normalization(std::string_view text) {
  if (text == "paper-text" || text == "paper_text") {
    return WeylNormalization::paper_text;
  }
  if (text == "conventional") {
    return WeylNormalization::conventional;
  }
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

Integer h_poly(SphereParam n, std::int64_t k) {
  const int nn = n.n();
  return binomial(k + nn - 2, nn - 2) + binomial(k - 1, nn - 2);
}

namespace {

// (poly) * (x + shift), coefficients lowest degree first.
std::vector<Rational> times_linear(const std::vector<Rational>& poly, long shift) {
  std::vector<Rational> out(poly.size() + 1, Rational(0));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out[i + 1] += poly[i];
    out[i] += poly[i] * shift;
  }
  return out;
}

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

Rational pow_rational(const Rational& r, unsigned e) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), e);
  return make_rational(num, den);
}

// k^{-n} h(k) as sum_e coeffs[e] k^{-e}; entries e = 0, 1 are zero.
std::vector<Rational> inverse_power_coefficients(SphereParam n) {
  const auto h = h_poly_coefficients(n);
  const auto nn = static_cast<std::size_t>(n.n());
  std::vector<Rational> g(nn + 1, Rational(0));
  for (std::size_t i = 0; i < h.size(); ++i) {
    g[nn - i] = h[i];
  }
  return g;
}

// Complete-monotonicity bracket on the tail T(K) = sum_{k>K} g(k), valid
// because g(x) = sum_e c_e x^{-e} with c_e >= 0 and e >= 2 is convex and
// decreasing on x > 0:
//   midpoint   g(k) <= int_{k-1/2}^{k+1/2} g          =>  T <= I(K + 1/2)
//   trapezoid  int_k^{k+1} g <= (g(k) + g(k+1)) / 2   =>  T >= I(K + 1) + g(K+1)/2
// where I(a) = int_a^inf g = sum_e c_e a^{1-e} / (e-1).
struct TailBracket {
  Rational lower;
  Rational upper;
};

Rational tail_integral(const std::vector<Rational>& g, const Rational& a) {
  Rational acc = 0;
  for (std::size_t e = 2; e < g.size(); ++e) {
    if (g[e] != 0) {
      acc += g[e] / (pow_rational(a, static_cast<unsigned>(e - 1)) * Rational(e - 1));
    }
  }
  return acc;
}

TailBracket tail_bracket(const std::vector<Rational>& g, std::uint64_t K) {
  const Integer k1 = Integer(std::to_string(K)) + 1;
  const Rational at_next(k1);
  const Rational mid = make_rational(2 * k1 - 1, 2);
  Rational g_next = 0;
  for (std::size_t e = 2; e < g.size(); ++e) {
    g_next += g[e] / pow_rational(at_next, static_cast<unsigned>(e));
  }
  return TailBracket{tail_integral(g, at_next) + g_next / 2, tail_integral(g, mid)};
}

double rational_upper_double(const Rational& r) {
  // get_d truncates toward zero; nudge up so the bound stays a bound.
  const double d = r.get_d();
  return d == 0.0 ? 0.0 : std::nextafter(d * (1.0 + 4 * DBL_EPSILON), INFINITY);
}

}  // namespace

std::vector<Rational> h_poly_coefficients(SphereParam n) {
  const int nn = n.n();
  std::vector<Rational> rising{Rational(1)};
  std::vector<Rational> falling{Rational(1)};
  for (int i = 1; i <= nn - 2; ++i) {
    rising = times_linear(rising, i);
    falling = times_linear(falling, -i);
  }
  const Rational scale = make_rational(1, factorial(static_cast<unsigned>(nn - 2)));
  std::vector<Rational> h(rising.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    h[i] = (rising[i] + falling[i]) * scale;
    h[i].canonicalize();
  }
  return h;
}

Rational coefficient_prefactor(SphereParam n) {
  const auto nn = static_cast<unsigned>(n.n());
  return make_rational(1, pow_ui(2, nn) * factorial(nn));
}

Rational convention_gap_term(SphereParam n) {
  const auto nn = static_cast<unsigned long>(n.n());
  return make_rational(1, pow_ui(nn - 1, nn));
}

PiPolynomial series_sum_closed(SphereParam n) {
  // k^{-n} [C(k+n-2,n-2) + C(k-1,n-2)] = sum_j (s'(n-1,j) + s(n-1,j)) k^{j-n-1} / (n-2)!
  // and s' + s = 2 s exactly when n - j + 1 is even, else 0.
  const auto nn = static_cast<unsigned>(n.n());
  const auto row = stirling_first_signed_row(nn - 1);
  const Rational scale = make_rational(2, factorial(nn - 2));
  PiPolynomial sum;
  for (unsigned j = 0; j <= nn - 1; ++j) {
    const unsigned zeta_arg = nn - j + 1;
    if (zeta_arg % 2 != 0 || row[j] == 0) {
      continue;
    }
    sum += zeta_even(zeta_arg) * (scale * Rational(row[j]));
  }
  return sum;
}

CoefficientReport leading_coefficient_series(SphereParam n, CountingConvention conv, const SeriesOptions& opts) {
  if (!(opts.eps > 0.0)) {
    throw std::invalid_argument("eps must be positive");
  }
  const auto g = inverse_power_coefficients(n);
  for (const auto& c : g) {
    if (c < 0) {
      throw std::logic_error("negative coefficient in k^{-n} h(k); tail bracket would not be valid");
    }
  }
  const Rational prefactor = coefficient_prefactor(n);
  const double eps_sum = opts.eps / prefactor.get_d();

  // Rounding floor of the double partial sum: each term carries at most
  // about (n+2) roundings through 1/k and Horner, all terms are positive,
  // and Neumaier summation adds O(u) overall. S <= I(1/2) bounds the sum.
  const double sum_upper = rational_upper_double(tail_integral(g, make_rational(1, 2)));
  const double rounding = (3.0 * n.n() + 6.0) * DBL_EPSILON * sum_upper;
  if (!opts.fixed_K && rounding > eps_sum / 2) {
    throw PrecisionUnattainable("series: eps below the double-precision rounding floor");
  }

  auto width_at = [&](std::uint64_t K) {
    const auto br = tail_bracket(g, K);
    return rational_upper_double(br.upper - br.lower);
  };

  std::uint64_t K = 0;
  if (opts.fixed_K) {
    K = *opts.fixed_K;
    if (K > opts.iteration_cap) {
      throw PrecisionUnattainable("series: requested K exceeds iteration cap");
    }
  } else {
    std::uint64_t hi = 1;
    while (width_at(hi) > eps_sum / 2) {
      if (hi > opts.iteration_cap) {
        throw PrecisionUnattainable("series: precision unattainable within iteration cap");
      }
      hi *= 2;
    }
    std::uint64_t lo = hi / 2;  // width(lo) > target, or lo == 0
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (width_at(mid) > eps_sum / 2 ? lo : hi) = mid;
    }
    K = hi;
    if (K > opts.iteration_cap) {
      throw PrecisionUnattainable("series: precision unattainable within iteration cap");
    }
  }

  std::vector<double> gd(g.size());
  std::transform(g.begin(), g.end(), gd.begin(), [](const Rational& c) { return c.get_d(); });
  const double partial = K == 0 ? 0.0 : simd::inverse_poly_sum(gd, 1, K);
  const auto br = tail_bracket(g, K);

  const PrecisionSpec prec = opts.precision;
  Rational correction = (br.lower + br.upper) / 2;
  if (conv == CountingConvention::paper_restricted) {
    correction -= convention_gap_term(n);
  }
  BigFloat value = (BigFloat(partial, prec) + BigFloat::from_rational(correction, prec)) *
                   BigFloat::from_rational(prefactor, prec);

  CoefficientReport out;
  out.n = n.n();
  out.convention = conv;
  out.method = CoefficientMethod::series;
  out.value = std::move(value);
  out.error_bound = rational_upper_double((br.upper - br.lower) * prefactor) + rounding * prefactor.get_d() * 1.0000001;
  out.K = K;
  return out;
}

CoefficientReport leading_coefficient_closed(SphereParam n, CountingConvention conv, PrecisionSpec prec) {
  PiPolynomial bracket = series_sum_closed(n);
  if (conv == CountingConvention::paper_restricted) {
    bracket -= PiPolynomial::constant(convention_gap_term(n));
  }
  CoefficientReport out;
  out.n = n.n();
  out.convention = conv;
  out.method = CoefficientMethod::closed_form;
  out.exact = bracket * coefficient_prefactor(n);
  out.value = pipoly_eval(*out.exact, prec);
  out.error_bound = 0.0;
  return out;
}

namespace {

BigFloat count_ratio(SphereParam n, double lambda, CountingConvention conv, PrecisionSpec prec, unsigned threads) {
  const auto counted = count_N(n, lambda, conv, threads);
  return BigFloat::from_integer(counted.count, prec) /
         BigFloat(lambda, prec).pow(static_cast<unsigned long>(n.n()));
}

}  // namespace

double empirical_ratio(SphereParam n, double lambda, CountingConvention conv, unsigned threads) {
  if (!(lambda >= 2.0)) {
    throw std::invalid_argument("empirical_ratio requires lambda >= 2");
  }
  return count_ratio(n, lambda, conv, PrecisionSpec{}, threads).to_double();
}

CoefficientReport leading_coefficient_empirical(SphereParam n, double lambda, CountingConvention conv,
                                                PrecisionSpec prec, unsigned threads) {
  if (!(lambda >= 2.0)) {
    throw std::invalid_argument("empirical coefficient requires lambda >= 2");
  }
  CoefficientReport out;
  out.n = n.n();
  out.convention = conv;
  out.method = CoefficientMethod::empirical;
  out.value = count_ratio(n, lambda, conv, prec, threads);
  out.lambda = lambda;

  // Two-point fit of r(L) = c + d ln(L)/L at L = lambda/2 and lambda; the
  // error estimate is the fitted drift still present at lambda.
  const double r_hi = out.value.to_double();
  const double half = lambda / 2;
  if (half >= 2.0) {
    const double r_lo = count_ratio(n, half, conv, prec, threads).to_double();
    const double s_hi = std::log(lambda) / lambda;
    const double s_lo = std::log(half) / half;
    const double d = (r_hi - r_lo) / (s_hi - s_lo);
    out.error_bound = std::fabs(d * s_hi);
  } else {
    out.error_bound = std::fabs(r_hi);
  }
  return out;
}

RemainderProfile remainder_profile_against(SphereParam n, std::span<const double> lambdas, CountingConvention conv,
                                           const BigFloat& constant, unsigned threads) {
  if (lambdas.empty()) {
    throw std::invalid_argument("remainder_profile needs at least one lambda");
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] >= 4.0) || !std::isfinite(lambdas[i])) {
      throw std::invalid_argument("remainder_profile requires every lambda >= 4");
    }
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) {
      throw std::invalid_argument("remainder_profile requires ascending lambdas");
    }
  }
  const PrecisionSpec prec = constant.precision();
  const auto nn = static_cast<unsigned long>(n.n());
  RemainderProfile profile;
  profile.samples.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    auto counted = count_N(n, lambda, conv, threads);
    const BigFloat lam(lambda, prec);
    BigFloat residual = BigFloat::from_integer(counted.count, prec) - constant * lam.pow(nn);
    const BigFloat scale = lam.pow(nn - 1) * lam.log();
    const double normalized = (residual / scale).to_double();
    profile.samples.push_back(RemainderSample{lambda, std::move(counted.count), std::move(residual), normalized});
  }
  const std::size_t upper_start = profile.samples.size() / 2;
  for (std::size_t i = upper_start; i < profile.samples.size(); ++i) {
    profile.fitted_C = std::max(profile.fitted_C, std::fabs(profile.samples[i].normalized));
  }
  return profile;
}

RemainderProfile remainder_profile(SphereParam n, std::span<const double> lambdas, CountingConvention conv,
                                   PrecisionSpec prec, unsigned threads) {
  const auto closed = leading_coefficient_closed(n, conv, prec);
  return remainder_profile_against(n, lambdas, conv, closed.value, threads);
}

PiPolynomial weyl_ball_constant(int n, WeylNormalization normalization) {
  if (n < 1) {
    throw std::invalid_argument("weyl_ball_constant requires n >= 1");
  }
  const auto dim = static_cast<unsigned>(2 * n);
  const PiPolynomial omega = ball_volume_even(dim);  // coefficient * pi^n
  const Rational omega_coeff = omega.coefficients().back();
  const Rational two_pow = Rational(pow_ui(2, dim));  // (2 pi)^{2n} = 2^{2n} pi^{2n}
  const Rational omega_sq = omega_coeff * omega_coeff;  // * pi^{2n}
  if (normalization == WeylNormalization::paper_text) {
    return PiPolynomial::pi_power(two_pow * omega_sq, 2 * dim);
  }
  return PiPolynomial::pi_power(omega_sq / two_pow, 0);
}

double lemma_ratio(unsigned a, unsigned b, double y) {
  if (!(y >= 1.0) || !std::isfinite(y)) {
    throw std::invalid_argument("lemma_ratio requires y >= 1");
  }
  const auto Q = static_cast<std::uint64_t>(std::floor(y));
  const Rational sum(hockey_stick_sum(Q, b, a) * factorial(a + 1));
  const Rational yr(y);
  const Rational ratio = sum / pow_rational(yr, a + 1);
  return ratio.get_d();
}

}  // namespace kohn
