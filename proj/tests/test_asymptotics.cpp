#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kohn/asymptotics.hpp"
#include "oracles.hpp"

using namespace kohn;

namespace {

constexpr auto kPaper = CountingConvention::paper_restricted;
constexpr auto kFull = CountingConvention::full_spectrum;

// Frozen from an arbitrary-precision direct summation of
// sum_k k^{-n} h(k) / (2^n n!) (mpmath nsum, 40 digits), independent of
// both the Stirling route and the truncated series.
struct Frozen {
  int n;
  double full;
  double paper;
};
constexpr Frozen kFrozen[] = {
    {2, 0.41123351671205660912, 0.28623351671205660912},
    {3, 0.068538919452009434853, 0.065934752785342768186},
    {4, 0.0099207826413294344258, 0.0098886324355681175534},
    {5, 0.0011762577810478078596, 0.0011760034678967661930},
    {6, 0.00011563672007806141944, 0.00011563533118917253055},
};

}  // namespace

TEST_CASE("h_poly") {
  for (std::int64_t k = 1; k <= 20; ++k) {
    CHECK(h_poly(SphereParam(2), k) == 2);
  }
  CHECK(h_poly(SphereParam(5), 1) == 4);
  CHECK(h_poly(SphereParam(5), 4) == 36);
  // 2(k^3 + 11k)/6 for n = 5
  for (std::int64_t k = 1; k <= 40; ++k) {
    CHECK(h_poly(SphereParam(5), k) * 3 == k * k * k + 11 * k);
  }
}

TEST_CASE("h_poly coefficients reproduce h(k)") {
  for (int n = 2; n <= 10; ++n) {
    const auto coeffs = h_poly_coefficients(SphereParam(n));
    CHECK(coeffs.size() == static_cast<std::size_t>(n - 1));
    for (std::int64_t k = -15; k <= 15; ++k) {
      Rational acc = 0;
      Rational kp = 1;
      for (const auto& c : coeffs) {
        acc += c * kp;
        kp *= k;
      }
      REQUIRE(acc == Rational(h_poly(SphereParam(n), k)));
    }
  }
}

TEST_CASE("h parity: h(-k) = (-1)^n h(k)") {
  for (int n = 2; n <= 10; ++n) {
    const Integer sign = n % 2 == 0 ? 1 : -1;
    for (std::int64_t k = 1; k <= 50; ++k) {
      REQUIRE(h_poly(SphereParam(n), -k) == sign * h_poly(SphereParam(n), k));
    }
  }
}

TEST_CASE("closed form: n = 5 paper example") {
  const auto r = leading_coefficient_closed(SphereParam(5), kPaper);
  REQUIRE(r.exact.has_value());
  const PiPolynomial expected =
      PiPolynomial({make_rational(-1, 1024), Rational(1, 18), Rational(11, 270)}) * Rational(1, 3840);
  CHECK(*r.exact == expected);
  CHECK(r.exact->to_string() == "-1/3932160 + 1/69120*pi^2 + 11/1036800*pi^4");
  CHECK(r.error_bound == 0.0);
  CHECK(r.method == CoefficientMethod::closed_form);
}

TEST_CASE("closed form: n = 2") {
  CHECK(*leading_coefficient_closed(SphereParam(2), kPaper).exact ==
        PiPolynomial({Rational(-1, 8), Rational(1, 24)}));
  CHECK(*leading_coefficient_closed(SphereParam(2), kFull).exact == PiPolynomial({Rational(0), Rational(1, 24)}));
  CHECK(series_sum_closed(SphereParam(2)) == PiPolynomial({Rational(0), Rational(1, 3)}));
}

TEST_CASE("closed form matches frozen high-precision sums") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.n);
    CHECK(leading_coefficient_closed(SphereParam(f.n), kFull).value.to_double() == doctest::Approx(f.full).epsilon(1e-14));
    CHECK(leading_coefficient_closed(SphereParam(f.n), kPaper).value.to_double() ==
          doctest::Approx(f.paper).epsilon(1e-14));
  }
}

TEST_CASE("convention gap is exactly (n-1)^{-n} / (2^n n!)") {
  for (int n = 2; n <= 10; ++n) {
    const auto full = *leading_coefficient_closed(SphereParam(n), kFull).exact;
    const auto paper = *leading_coefficient_closed(SphereParam(n), kPaper).exact;
    CHECK(full - paper == PiPolynomial::constant(convention_gap_term(SphereParam(n)) * coefficient_prefactor(SphereParam(n))));
  }
}

TEST_CASE("Stirling route equals direct summation within the tail bound") {
  const std::uint64_t K = 2000;
  for (int n = 2; n <= 10; ++n) {
    Rational direct = 0;
    for (std::uint64_t k = 1; k <= K; ++k) {
      Integer kn;
      mpz_ui_pow_ui(kn.get_mpz_t(), k, static_cast<unsigned long>(n));
      direct += Rational(h_poly(SphereParam(n), static_cast<std::int64_t>(k))) / Rational(kn);
    }
    const double closed = pipoly_eval(series_sum_closed(SphereParam(n)), PrecisionSpec{}).to_double();
    // h(k) <= 2 (k+n-2)^{n-2} / (n-2)!  =>  tail <= 2 (1 + (n-2)/K)^{n-2} / ((n-2)! K)
    const double tail = 2.0 * std::pow(1.0 + (n - 2.0) / K, n - 2) / (std::tgamma(n - 1.0) * K);
    const double gap = closed - direct.get_d();
    CHECK(gap > 0.0);
    CHECK(gap <= tail);
  }
}

TEST_CASE("series: examples") {
  const double pi2 = M_PI * M_PI;
  const auto full = leading_coefficient_series(SphereParam(2), kFull);
  CHECK(std::fabs(full.value.to_double() - pi2 / 24) <= 1e-12);
  CHECK(full.error_bound <= 1e-12);
  CHECK(full.K.has_value());

  const auto paper = leading_coefficient_series(SphereParam(2), kPaper);
  CHECK(std::fabs(paper.value.to_double() - (pi2 / 24 - 0.125)) <= 1e-12);

  const auto five = leading_coefficient_series(SphereParam(5), kPaper);
  CHECK(std::fabs(five.value.to_double() - leading_coefficient_closed(SphereParam(5), kPaper).value.to_double()) <=
        1e-12);
}

TEST_CASE("series agrees with closed form for n = 2..10") {
  for (int n = 2; n <= 10; ++n) {
    for (const auto conv : {kPaper, kFull}) {
      const auto s = leading_coefficient_series(SphereParam(n), conv);
      const auto c = leading_coefficient_closed(SphereParam(n), conv);
      const double diff = (s.value - c.value).abs().to_double();
      CAPTURE(n);
      CHECK(diff <= s.error_bound);
      CHECK(diff <= 2e-12);
      CHECK(s.error_bound <= 1e-12);
    }
  }
}

TEST_CASE("series tail certificate is sound") {
  for (int n = 2; n <= 6; ++n) {
    for (const double eps : {1e-6, 1e-9, 1e-12}) {
      SeriesOptions opts;
      opts.eps = eps;
      const auto coarse = leading_coefficient_series(SphereParam(n), kFull, opts);
      opts.fixed_K = 10 * *coarse.K;
      const auto fine = leading_coefficient_series(SphereParam(n), kFull, opts);
      CHECK((fine.value - coarse.value).abs().to_double() <= coarse.error_bound);
      CHECK(fine.error_bound < coarse.error_bound);
    }
  }
}

TEST_CASE("series: unattainable precision and bad input") {
  SeriesOptions opts;
  opts.eps = 1e-100;
  CHECK_THROWS_AS(leading_coefficient_series(SphereParam(2), kFull, opts), PrecisionUnattainable);

  opts.eps = 1e-12;
  opts.iteration_cap = 10;
  CHECK_THROWS_AS(leading_coefficient_series(SphereParam(2), kFull, opts), PrecisionUnattainable);

  opts.iteration_cap = 1'000'000'000;
  opts.eps = 0.0;
  CHECK_THROWS_AS(leading_coefficient_series(SphereParam(2), kFull, opts), std::invalid_argument);
}

TEST_CASE("empirical ratio") {
  CHECK(empirical_ratio(SphereParam(2), 2.0, kFull) == 0.5);
  CHECK(empirical_ratio(SphereParam(2), 2.0, kPaper) == 0.0);
  CHECK_THROWS_AS(empirical_ratio(SphereParam(2), 1.0, kFull), std::invalid_argument);

  const double limit = M_PI * M_PI / 24;
  double previous_err = 1.0;
  for (double lambda : {1e3, 1e5, 1e7}) {
    const double err = std::fabs(empirical_ratio(SphereParam(2), lambda, kFull) - limit);
    CHECK(err < previous_err);
    previous_err = err;
  }
  CHECK(previous_err < 1e-5);

  const auto report = leading_coefficient_empirical(SphereParam(3), 1e5, kFull);
  const double closed = leading_coefficient_closed(SphereParam(3), kFull).value.to_double();
  CHECK(report.method == CoefficientMethod::empirical);
  CHECK(report.lambda == 1e5);
  CHECK(std::fabs(report.value.to_double() - closed) <= 0.01 * closed);
}

TEST_CASE("remainder profile") {
  std::vector<double> lambdas;
  for (int e = 10; e <= 20; ++e) {
    lambdas.push_back(std::ldexp(1.0, e));
  }
  const auto full = remainder_profile(SphereParam(2), lambdas, kFull);
  REQUIRE(full.samples.size() == lambdas.size());
  double max_all = 0.0;
  for (const auto& s : full.samples) {
    max_all = std::max(max_all, std::fabs(s.normalized));
  }
  CHECK(full.fitted_C <= max_all);
  CHECK(max_all < 5.0);

  SUBCASE("single sample") {
    const std::vector<double> one{1000.0};
    const auto p = remainder_profile(SphereParam(3), one, kPaper);
    REQUIRE(p.samples.size() == 1);
    CHECK(p.fitted_C == std::fabs(p.samples[0].normalized));
  }

  SUBCASE("each convention is bounded only against its own constant") {
    const auto closed_full = leading_coefficient_closed(SphereParam(2), kFull).value;
    const auto closed_paper = leading_coefficient_closed(SphereParam(2), kPaper).value;
    const auto paper_own = remainder_profile_against(SphereParam(2), lambdas, kPaper, closed_paper);
    const auto paper_wrong = remainder_profile_against(SphereParam(2), lambdas, kPaper, closed_full);
    const auto full_wrong = remainder_profile_against(SphereParam(2), lambdas, kFull, closed_paper);
    CHECK(paper_own.fitted_C < 5.0);
    CHECK(paper_wrong.fitted_C > 1000.0);
    CHECK(full_wrong.fitted_C > 1000.0);
  }

  SUBCASE("input validation") {
    const std::vector<double> small{2.0};
    const std::vector<double> descending{100.0, 50.0};
    CHECK_THROWS_AS(remainder_profile(SphereParam(2), small, kFull), std::invalid_argument);
    CHECK_THROWS_AS(remainder_profile(SphereParam(2), descending, kFull), std::invalid_argument);
    CHECK_THROWS_AS(remainder_profile(SphereParam(2), std::vector<double>{}, kFull), std::invalid_argument);
  }
}

TEST_CASE("Weyl ball constant") {
  CHECK(weyl_ball_constant(1, WeylNormalization::paper_text).to_string() == "4*pi^4");
  CHECK(weyl_ball_constant(2, WeylNormalization::paper_text).to_string() == "4*pi^8");
  CHECK(weyl_ball_constant(1, WeylNormalization::conventional).to_string() == "1/4");
  CHECK(weyl_ball_constant(2, WeylNormalization::conventional).to_string() == "1/64");
  CHECK_THROWS_AS(weyl_ball_constant(0, WeylNormalization::conventional), std::invalid_argument);
  CHECK(parse_normalization("paper-text") == WeylNormalization::paper_text);
  CHECK_THROWS_AS(parse_normalization("textbook"), std::invalid_argument);
}

TEST_CASE("lemma ratio") {
  CHECK(lemma_ratio(1, 0, 100.0) == doctest::Approx(1.01).epsilon(1e-15));
  CHECK(lemma_ratio(0, 0, 7.5) == doctest::Approx(7.0 / 7.5).epsilon(1e-15));
  CHECK(std::fabs(lemma_ratio(3, 2, 1e4) - 1.0) <= 1e-3);
  CHECK_THROWS_AS(lemma_ratio(1, 1, 0.5), std::invalid_argument);
}
