#include <doctest.h>

#include <stdexcept>

#include "kohn/exact.hpp"
#include "oracles.hpp"

using namespace kohn;

TEST_CASE("binomial examples") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 3) == 0);   // k-1 = 0, n-2 = 3
  CHECK(binomial(3, -1) == 0);  // negative lower index
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 3) == -1);  // (-1)(-2)(-3)/6
  CHECK(binomial(-4, 2) == 10);  // (-4)(-5)/2
}

TEST_CASE("binomial matches Pascal's triangle and its recurrence") {
  const auto rows = oracle::pascal(60);
  for (int a = 0; a <= 60; ++a) {
    for (int b = 0; b <= a; ++b) {
      REQUIRE(binomial(a, b) == rows[a][b]);
      if (a >= 1 && b >= 1) {
        REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
      }
    }
    CHECK(binomial(a, a + 1) == 0);
  }
}

TEST_CASE("binomial reflection C(k+n-2, n-2) = (-1)^n C(-k-1, n-2)") {
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k <= 30; ++k) {
      const Integer sign = n % 2 == 0 ? 1 : -1;
      REQUIRE(binomial(k + n - 2, n - 2) == sign * binomial(-k - 1, n - 2));
      REQUIRE(binomial(-k - 1, n - 2) == oracle::falling_binomial(-k - 1, n - 2));
    }
  }
}

TEST_CASE("hockey-stick sum") {
  CHECK(hockey_stick_sum(100, 0, 1) == 5050);
  CHECK(hockey_stick_sum(0, 7, 3) == 0);
  // C(4,2)+C(5,2)+C(6,2)+C(7,2)
  CHECK(hockey_stick_sum(4, 3, 2) == 6 + 10 + 15 + 21);
  CHECK(hockey_stick_sum(4, 3, 2) == 52);

  const auto rows = oracle::pascal(81);
  for (std::uint64_t b = 0; b <= 40; ++b) {
    for (std::uint64_t a = 0; a <= 40; ++a) {
      Integer brute = 0;
      for (std::uint64_t Q = 0; Q <= 40; ++Q) {
        if (Q > 0 && a <= Q + b) {
          brute += rows[Q + b][a];
        }
        REQUIRE(hockey_stick_sum(Q, b, a) == brute);
      }
    }
  }
}

TEST_CASE("Stirling numbers of the first kind") {
  CHECK(stirling_first_signed(3, 2) == -3);
  CHECK(stirling_first_signed(4, 1) == -6);
  CHECK(stirling_first_unsigned(3, 2) == 3);
  CHECK(stirling_first_signed(0, 0) == 1);
  CHECK(stirling_first_signed(2, 5) == 0);
  for (unsigned m = 0; m <= 10; ++m) {
    CHECK(stirling_first_signed(m, m) == 1);
    CHECK(stirling_first_unsigned(m, m) == 1);
  }

  SUBCASE("rows equal the falling and rising factorial expansions") {
    for (unsigned m = 0; m <= 12; ++m) {
      const auto falling = oracle::expand_factorial_poly(m, -1);
      const auto rising = oracle::expand_factorial_poly(m, +1);
      const auto row = stirling_first_signed_row(m);
      REQUIRE(row.size() == falling.size());
      for (unsigned j = 0; j <= m; ++j) {
        REQUIRE(row[j] == falling[j]);
        REQUIRE(stirling_first_unsigned(m, j) == rising[j]);
      }
    }
  }

  SUBCASE("sign pattern and row sums") {
    for (unsigned m = 0; m <= 8; ++m) {
      Integer row_sum = 0;
      for (unsigned j = 0; j <= m; ++j) {
        const Integer sign = (m - j) % 2 == 0 ? 1 : -1;
        REQUIRE(stirling_first_unsigned(m, j) == sign * stirling_first_signed(m, j));
        row_sum += stirling_first_unsigned(m, j);
      }
      CHECK(row_sum == factorial(m));
    }
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(5) == 0);
  CHECK(bernoulli(12) == make_rational(-691, 2730));

  const unsigned L = 40;
  const auto B = bernoulli_numbers(L);
  const auto reference = oracle::bernoulli_akiyama_tanigawa(L);
  for (unsigned l = 0; l <= L; ++l) {
    if (l != 1) {
      REQUIRE(B[l] == reference[l]);
    }
    if (l >= 3 && l % 2 == 1) {
      REQUIRE(B[l] == 0);
    }
    if (l >= 2 && l % 2 == 0) {
      // sign(B_{2m}) = (-1)^{m+1}
      REQUIRE(sgn(B[l]) == ((l / 2) % 2 == 1 ? 1 : -1));
    }
    if (l == 0) {
      continue;
    }
    // defining recurrence, l >= 1
    Rational acc = 0;
    for (unsigned j = 0; j <= l; ++j) {
      acc += Rational(binomial(l + 1, j)) * B[j];
    }
    REQUIRE(acc == 0);
  }
}

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}
