#include "kohn/exact.hpp"

#include <stdexcept>

namespace kohn {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned m) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

Integer binomial(std::int64_t a, std::int64_t b) {
  if (b < 0) {
    return 0;
  }
  // mpz_bin_ui handles negative upper arguments with the generalized
  // definition and returns 0 for 0 <= a < b.
  Integer out;
  const Integer top(static_cast<long>(a));
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

Integer hockey_stick_sum(std::uint64_t Q, std::uint64_t b, std::uint64_t a) {
  if (Q == 0) {
    return 0;
  }
  const auto top = static_cast<std::int64_t>(Q + b + 1);
  const auto base = static_cast<std::int64_t>(b + 1);
  const auto low = static_cast<std::int64_t>(a + 1);
  return binomial(top, low) - binomial(base, low);
}

std::vector<Integer> stirling_first_signed_row(unsigned m) {
  // s(i+1, j) = s(i, j-1) - i * s(i, j)
  std::vector<Integer> row(m + 1, 0);
  row[0] = 1;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j > 0; --j) {
      row[j] = row[j - 1] - Integer(i) * row[j];
    }
    row[0] = -Integer(i) * row[0];
  }
  return row;
}

Integer stirling_first_signed(unsigned m, unsigned j) {
  if (j > m) {
    return 0;
  }
  return stirling_first_signed_row(m)[j];
}

Integer stirling_first_unsigned(unsigned m, unsigned j) {
  return abs(stirling_first_signed(m, j));
}

std::vector<Rational> bernoulli_numbers(unsigned l) {
  std::vector<Rational> B(l + 1);
  B[0] = 1;
  for (unsigned k = 1; k <= l; ++k) {
    Rational acc = 0;
    for (unsigned j = 0; j < k; ++j) {
      acc += Rational(binomial(k + 1, j)) * B[j];
    }
    B[k] = -acc / Rational(k + 1);
    B[k].canonicalize();
  }
  return B;
}

Rational bernoulli(unsigned l) {
  if (l >= 3 && l % 2 == 1) {
    return 0;
  }
  return bernoulli_numbers(l)[l];
}

}  // namespace kohn
