#pragma once

// Exact integer/rational arithmetic and the combinatorial special functions
// used by the spectrum and coefficient code.
//
// Integer and Rational are GMP's C++ classes. Every Rational produced by this
// module is canonical (lowest terms, positive denominator).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace kohn {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned m);

/// Binomial coefficient, total on all integer pairs:
///   b < 0                -> 0
///   0 <= b, a >= 0       -> C(a, b), which is 0 for b > a
///   0 <= b, a < 0        -> a(a-1)...(a-b+1)/b!  (generalized)
Integer binomial(std::int64_t a, std::int64_t b);

/// sum_{q=1}^{Q} C(q+b, a) via the hockey-stick identity
/// C(Q+b+1, a+1) - C(b+1, a+1).
Integer hockey_stick_sum(std::uint64_t Q, std::uint64_t b, std::uint64_t a);

/// Row m of the signed Stirling numbers of the first kind: entry j is the
/// coefficient of x^j in x(x-1)...(x-m+1). Size m+1.
std::vector<Integer> stirling_first_signed_row(unsigned m);

/// s(m, j); 0 when j > m.
Integer stirling_first_signed(unsigned m, unsigned j);

/// |s(m, j)|, the coefficient of x^j in the rising factorial x(x+1)...(x+m-1).
Integer stirling_first_unsigned(unsigned m, unsigned j);

/// B_0..B_l from sum_{j=0}^{l} C(l+1, j) B_j = 0 (so B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(unsigned l);

Rational bernoulli(unsigned l);

}  // namespace kohn
