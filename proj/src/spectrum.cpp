#include "kohn/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace kohn {

SphereParam::SphereParam(int n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("n must satisfy n >= 2 (sphere S^{2n-1} in C^n), got n = " + std::to_string(n));
  }
}

std::string_view to_string(CountingConvention conv) {
  return conv == CountingConvention::paper_restricted ? "paper_restricted" : "full_spectrum";
}

CountingConvention parse_convention(std::string_view text) {
  if (text == "paper" || text == "paper_restricted") {
    return CountingConvention::paper_restricted;
  }
  if (text == "full" || text == "full_spectrum") {
    return CountingConvention::full_spectrum;
  }
  throw std::invalid_argument("unknown convention '" + std::string(text) + "' (expected paper or full)");
}

namespace {

std::int64_t as_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX) - 64) {
    throw std::overflow_error("index too large");
  }
  return static_cast<std::int64_t>(v);
}

// Smallest P = p + n - 1 included under the convention.
std::uint64_t first_divisor(SphereParam n, CountingConvention conv) {
  const auto nn = static_cast<std::uint64_t>(n.n());
  return conv == CountingConvention::paper_restricted ? nn : nn - 1;
}

std::uint64_t floor_checked(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::invalid_argument(std::string(what) + " must be a finite nonnegative number");
  }
  if (x >= 9.2e18) {
    throw std::overflow_error(std::string(what) + " too large");
  }
  return static_cast<std::uint64_t>(std::floor(x));
}

// Sum over P in [lo, hi] of sum_{q=1}^{floor(X/P)} f(P, q).
Integer count_chunk(int n, std::uint64_t X, std::uint64_t lo, std::uint64_t hi) {
  const auto nn = static_cast<std::uint64_t>(n);
  Integer acc = 0;
  Integer p_sum1;
  Integer p_sum2;
  std::uint64_t P = lo;
  while (P <= hi) {
    const std::uint64_t Q = X / P;
    const std::uint64_t P_end = std::min(hi, X / Q);
    const auto a = as_signed(P);
    const auto b = as_signed(P_end);
    // sum_{P'=P}^{P_end} C(P'-1, n-2)  and  sum C(P', n-1)
    p_sum1 = binomial(b, n - 1) - binomial(a - 1, n - 1);
    p_sum2 = binomial(b + 1, n) - binomial(a, n);
    // sum_{q=1}^{Q} C(q+n-2, n-1)  and  sum C(q+n-2, n-2)
    acc += p_sum1 * hockey_stick_sum(Q, nn - 2, nn - 1) + p_sum2 * hockey_stick_sum(Q, nn - 2, nn - 2);
    if (P_end == hi) {
      break;
    }
    P = P_end + 1;
  }
  return acc;
}

// Splits [lo, X] into `parts` ranges holding roughly equal numbers of
// constant-floor(X/P) runs. There are about sqrt(X) singleton runs below
// sqrt(X) and sqrt(X) longer runs above it.
std::vector<std::uint64_t> split_points(std::uint64_t lo, std::uint64_t X, unsigned parts) {
  const double root = std::sqrt(static_cast<double>(X));
  const double total_runs = 2.0 * root;
  std::vector<std::uint64_t> cuts{lo};
  for (unsigned i = 1; i < parts; ++i) {
    const double share = total_runs * i / parts;
    const double at = share <= root ? share : static_cast<double>(X) / (total_runs - share);
    const auto cut = static_cast<std::uint64_t>(at);
    if (cut > cuts.back() && cut < X) {
      cuts.push_back(cut);
    }
  }
  cuts.push_back(X + 1);
  return cuts;
}

}  // namespace

Integer hpq_dim(SphereParam n, std::uint64_t p, std::uint64_t q) {
  const int nn = n.n();
  const auto sp = as_signed(p);
  const auto sq = as_signed(q);
  return binomial(nn + sp - 1, sp) * binomial(nn + sq - 1, sq) -
         binomial(nn + sp - 2, sp - 1) * binomial(nn + sq - 2, sq - 1);
}

std::uint64_t eigenvalue(SphereParam n, std::uint64_t p, std::uint64_t q) {
  std::uint64_t shifted = 0;
  std::uint64_t out = 0;
  if (__builtin_add_overflow(p, static_cast<std::uint64_t>(n.n() - 1), &shifted) ||
      __builtin_mul_overflow(shifted, q, &out) || __builtin_mul_overflow(out, std::uint64_t{2}, &out)) {
    throw std::overflow_error("eigenvalue exceeds 64 bits");
  }
  return out;
}

FValue f_value(SphereParam n, std::int64_t p, std::uint64_t q) {
  if (q < 1) {
    throw std::invalid_argument("f_value requires q >= 1");
  }
  const int nn = n.n();
  const auto sq = as_signed(q);
  FValue out;
  out.f1 = binomial(p - 1, nn - 2) * binomial(sq + nn - 2, nn - 1);
  out.f2 = binomial(p, nn - 1) * binomial(sq + nn - 2, nn - 2);
  out.total = out.f1 + out.f2;
  return out;
}

Integer delta_M(SphereParam n, std::uint64_t m, CountingConvention conv) {
  if (m < 1) {
    throw std::invalid_argument("delta_M requires m >= 1");
  }
  const std::uint64_t P0 = first_divisor(n, conv);
  Integer acc = 0;
  for (std::uint64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) {
      continue;
    }
    const std::uint64_t e = m / d;
    if (d >= P0) {
      acc += f_value(n, as_signed(d), e).total;
    }
    if (e != d && e >= P0) {
      acc += f_value(n, as_signed(e), d).total;
    }
  }
  return acc;
}

Integer count_M_at(SphereParam n, std::uint64_t X, CountingConvention conv, unsigned threads) {
  const std::uint64_t P0 = first_divisor(n, conv);
  if (X < P0) {
    return 0;
  }
  if (threads <= 1 || X < 1024) {
    return count_chunk(n.n(), X, P0, X);
  }
  const auto cuts = split_points(P0, X, threads);
  std::vector<Integer> partial(cuts.size() - 1);
  {
    std::vector<std::thread> workers;
    workers.reserve(partial.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      workers.emplace_back([&, i] { partial[i] = count_chunk(n.n(), X, cuts[i], cuts[i + 1] - 1); });
    }
    for (auto& w : workers) {
      w.join();
    }
  }
  Integer total = 0;
  for (const auto& part : partial) {
    total += part;
  }
  return total;
}

Integer count_M(SphereParam n, double x, CountingConvention conv, unsigned threads) {
  return count_M_at(n, floor_checked(x, "x"), conv, threads);
}

CountingResult count_N(SphereParam n, double lambda, CountingConvention conv, unsigned threads) {
  const std::uint64_t X = floor_checked(lambda, "lambda") / 2;
  return CountingResult{lambda, count_M_at(n, X, conv, threads), conv};
}

std::vector<SpectrumEntry> spectrum_table(SphereParam n, double lambda_max, CountingConvention conv) {
  if (!(lambda_max >= 2.0)) {
    throw std::invalid_argument("lambda_max must be >= 2");
  }
  const std::uint64_t X = floor_checked(lambda_max, "lambda_max") / 2;
  const std::uint64_t P0 = first_divisor(n, conv);
  if (X > (std::uint64_t{1} << 26)) {
    throw std::invalid_argument("spectrum table too large; lambda_max must be <= 2^27");
  }
  const int nn = n.n();

  // q-dependent binomials, shared across all P.
  std::vector<Integer> q_part1(X + 1);
  std::vector<Integer> q_part2(X + 1);
  for (std::uint64_t q = 1; q <= X; ++q) {
    const auto sq = static_cast<std::int64_t>(q);
    q_part1[q] = binomial(sq + nn - 2, nn - 1);
    q_part2[q] = binomial(sq + nn - 2, nn - 2);
  }

  std::vector<Integer> mult(X + 1, 0);
  for (std::uint64_t P = P0; P <= X; ++P) {
    const auto sp = static_cast<std::int64_t>(P);
    const Integer a = binomial(sp - 1, nn - 2);
    const Integer b = binomial(sp, nn - 1);
    for (std::uint64_t q = 1, m = P; m <= X; ++q, m += P) {
      mult[m] += a * q_part1[q] + b * q_part2[q];
    }
  }

  std::vector<SpectrumEntry> table;
  for (std::uint64_t m = 1; m <= X; ++m) {
    if (mult[m] != 0) {
      table.push_back(SpectrumEntry{2 * m, std::move(mult[m])});
    }
  }
  return table;
}

}  // namespace kohn
