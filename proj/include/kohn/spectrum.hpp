#pragma once

// Point spectrum of the Kohn Laplacian on functions on S^{2n-1} in C^n.
//
// The eigenspace H_{p,q} of bidegree (p,q) carries eigenvalue 2q(p+n-1).
// q = 0 is the (infinite-dimensional) kernel and is never counted: all
// counting functions below count strictly positive eigenvalues.
//
// Writing the eigenvalue as 2m with m = P*q, P = p+n-1, the multiplicity
// of 2m is a divisor sum of
//
//   f(P,q) = C(P-1,n-2) C(q+n-2,n-1) + C(P,n-1) C(q+n-2,n-2)
//
// which equals dim H_{P-n+1,q} for P >= n-1. Two divisor ranges are
// exposed (CountingConvention):
//   paper_restricted  P >= n    (drops the H_{0,q} spaces)
//   full_spectrum     P >= n-1  (every H_{p,q} with p >= 0, q >= 1)

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kohn/exact.hpp"

namespace kohn {

/// Sphere dimension parameter, n >= 2.
class SphereParam {
 public:
  /// Throws std::invalid_argument for n < 2.
  explicit SphereParam(int n);
  constexpr int n() const { return n_; }

 private:
  int n_;
};

enum class CountingConvention { paper_restricted, full_spectrum };

std::string_view to_string(CountingConvention conv);
/// Accepts "paper", "paper_restricted", "full", "full_spectrum".
/// Throws std::invalid_argument otherwise.
CountingConvention parse_convention(std::string_view text);

struct SpectrumEntry {
  std::uint64_t eigenvalue;
  Integer multiplicity;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct CountingResult {
  double lambda;
  Integer count;
  CountingConvention convention;
};

/// dim H_{p,q}(S^{2n-1}) = C(n+p-1,p)C(n+q-1,q) - C(n+p-2,p-1)C(n+q-2,q-1).
Integer hpq_dim(SphereParam n, std::uint64_t p, std::uint64_t q);

/// 2q(p+n-1). Throws std::overflow_error past 64 bits.
std::uint64_t eigenvalue(SphereParam n, std::uint64_t p, std::uint64_t q);

struct FValue {
  Integer f1;
  Integer f2;
  Integer total;
};

/// f(p,q) and its two binomial-product parts. Throws std::invalid_argument
/// for q < 1.
FValue f_value(SphereParam n, std::int64_t p, std::uint64_t q);

/// Multiplicity of eigenvalue 2m. Throws std::invalid_argument for m < 1.
Integer delta_M(SphereParam n, std::uint64_t m, CountingConvention conv);

/// M(X) = sum_{m <= X} delta_M(m), for integer X.
///
/// The double sum over (P, q) with P*q <= X is taken P-outer. Both the
/// inner q-sum and the P-sum over a run of P sharing the same floor(X/P)
/// collapse to hockey-stick binomials, so the cost is O(sqrt X) big-integer
/// operations. `threads` > 1 splits the P range into contiguous chunks; the
/// partial sums are integers, so the result does not depend on `threads`.
Integer count_M_at(SphereParam n, std::uint64_t X, CountingConvention conv, unsigned threads = 1);

/// M(x) for real x >= 0 (M(x) = M(floor x)). Throws std::invalid_argument
/// for negative or non-finite x.
Integer count_M(SphereParam n, double x, CountingConvention conv, unsigned threads = 1);

/// N(lambda) = M(lambda/2): positive eigenvalues <= lambda with multiplicity.
CountingResult count_N(SphereParam n, double lambda, CountingConvention conv, unsigned threads = 1);

/// All (2m, delta_M(m)) with 2m <= lambda_max and nonzero multiplicity,
/// ascending. Throws std::invalid_argument for lambda_max < 2.
std::vector<SpectrumEntry> spectrum_table(SphereParam n, double lambda_max, CountingConvention conv);

}  // namespace kohn
