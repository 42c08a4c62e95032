#pragma once

// Sums of a polynomial in 1/k over a range of k:
//
//   sum_{k=first}^{last} P(1/k),  P(t) = sum_e coeffs[e] * t^e
//
// This is the floating inner loop of the truncated coefficient series and of
// the zeta partial-sum checks. The scalar kernel is the reference; the AVX2
// kernel processes four k at a time and is chosen at runtime when the CPU
// supports AVX2+FMA. Both traverse k in descending order (smallest terms
// first) with Neumaier-compensated accumulation.

#include <cstdint>
#include <span>
#include <string_view>

namespace kohn::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when the AVX2 kernel was compiled in and the running CPU supports it.
bool avx2_available();

/// Widest ISA usable on this machine.
Isa best_isa();

double inverse_poly_sum_scalar(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last);

/// Throws std::runtime_error when !avx2_available().
double inverse_poly_sum_avx2(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last);

double inverse_poly_sum(Isa isa, std::span<const double> coeffs, std::uint64_t first, std::uint64_t last);

/// Dispatches to best_isa().
double inverse_poly_sum(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last);

}  // namespace kohn::simd
