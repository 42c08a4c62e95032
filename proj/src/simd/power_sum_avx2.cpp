// Compiled with -mavx2 -mfma; only called after a runtime cpuid check.

#include <immintrin.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "kohn/simd/power_sum.hpp"

namespace kohn::simd {

namespace {

inline void neumaier_add(double& sum, double& comp, double x) {
  const double s = sum + x;
  if (std::fabs(sum) >= std::fabs(x)) {
    comp += (sum - s) + x;
  } else {
    comp += (x - s) + sum;
  }
  sum = s;
}

}  // namespace

double inverse_poly_sum_avx2_impl(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last) {
  if (first == 0) {
    throw std::invalid_argument("inverse_poly_sum: k must start at 1");
  }
  if (coeffs.empty() || first > last) {
    return 0.0;
  }
  const std::size_t degree = coeffs.size() - 1;
  const std::uint64_t count = last - first + 1;
  const std::uint64_t vec_count = count / 4 * 4;

  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d step = _mm256_set1_pd(4.0);
  const auto top = static_cast<double>(last);
  __m256d kv = _mm256_set_pd(top - 3.0, top - 2.0, top - 1.0, top);
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  for (std::uint64_t i = 0; i < vec_count; i += 4) {
    const __m256d t = _mm256_div_pd(one, kv);
    __m256d term = _mm256_set1_pd(coeffs[degree]);
    for (std::size_t e = degree; e-- > 0;) {
      term = _mm256_fmadd_pd(term, t, _mm256_set1_pd(coeffs[e]));
    }
    const __m256d s = _mm256_add_pd(sum, term);
    const __m256d sum_big = _mm256_cmp_pd(_mm256_and_pd(sum, abs_mask), _mm256_and_pd(term, abs_mask), _CMP_GE_OQ);
    const __m256d when_sum_big = _mm256_add_pd(_mm256_sub_pd(sum, s), term);
    const __m256d when_term_big = _mm256_add_pd(_mm256_sub_pd(term, s), sum);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(when_term_big, when_sum_big, sum_big));
    sum = s;
    kv = _mm256_sub_pd(kv, step);
  }

  alignas(32) std::array<double, 4> lane_sum{};
  alignas(32) std::array<double, 4> lane_comp{};
  _mm256_store_pd(lane_sum.data(), sum);
  _mm256_store_pd(lane_comp.data(), comp);
  double total = 0.0;
  double total_comp = 0.0;
  for (int lane = 0; lane < 4; ++lane) {
    neumaier_add(total, total_comp, lane_sum[lane]);
    total_comp += lane_comp[lane];
  }

  // Leftover k values are the smallest indices, i.e. the largest terms.
  for (std::uint64_t k = first + (count - vec_count); k-- > first;) {
    const double t = 1.0 / static_cast<double>(k);
    double term = coeffs[degree];
    for (std::size_t e = degree; e-- > 0;) {
      term = std::fma(term, t, coeffs[e]);
    }
    neumaier_add(total, total_comp, term);
  }
  return total + total_comp;
}

}  // namespace kohn::simd
