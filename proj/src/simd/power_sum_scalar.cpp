#include <cmath>
#include <stdexcept>

#include "kohn/simd/power_sum.hpp"

namespace kohn::simd {

double inverse_poly_sum_scalar(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last) {
  if (first == 0) {
    throw std::invalid_argument("inverse_poly_sum: k must start at 1");
  }
  if (coeffs.empty() || first > last) {
    return 0.0;
  }
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint64_t k = last + 1; k-- > first;) {
    const double t = 1.0 / static_cast<double>(k);
    double term = coeffs.back();
    for (std::size_t e = coeffs.size() - 1; e-- > 0;) {
      term = std::fma(term, t, coeffs[e]);
    }
    // Neumaier
    const double s = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - s) + term;
    } else {
      comp += (term - s) + sum;
    }
    sum = s;
  }
  return sum + comp;
}

}  // namespace kohn::simd
