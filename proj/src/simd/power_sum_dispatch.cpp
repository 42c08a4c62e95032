#include <stdexcept>

#include "kohn/simd/power_sum.hpp"

namespace kohn::simd {

#if defined(KOHN_HAVE_AVX2_KERNEL)
double inverse_poly_sum_avx2_impl(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last);
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(KOHN_HAVE_AVX2_KERNEL)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

Isa best_isa() { return avx2_available() ? Isa::avx2 : Isa::scalar; }

double inverse_poly_sum_avx2(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last) {
#if defined(KOHN_HAVE_AVX2_KERNEL)
  if (avx2_available()) {
    return inverse_poly_sum_avx2_impl(coeffs, first, last);
  }
#endif
  (void)coeffs;
  (void)first;
  (void)last;
  throw std::runtime_error("AVX2 kernel not available on this build or CPU");
}

double inverse_poly_sum(Isa isa, std::span<const double> coeffs, std::uint64_t first, std::uint64_t last) {
  return isa == Isa::avx2 ? inverse_poly_sum_avx2(coeffs, first, last)
                          : inverse_poly_sum_scalar(coeffs, first, last);
}

double inverse_poly_sum(std::span<const double> coeffs, std::uint64_t first, std::uint64_t last) {
  return inverse_poly_sum(best_isa(), coeffs, first, last);
}

}  // namespace kohn::simd
