// SPDX-License-Identifier: Apache-2.0
#include "bayesint/kernels/dispatch.hpp"

#include <cstdlib>

#include "bayesint/kernels/grid_scan.hpp"
#include "bayesint/kernels/pairwise_sum.hpp"

namespace bayesint::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa selected = [] {
#if defined(BAYESINT_HAVE_AVX2)
    if (cpu_has_avx2() && std::getenv("BAYESINT_FORCE_SCALAR") == nullptr) {
      return Isa::Avx2;
    }
#endif
    return Isa::Scalar;
  }();
  return selected;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

GridScanResult grid_scan(const double* g, const double* cdf, int n, double w, double k) {
#if defined(BAYESINT_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return grid_scan_avx2(g, cdf, n, w, k);
#endif
  return grid_scan_scalar(g, cdf, n, w, k);
}

double pairwise_sum(const double* x, std::size_t n) {
#if defined(BAYESINT_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return pairwise_sum_avx2(x, n);
#endif
  return pairwise_sum_scalar(x, n);
}

}  // namespace bayesint::kernels
