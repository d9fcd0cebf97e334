// SPDX-License-Identifier: Apache-2.0
#include "bayesint/kernels/pairwise_sum.hpp"

#if defined(BAYESINT_HAVE_AVX2)

#include <immintrin.h>

#include <vector>

#include "pairwise_tree.hpp"

namespace bayesint::kernels {

double pairwise_sum_avx2(const double* x, std::size_t n) {
  std::vector<double> leaves;
  leaves.reserve(n / 8 + 1);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d lo = _mm256_loadu_pd(x + i);
    const __m256d hi = _mm256_loadu_pd(x + i + 4);
    const __m256d acc = _mm256_add_pd(lo, hi);  // (x0+x4, x1+x5, x2+x6, x3+x7)
    const __m128d low = _mm256_castpd256_pd128(acc);
    const __m128d high = _mm256_extractf128_pd(acc, 1);
    const __m128d halves = _mm_add_pd(low, high);  // (a0+a2, a1+a3)
    leaves.push_back(_mm_cvtsd_f64(halves) + _mm_cvtsd_f64(_mm_unpackhi_pd(halves, halves)));
  }
  if (i < n) leaves.push_back(detail::tail_sum(x + i, n - i));
  return detail::combine_leaves(leaves);
}

}  // namespace bayesint::kernels

#endif  // BAYESINT_HAVE_AVX2
