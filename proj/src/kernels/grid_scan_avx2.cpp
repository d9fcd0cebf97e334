// SPDX-License-Identifier: Apache-2.0
#include "bayesint/kernels/grid_scan.hpp"

#if defined(BAYESINT_HAVE_AVX2)

#include <immintrin.h>

#include <cstdint>
#include <limits>

namespace bayesint::kernels {

GridScanResult grid_scan_avx2(const double* g, const double* cdf, int n, double w, double k) {
  const __m256d vw = _mm256_set1_pd(w);
  const __m256d vk = _mm256_set1_pd(k);
  const __m256i four = _mm256_set1_epi64x(4);
  const __m256i lane_offsets = _mm256_setr_epi64x(0, 1, 2, 3);

  GridScanResult best{std::numeric_limits<double>::infinity(), 0, 0};
  bool have_best = false;
  for (int i = 0; i < n; ++i) {
    const double gi = g[i];
    const double ci = cdf[i];
    const __m256d vgi = _mm256_set1_pd(gi);
    const __m256d vci = _mm256_set1_pd(ci);
    __m256d lane_value = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    __m256i lane_index = _mm256_setzero_si256();
    __m256i jv = _mm256_add_epi64(_mm256_set1_epi64x(i), lane_offsets);
    int j = i;
    for (; j + 4 <= n; j += 4) {
      const __m256d gj = _mm256_loadu_pd(g + j);
      const __m256d cj = _mm256_loadu_pd(cdf + j);
      const __m256d value = _mm256_sub_pd(_mm256_mul_pd(_mm256_sub_pd(gj, vgi), vw),
                                          _mm256_mul_pd(_mm256_sub_pd(cj, vci), vk));
      const __m256d take = _mm256_cmp_pd(value, lane_value, _CMP_LT_OQ);
      lane_value = _mm256_blendv_pd(lane_value, value, take);
      lane_index = _mm256_castpd_si256(_mm256_blendv_pd(
          _mm256_castsi256_pd(lane_index), _mm256_castsi256_pd(jv), take));
      jv = _mm256_add_epi64(jv, four);
    }

    // Lane reduction: minimum value, then smallest index; equals the
    // scalar first-occurrence rule because each lane already kept its
    // first occurrence.
    double row_value = std::numeric_limits<double>::infinity();
    int row_j = i;
    alignas(32) double values[4];
    alignas(32) std::int64_t indices[4];
    _mm256_store_pd(values, lane_value);
    _mm256_store_si256(reinterpret_cast<__m256i*>(indices), lane_index);
    bool row_started = false;
    for (int lane = 0; lane < 4; ++lane) {
      if (values[lane] == std::numeric_limits<double>::infinity() && !row_started) continue;
      if (!row_started || values[lane] < row_value ||
          (values[lane] == row_value && static_cast<int>(indices[lane]) < row_j)) {
        row_value = values[lane];
        row_j = static_cast<int>(indices[lane]);
        row_started = true;
      }
    }
    for (; j < n; ++j) {
      const double value = (g[j] - gi) * w - (cdf[j] - ci) * k;
      if (!row_started || value < row_value) {
        row_value = value;
        row_j = j;
        row_started = true;
      }
    }

    const int row_len = row_j - i;
    const int best_len = best.j - best.i;
    if (!have_best || row_value < best.value ||
        (row_value == best.value &&
         (row_len < best_len || (row_len == best_len && i < best.i)))) {
      best = {row_value, i, row_j};
      have_best = true;
    }
  }
  return best;
}

}  // namespace bayesint::kernels

#endif  // BAYESINT_HAVE_AVX2
