// SPDX-License-Identifier: Apache-2.0
#include "bayesint/kernels/grid_scan.hpp"

#include <limits>

namespace bayesint::kernels {

GridScanResult grid_scan_scalar(const double* g, const double* cdf, int n, double w, double k) {
  GridScanResult best{std::numeric_limits<double>::infinity(), 0, 0};
  bool have_best = false;
  for (int i = 0; i < n; ++i) {
    const double gi = g[i];
    const double ci = cdf[i];
    // Strict < keeps the first (shortest) minimizer within the row.
    double row_value = std::numeric_limits<double>::infinity();
    int row_j = i;
    for (int j = i; j < n; ++j) {
      const double value = (g[j] - gi) * w - (cdf[j] - ci) * k;
      if (value < row_value) {
        row_value = value;
        row_j = j;
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
