// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace bayesint::kernels {

// Best grid pair under the total order (value, j - i, i).
struct GridScanResult {
  double value;
  int i;
  int j;
};

// Exhaustive scan over all index pairs j >= i of an n-point axis,
// evaluating
//   value(i, j) = (g[j] - g[i]) * w - (cdf[j] - cdf[i]) * k
// and returning the minimum; ties resolve to the smallest j - i, then the
// smallest i. Every variant performs the identical sequence of IEEE
// operations per pair, so results are bit-equal across variants.
GridScanResult grid_scan_scalar(const double* g, const double* cdf, int n, double w, double k);

#if defined(BAYESINT_HAVE_AVX2)
GridScanResult grid_scan_avx2(const double* g, const double* cdf, int n, double w, double k);
#endif

// Runtime-dispatched entry point.
GridScanResult grid_scan(const double* g, const double* cdf, int n, double w, double k);

}  // namespace bayesint::kernels
