// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace bayesint::kernels::detail {

// Leaf sum of one 8-element block. The association matches the 4-lane
// vector reduction (lanewise add of the two halves, then the standard
// horizontal sum), so scalar and SIMD leaves are bit-equal:
//   ((x0+x4) + (x2+x6)) + ((x1+x5) + (x3+x7))
inline double block8(const double* x) {
  const double a0 = x[0] + x[4];
  const double a1 = x[1] + x[5];
  const double a2 = x[2] + x[6];
  const double a3 = x[3] + x[7];
  return (a0 + a2) + (a1 + a3);
}

inline double tail_sum(const double* x, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i];
  return sum;
}

// Pairwise combination of leaf sums: adjacent pairs per level, an odd
// trailing leaf carried up unchanged.
inline double combine_leaves(std::vector<double>& leaves) {
  if (leaves.empty()) return 0.0;
  std::size_t count = leaves.size();
  while (count > 1) {
    std::size_t out = 0;
    for (std::size_t i = 0; i + 1 < count; i += 2) {
      leaves[out++] = leaves[i] + leaves[i + 1];
    }
    if (count % 2 == 1) leaves[out++] = leaves[count - 1];
    count = out;
  }
  return leaves[0];
}

}  // namespace bayesint::kernels::detail
