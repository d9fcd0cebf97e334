// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace bayesint::kernels {

// Deterministic reduction with a fixed association tree: 8-element leaf
// blocks summed as ((x0+x4)+(x2+x6)) + ((x1+x5)+(x3+x7)), a left-to-right
// tail block, then pairwise combination of leaf sums. The tree matches the
// natural 4-lane vector reduction, so the scalar and AVX2 variants return
// bit-identical results and the total is independent of evaluation order.
double pairwise_sum_scalar(const double* x, std::size_t n);

#if defined(BAYESINT_HAVE_AVX2)
double pairwise_sum_avx2(const double* x, std::size_t n);
#endif

// Runtime-dispatched entry point.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace bayesint::kernels
