// SPDX-License-Identifier: Apache-2.0
#include "bayesint/kernels/pairwise_sum.hpp"

#include <vector>

#include "pairwise_tree.hpp"

namespace bayesint::kernels {

double pairwise_sum_scalar(const double* x, std::size_t n) {
  std::vector<double> leaves;
  leaves.reserve(n / 8 + 1);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) leaves.push_back(detail::block8(x + i));
  if (i < n) leaves.push_back(detail::tail_sum(x + i, n - i));
  return detail::combine_leaves(leaves);
}

}  // namespace bayesint::kernels
