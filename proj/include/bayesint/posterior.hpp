// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bayesint/distributions.hpp"
#include "bayesint/types.hpp"

namespace bayesint {

// Marginal posterior of mu under the prior 1/sigma^2:
// (mu - location) / scale ~ t_df.
struct MuPosterior {
  double location;       // xbar
  double scale;          // s / sqrt(n)
  DegreesOfFreedom df;   // n - 1
};

/// Marginal t posterior of mu. Requires s > 0; the posterior is
/// degenerate otherwise and callers must special-case s = 0.
MuPosterior mu_posterior(const SampleSummary& summary);

/// P(mu in [lo, hi] | xbar, s) under the marginal t posterior.
Probability posterior_coverage(const Interval& interval, const SampleSummary& summary);

/// Marginal posterior density of sigma at sigma > 0. Evaluated through the
/// log density; the normalizing constant overflows in naive form near
/// n ~ 300.
double sigma_posterior_pdf(double sigma, const SampleSummary& summary);
double log_sigma_posterior_pdf(double sigma, const SampleSummary& summary);

/// E(1/sigma | xbar, s) = c1(n) / s, closed form.
double expected_inv_sigma(const SampleSummary& summary);

}  // namespace bayesint
