// SPDX-License-Identifier: Apache-2.0
#include "bayesint/posterior.hpp"

#include <cmath>
#include <stdexcept>

namespace bayesint {

namespace {

void require_nondegenerate(const SampleSummary& summary, const char* who) {
  if (summary.s <= 0.0) {
    throw std::domain_error(std::string(who) + ": degenerate summary (s = 0)");
  }
}

}  // namespace

MuPosterior mu_posterior(const SampleSummary& summary) {
  require_nondegenerate(summary, "mu_posterior");
  return {summary.xbar, summary.s / std::sqrt(static_cast<double>(summary.n)),
          DegreesOfFreedom(summary.n - 1)};
}

Probability posterior_coverage(const Interval& interval, const SampleSummary& summary) {
  require_nondegenerate(summary, "posterior_coverage");
  const double root_n = std::sqrt(static_cast<double>(summary.n));
  const DegreesOfFreedom df(summary.n - 1);
  const double upper = t_cdf(root_n * (interval.hi - summary.xbar) / summary.s, df);
  const double lower = t_cdf(root_n * (interval.lo - summary.xbar) / summary.s, df);
  const double coverage = upper - lower;
  return Probability(coverage < 0.0 ? 0.0 : coverage);
}

double log_sigma_posterior_pdf(double sigma, const SampleSummary& summary) {
  require_nondegenerate(summary, "sigma_posterior_pdf");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("sigma_posterior_pdf: requires sigma > 0");
  }
  const double m = summary.n - 1.0;
  const double log_norm =
      std::log(2.0) - log_gamma(0.5 * m) + 0.5 * m * std::log(0.5 * m * summary.s * summary.s);
  return log_norm - summary.n * std::log(sigma) -
         0.5 * m * summary.s * summary.s / (sigma * sigma);
}

double sigma_posterior_pdf(double sigma, const SampleSummary& summary) {
  return std::exp(log_sigma_posterior_pdf(sigma, summary));
}

double expected_inv_sigma(const SampleSummary& summary) {
  if (summary.s <= 0.0) {
    throw std::domain_error("expected_inv_sigma: expectation is infinite for s = 0");
  }
  return c1(summary.n) / summary.s;
}

}  // namespace bayesint
