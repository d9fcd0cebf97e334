// SPDX-License-Identifier: Apache-2.0
#include "bayesint/loss.hpp"

#include <cmath>
#include <stdexcept>

#include "bayesint/posterior.hpp"

namespace bayesint {

LossSpec::LossSpec(LossKind kind_in, double k_in, std::function<double(double)> transform)
    : kind(kind_in), k(k_in), length_transform(std::move(transform)) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw std::domain_error("LossSpec: k must be positive and finite");
  }
  if (length_transform && length_transform(0.0) != 0.0) {
    throw std::domain_error("LossSpec: length transform must map 0 to 0");
  }
}

double loss_value(const LossSpec& spec, const ThetaPoint& theta, const Interval& interval) {
  const double len = spec.transformed_length(interval.length());
  const double length_term = spec.kind == LossKind::Scaled ? len / theta.sigma : len;
  const double covered = interval.contains(theta.mu) ? 1.0 : 0.0;
  return length_term - spec.k * covered;
}

double posterior_expected_loss(const LossSpec& spec, const SampleSummary& summary,
                               const Interval& interval) {
  const double len = spec.transformed_length(interval.length());
  const double weight = spec.kind == LossKind::Scaled ? expected_inv_sigma(summary) : 1.0;
  return len * weight - spec.k * posterior_coverage(interval, summary);
}

namespace {

void require_positive_s(const SampleSummary& summary, const char* who) {
  if (summary.s <= 0.0) {
    throw std::domain_error(std::string(who) + ": degenerate summary (s = 0)");
  }
}

void require_interior_alpha(Probability alpha, const char* who) {
  if (alpha.value() <= 0.0 || alpha.value() >= 1.0) {
    throw std::domain_error(std::string(who) + ": alpha must lie strictly inside (0, 1)");
  }
}

}  // namespace

double objective_qr(double q, double r, const SampleSummary& summary, double k1) {
  if (r < q) throw std::invalid_argument("objective_qr: requires r >= q");
  require_positive_s(summary, "objective_qr");
  const double root_n = std::sqrt(static_cast<double>(summary.n));
  const DegreesOfFreedom df(summary.n - 1);
  const double prob = t_cdf(root_n * r / summary.s, df) - t_cdf(root_n * q / summary.s, df);
  return (r - q) / summary.s - k1 * prob;
}

double objective_h(double h, const SampleSummary& summary, double k1) {
  if (h < 0.0) throw std::invalid_argument("objective_h: requires h >= 0");
  require_positive_s(summary, "objective_h");
  const double y = std::sqrt(static_cast<double>(summary.n)) * h / summary.s;
  return 2.0 * h / summary.s - k1 * (2.0 * t_cdf(y, DegreesOfFreedom(summary.n - 1)) - 1.0);
}

double g_objective(double h, const SampleSummary& summary, Probability alpha) {
  if (h < 0.0) throw std::invalid_argument("g_objective: requires h >= 0");
  require_positive_s(summary, "g_objective");
  require_interior_alpha(alpha, "g_objective");
  const DegreesOfFreedom df(summary.n - 1);
  const double t = t_quantile(Probability(1.0 - 0.5 * alpha.value()), df);
  const double y = std::sqrt(static_cast<double>(summary.n)) * h / summary.s;
  return y - t_cdf(y, df) / t_pdf(t, df);
}

double g_derivative(double h, const SampleSummary& summary, Probability alpha) {
  if (h < 0.0) throw std::invalid_argument("g_derivative: requires h >= 0");
  require_positive_s(summary, "g_derivative");
  require_interior_alpha(alpha, "g_derivative");
  const DegreesOfFreedom df(summary.n - 1);
  const double root_n = std::sqrt(static_cast<double>(summary.n));
  const double t = t_quantile(Probability(1.0 - 0.5 * alpha.value()), df);
  const double y = root_n * h / summary.s;
  return (root_n / summary.s) * (1.0 - t_pdf(y, df) / t_pdf(t, df));
}

}  // namespace bayesint
