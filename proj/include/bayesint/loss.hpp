// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "bayesint/distributions.hpp"
#include "bayesint/types.hpp"

namespace bayesint {

// Scaled:   length(C)/sigma - k * I(mu in C)
// Unscaled: length(C)       - k * I(mu in C)
enum class LossKind { Scaled, Unscaled };

// Which loss and the trade-off constant k > 0. An optional nondecreasing
// transform of the interval length may be supplied (identity when empty);
// it must map 0 to 0. Non-identity transforms are only served by the grid
// oracle, never by the reduction chain.
struct LossSpec {
  LossKind kind;
  double k;
  std::function<double(double)> length_transform;

  LossSpec(LossKind kind_in, double k_in, std::function<double(double)> transform = {});

  bool identity_transform() const { return !length_transform; }
  double transformed_length(double len) const {
    return length_transform ? length_transform(len) : len;
  }
};

/// Realized loss of an interval at a true parameter point.
double loss_value(const LossSpec& spec, const ThetaPoint& theta, const Interval& interval);

/// Posterior expected loss of an interval given (xbar, s):
/// transformed length times E(1/sigma | xbar, s) (Scaled) or times 1
/// (Unscaled), minus k times the posterior coverage.
double posterior_expected_loss(const LossSpec& spec, const SampleSummary& summary,
                               const Interval& interval);

/// Objective over endpoint offsets (q, r) from xbar, r >= q:
///   (r - q)/s - k1 * P(sqrt(n) q / s <= T <= sqrt(n) r / s).
/// Equals posterior_expected_loss(Scaled, [xbar+q, xbar+r]) / c1(n)
/// when k = k1 * c1(n).
double objective_qr(double q, double r, const SampleSummary& summary, double k1);

/// Symmetric-offset objective, h >= 0:
///   2h/s - k1 * (2 F_{n-1}(sqrt(n) h / s) - 1).
/// Equals objective_qr(-h, h, summary, k1).
double objective_h(double h, const SampleSummary& summary, double k1);

/// g(h) = sqrt(n) h / s - F_{n-1}(sqrt(n) h / s) / f_{n-1}(t(n-1)),
/// where t(n-1) is the two-sided 1-alpha quantile. Minimizing g over
/// h >= 0 is equivalent to minimizing objective_h at the canonical k.
double g_objective(double h, const SampleSummary& summary, Probability alpha);

/// Analytic derivative of g:
///   (sqrt(n)/s) * (1 - f_{n-1}(sqrt(n) h / s) / f_{n-1}(t(n-1))).
/// Increasing in h >= 0 with a unique zero at h = t(n-1) s / sqrt(n).
double g_derivative(double h, const SampleSummary& summary, Probability alpha);

}  // namespace bayesint
