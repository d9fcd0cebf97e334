// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "bayesint/loss.hpp"
#include "bayesint/philox.hpp"
#include "bayesint/types.hpp"

namespace bayesint {

struct RiskEstimate {
  double mean;
  double std_error;
  std::uint64_t reps;
  std::uint64_t seed;
};

// Deterministic map from a summary to an interval, with a display name.
struct IntervalRule {
  std::string name;
  std::function<Interval(const SampleSummary&)> apply;
};

/// One draw of (xbar, s) from the sufficient-statistic distributions:
/// xbar ~ N(mu, sigma^2/n) from one normal, (n-1) S^2 / sigma^2 ~
/// chi^2_{n-1} from one gamma(shape (n-1)/2, scale 2) draw. The normal is
/// consumed first.
SampleSummary simulate_summary(const ThetaPoint& theta, int n, PhiloxStream& stream);

/// Proportion of replications whose interval contains mu; binomial
/// standard error. alpha_ref is the nominal level the caller reports
/// against; it does not enter the estimate. Replication r uses the
/// Philox stream (seed, 0, r), so all estimators under one seed see the
/// same summary stream, and the result is independent of evaluation
/// order (pairwise-tree reduction).
RiskEstimate estimate_coverage(const IntervalRule& rule, const ThetaPoint& theta, int n,
                               Probability alpha_ref, std::uint64_t reps, std::uint64_t seed);

/// Monte Carlo mean of loss_value(spec, theta, rule(summary)) over the
/// same summary stream as estimate_coverage; sample-sd standard error.
RiskEstimate estimate_risk(const IntervalRule& rule, const ThetaPoint& theta,
                           const LossSpec& spec, int n, std::uint64_t reps, std::uint64_t seed);

// Built-in rules.
IntervalRule usual_ci_rule(Probability alpha);
IntervalRule bayes_rule(const LossSpec& spec);
IntervalRule point_rule();

}  // namespace bayesint
