// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

namespace bayesint {

// Closed real interval [lo, hi]; degenerate (lo == hi) allowed.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_in, double hi_in) : lo(lo_in), hi(hi_in) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw std::domain_error("Interval: requires finite lo <= hi");
    }
  }

  double length() const { return hi - lo; }
  // Closed-interval membership: endpoints count as covered.
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Sufficient statistic (n, xbar, s) of a normal sample; s uses divisor n-1.
struct SampleSummary {
  int n;
  double xbar;
  double s;

  SampleSummary(int n_in, double xbar_in, double s_in) : n(n_in), xbar(xbar_in), s(s_in) {
    if (n < 2) throw std::domain_error("SampleSummary: n must be >= 2");
    if (!std::isfinite(xbar) || !std::isfinite(s) || s < 0.0) {
      throw std::domain_error("SampleSummary: requires finite xbar and s >= 0");
    }
  }
};

// True parameter (mu, sigma) of the normal model.
struct ThetaPoint {
  double mu;
  double sigma;

  ThetaPoint(double mu_in, double sigma_in) : mu(mu_in), sigma(sigma_in) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || sigma <= 0.0) {
      throw std::domain_error("ThetaPoint: requires finite mu and sigma > 0");
    }
  }
};

}  // namespace bayesint
