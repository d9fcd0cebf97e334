// SPDX-License-Identifier: Apache-2.0
#include "bayesint/bayes.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "bayesint/kernels/grid_scan.hpp"
#include "bayesint/posterior.hpp"

namespace bayesint {

namespace {

void require_interior_alpha(Probability alpha, const char* who) {
  if (alpha.value() <= 0.0 || alpha.value() >= 1.0) {
    throw std::domain_error(std::string(who) + ": alpha must lie strictly inside (0, 1)");
  }
}

// Solves t_pdf(y, df) = target on y >= 0, where the pdf is strictly
// decreasing. Requires target < t_pdf(0, df).
double pdf_inverse_decreasing(double target, DegreesOfFreedom df) {
  double lo = 0.0;
  double hi = 1.0;
  while (t_pdf(hi, df) > target && hi < 1e300) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (t_pdf(mid, df) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double canonical_k(int n, Probability alpha) {
  if (n < 2) throw std::domain_error("canonical_k: requires n >= 2");
  require_interior_alpha(alpha, "canonical_k");
  const DegreesOfFreedom df(n - 1);
  const double t = t_quantile(Probability(1.0 - 0.5 * alpha.value()), df);
  return c1(n) / (std::sqrt(static_cast<double>(n)) * t_pdf(t, df));
}

Interval closed_form_interval(const SampleSummary& summary, Probability alpha) {
  require_interior_alpha(alpha, "closed_form_interval");
  if (summary.s == 0.0) return Interval(summary.xbar, summary.xbar);
  const double t = t_quantile(Probability(1.0 - 0.5 * alpha.value()),
                              DegreesOfFreedom(summary.n - 1));
  const double half = t * summary.s / std::sqrt(static_cast<double>(summary.n));
  return Interval(summary.xbar - half, summary.xbar + half);
}

BayesSolution closed_form_solution(const SampleSummary& summary, Probability alpha) {
  const Interval interval = closed_form_interval(summary, alpha);
  if (summary.s == 0.0) {
    return {interval, 0.0, 0.0, SolveMethod::ClosedForm};
  }
  const LossSpec spec(LossKind::Scaled, canonical_k(summary.n, alpha));
  return {interval, 0.5 * interval.length(),
          posterior_expected_loss(spec, summary, interval), SolveMethod::ClosedForm};
}

BayesSolution bayes_interval(const SampleSummary& summary, const LossSpec& spec) {
  if (summary.s <= 0.0) {
    throw std::domain_error("bayes_interval: degenerate summary (s = 0)");
  }
  if (!spec.identity_transform()) {
    return grid_oracle(summary, spec, GridSpec::default_for(summary, Probability(0.05)));
  }
  const DegreesOfFreedom df(summary.n - 1);
  const double root_n = std::sqrt(static_cast<double>(summary.n));
  const double rho = spec.kind == LossKind::Scaled ? c1(summary.n) / (spec.k * root_n)
                                                   : summary.s / (spec.k * root_n);
  double half_width = 0.0;
  if (t_pdf(0.0, df) > rho) {
    half_width = pdf_inverse_decreasing(rho, df) * summary.s / root_n;
  }
  const Interval interval(summary.xbar - half_width, summary.xbar + half_width);
  return {interval, half_width, posterior_expected_loss(spec, summary, interval),
          SolveMethod::OneDim};
}

double paradox_threshold(int n, double k) {
  if (n < 2) throw std::domain_error("paradox_threshold: requires n >= 2");
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::domain_error("paradox_threshold: requires k > 0");
  }
  return k * std::sqrt(static_cast<double>(n)) * t_pdf(0.0, DegreesOfFreedom(n - 1));
}

ParadoxReport analyze_paradox(const SampleSummary& summary, double k) {
  const BayesSolution solution = bayes_interval(summary, LossSpec(LossKind::Unscaled, k));
  return {paradox_threshold(summary.n, k), solution.half_width == 0.0, solution.half_width};
}

GridSpec GridSpec::centered(double half_span, int points) {
  if (points < 2) throw std::invalid_argument("GridSpec: requires at least 2 points");
  if (!(half_span > 0.0) || !std::isfinite(half_span)) {
    throw std::invalid_argument("GridSpec: requires positive finite half_span");
  }
  GridSpec spec;
  spec.points = points;
  spec.lo = -half_span;
  spec.hi = half_span;
  return spec;
}

GridSpec GridSpec::default_for(const SampleSummary& summary, Probability alpha, int points) {
  require_interior_alpha(alpha, "GridSpec::default_for");
  const double t = t_quantile(Probability(1.0 - 0.5 * alpha.value()),
                              DegreesOfFreedom(summary.n - 1));
  return centered(3.0 * t * summary.s / std::sqrt(static_cast<double>(summary.n)), points);
}

double grid_cell_bound(const SampleSummary& summary, const LossSpec& spec, const GridSpec& grid) {
  if (!spec.identity_transform()) {
    throw std::invalid_argument("grid_cell_bound: unavailable for a custom length transform");
  }
  if (summary.s <= 0.0) throw std::domain_error("grid_cell_bound: degenerate summary");
  const double step = (grid.hi - grid.lo) / (grid.points - 1);
  const double w = spec.kind == LossKind::Scaled ? c1(summary.n) / summary.s : 1.0;
  const double root_n = std::sqrt(static_cast<double>(summary.n));
  const double pdf_max = t_pdf(0.0, DegreesOfFreedom(summary.n - 1));
  return 2.0 * step * (w + spec.k * root_n * pdf_max / summary.s);
}

BayesSolution grid_oracle(const SampleSummary& summary, const LossSpec& spec,
                          const GridSpec& grid) {
  if (summary.s <= 0.0) throw std::domain_error("grid_oracle: degenerate summary (s = 0)");
  if (grid.points < 2) throw std::invalid_argument("grid_oracle: requires at least 2 points");
  if (!(grid.lo < grid.hi) || !std::isfinite(grid.lo) || !std::isfinite(grid.hi)) {
    throw std::invalid_argument("grid_oracle: requires finite lo < hi");
  }
  if (spec.identity_transform()) {
    const double bound = grid_cell_bound(summary, spec, grid);
    if (bound > grid.required_tolerance) {
      char message[160];
      std::snprintf(message, sizeof message,
                    "grid too coarse: per-cell objective bound %.3g exceeds required tolerance "
                    "%.3g (step %.3g)",
                    bound, grid.required_tolerance,
                    (grid.hi - grid.lo) / (grid.points - 1));
      throw GridTooCoarseError(message);
    }
  } else if (std::isfinite(grid.required_tolerance)) {
    throw std::invalid_argument(
        "grid_oracle: cannot certify a tolerance for a custom length transform");
  }

  const int points = grid.points;
  const double step = (grid.hi - grid.lo) / (points - 1);
  const double root_n = std::sqrt(static_cast<double>(summary.n));
  const DegreesOfFreedom df(summary.n - 1);

  std::vector<double> offsets(points);
  std::vector<double> cdf(points);
  for (int i = 0; i < points; ++i) {
    offsets[i] = grid.lo + i * step;
    cdf[i] = t_cdf(root_n * offsets[i] / summary.s, df);
  }

  const double w = spec.kind == LossKind::Scaled ? expected_inv_sigma(summary) : 1.0;

  kernels::GridScanResult best{};
  if (spec.identity_transform()) {
    best = kernels::grid_scan(offsets.data(), cdf.data(), points, w, spec.k);
  } else {
    // Generic path: same tie-break, transform applied per pair.
    best = {std::numeric_limits<double>::infinity(), 0, 0};
    for (int i = 0; i < points; ++i) {
      double row_value = std::numeric_limits<double>::infinity();
      int row_j = i;
      for (int j = i; j < points; ++j) {
        const double value =
            spec.transformed_length(offsets[j] - offsets[i]) * w - (cdf[j] - cdf[i]) * spec.k;
        if (value < row_value) {
          row_value = value;
          row_j = j;
        }
      }
      const int row_len = row_j - i;
      const int best_len = best.j - best.i;
      if (row_value < best.value ||
          (row_value == best.value &&
           (row_len < best_len || (row_len == best_len && i < best.i)))) {
        best = {row_value, i, row_j};
      }
    }
  }

  const Interval interval(summary.xbar + offsets[best.i], summary.xbar + offsets[best.j]);
  return {interval, 0.5 * (offsets[best.j] - offsets[best.i]), best.value,
          SolveMethod::GridOracle};
}

}  // namespace bayesint
