// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <stdexcept>

#include "bayesint/loss.hpp"
#include "bayesint/types.hpp"

namespace bayesint {

enum class SolveMethod { ClosedForm, OneDim, GridOracle };

struct BayesSolution {
  Interval interval;
  double half_width;
  double objective_at_min;  // posterior expected loss at the returned interval
  SolveMethod method;
};

struct ParadoxReport {
  double threshold_s;  // s* = k sqrt(n) f_{n-1}(0)
  bool collapsed;      // half_width == 0
  double half_width;
};

/// The k for which the Scaled-loss Bayes rule is the usual 1-alpha
/// interval: k = c1(n) / (sqrt(n) f_{n-1}(t(n-1))).
double canonical_k(int n, Probability alpha);

/// [xbar - t(n-1) s/sqrt(n), xbar + t(n-1) s/sqrt(n)]; the point interval
/// when s = 0.
Interval closed_form_interval(const SampleSummary& summary, Probability alpha);

/// closed_form_interval packaged as a BayesSolution, with the posterior
/// expected loss evaluated at the canonical k. The degenerate s = 0
/// summary yields the point interval with objective 0.
BayesSolution closed_form_solution(const SampleSummary& summary, Probability alpha);

/// Generalized Bayes interval: symmetrize, then solve the stationarity
/// condition f_{n-1}(sqrt(n) h / s) = rho on the decreasing branch of the
/// pdf (rho = c1(n)/(k sqrt(n)) for Scaled, s/(k sqrt(n)) for Unscaled).
/// When the half-width objective's derivative at h = 0 is already
/// nonnegative the rule collapses to the point interval [xbar, xbar].
/// Non-identity length transforms route through the grid oracle.
BayesSolution bayes_interval(const SampleSummary& summary, const LossSpec& spec);

/// s* = k sqrt(n) f_{n-1}(0): the Unscaled-loss Bayes interval is the
/// point {xbar} for s >= s* and has positive width for s < s*.
double paradox_threshold(int n, double k);

/// Unscaled-loss collapse diagnosis for one summary.
ParadoxReport analyze_paradox(const SampleSummary& summary, double k);

// Lattice over endpoint offsets (q, r) from xbar; lo/hi are offsets.
// required_tolerance (when finite) demands that the documented per-cell
// objective bound not exceed it; a coarser grid raises GridTooCoarseError.
struct GridSpec {
  int points = 2001;
  double lo = 0.0;
  double hi = 0.0;
  double required_tolerance = std::numeric_limits<double>::infinity();

  static GridSpec centered(double half_span, int points = 2001);
  // Offsets spanning +/- 3 t(n-1) s / sqrt(n).
  static GridSpec default_for(const SampleSummary& summary, Probability alpha,
                              int points = 2001);
};

struct GridTooCoarseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Upper bound on the objective variation across one grid cell:
/// 2 * step * (w + k sqrt(n) f_{n-1}(0) / s), with w the length weight.
/// Only available for the identity length transform.
double grid_cell_bound(const SampleSummary& summary, const LossSpec& spec, const GridSpec& grid);

/// Brute-force minimizer over the (q, r) lattice, r >= q. Deterministic
/// tie-break: smallest r - q, then smallest q. Independent of the
/// reduction-chain solver.
BayesSolution grid_oracle(const SampleSummary& summary, const LossSpec& spec,
                          const GridSpec& grid);

}  // namespace bayesint
