// SPDX-License-Identifier: Apache-2.0
#include "bayesint/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bayesint/bayes.hpp"
#include "bayesint/philox.hpp"
#include "bayesint/posterior.hpp"
#include "bayesint/quadrature.hpp"

namespace bayesint {

namespace {

std::string format_detail(const char* fmt, double a, double b) {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, fmt, a, b);
  return buffer;
}

// E(1/sigma | xbar, s) by quadrature: substituting sigma = s e^t turns
// the integrand 1/sigma times the posterior density into density(s e^t),
// with double-exponential left decay and e^{-nt} right decay; [-18, 18]
// truncates below 1e-15 of the value.
double inv_sigma_quadrature(const SampleSummary& summary) {
  const auto integrand = [&summary](double t) {
    return sigma_posterior_pdf(summary.s * std::exp(t), summary);
  };
  return adaptive_simpson(integrand, -18.0, 18.0, 1e-11 / summary.s);
}

CheckResult check_inv_sigma(const VerifyOptions& options) {
  double worst = 0.0;
  int worst_n = 0;
  double worst_s = 0.0;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (double s : options.s_values) {
      const SampleSummary summary(n, 0.0, s);
      const double closed = expected_inv_sigma(summary);
      const double quadrature = inv_sigma_quadrature(summary);
      const double rel = std::fabs(quadrature - closed) / closed;
      if (rel > worst) {
        worst = rel;
        worst_n = n;
        worst_s = s;
      }
    }
  }
  return {"inv_sigma_quadrature", 1e-6, worst, worst <= 1e-6,
          format_detail("worst case n=%.0f s=%g", static_cast<double>(worst_n), worst_s)};
}

CheckResult check_identity_chain(const VerifyOptions& options) {
  double worst = 0.0;
  for (int i = 0; i < options.chain_tuples; ++i) {
    PhiloxStream stream(options.seed, 1, static_cast<std::uint64_t>(i));
    const int n = 2 + static_cast<int>(stream.next_uniform() * 39.0);
    const double s = std::exp(std::log(0.1) + stream.next_uniform() * std::log(100.0));
    const double alpha = 0.01 + stream.next_uniform() * 0.19;
    const double xbar = -2.0 + 4.0 * stream.next_uniform();
    const SampleSummary summary(n, xbar, s);
    const DegreesOfFreedom df(n - 1);
    const double root_n = std::sqrt(static_cast<double>(n));
    const double t = t_quantile(Probability(1.0 - 0.5 * alpha), df);
    const double k2 = 1.0 / t_pdf(t, df);
    const double k1 = k2 / root_n;
    const double k = k1 * c1(n);
    const double h = stream.next_uniform() * 2.5 * t * s / root_n;

    const LossSpec spec(LossKind::Scaled, k);
    const double pel = posterior_expected_loss(
        spec, summary, Interval(xbar - h, xbar + h));
    const double via_qr = c1(n) * objective_qr(-h, h, summary, k1);
    const double via_h = c1(n) * objective_h(h, summary, k1);
    const double via_g =
        c1(n) * ((2.0 / root_n) * g_objective(h, summary, Probability(alpha)) + k1);

    const double lo = std::min(std::min(pel, via_qr), std::min(via_h, via_g));
    const double hi = std::max(std::max(pel, via_qr), std::max(via_h, via_g));
    const double scale = std::max({1.0, std::fabs(pel), std::fabs(via_qr), std::fabs(via_h),
                                   std::fabs(via_g), k});
    worst = std::max(worst, (hi - lo) / scale);
  }
  return {"identity_chain", 1e-12, worst,
          worst <= 1e-12,
          format_detail("max spread across the four forms over %.0f tuples (seed %.0f)",
                        static_cast<double>(options.chain_tuples),
                        static_cast<double>(options.seed))};
}

CheckResult check_grid_agreement(const VerifyOptions& options) {
  const int n_values[] = {2, 3, 5, 10, 30};
  const double s_values[] = {0.5, 1.0, 2.0, 0.1, 10.0};
  double worst = 0.0;
  double worst_allowed = 0.0;
  const int instances = std::min(options.grid_instances, 5);
  for (int i = 0; i < instances; ++i) {
    const SampleSummary summary(n_values[i], 0.25 * i, s_values[i]);
    for (int kind = 0; kind < 2; ++kind) {
      LossSpec spec = [&] {
        if (kind == 0) {
          return LossSpec(LossKind::Scaled, canonical_k(summary.n, Probability(options.alpha)));
        }
        // Unscaled instance built from a target coverage so the minimizer
        // sits inside the default span.
        const DegreesOfFreedom df(summary.n - 1);
        const double y = t_quantile(Probability(0.9), df);
        const double k =
            summary.s / (std::sqrt(static_cast<double>(summary.n)) * t_pdf(y, df));
        return LossSpec(LossKind::Unscaled, k);
      }();

      GridSpec grid = GridSpec::default_for(summary, Probability(options.alpha),
                                            options.grid_points);
      const GridSpec reference =
          GridSpec::default_for(summary, Probability(options.alpha), 2001);
      grid.required_tolerance = 1.5 * grid_cell_bound(summary, spec, reference);

      const BayesSolution analytic = bayes_interval(summary, spec);
      BayesSolution oracle{};
      try {
        oracle = grid_oracle(summary, spec, grid);
      } catch (const GridTooCoarseError& error) {
        return {"grid_oracle_agreement", grid.required_tolerance,
                std::numeric_limits<double>::infinity(), false, error.what()};
      }
      const double allowed = grid_cell_bound(summary, spec, grid);
      const double gap = std::fabs(oracle.objective_at_min - analytic.objective_at_min);
      if (gap > worst) {
        worst = gap;
        worst_allowed = allowed;
      }
      if (oracle.objective_at_min < analytic.objective_at_min -
                                        1e-9 * std::max(1.0, std::fabs(analytic.objective_at_min))) {
        return {"grid_oracle_agreement", allowed, gap, false,
                "lattice minimum fell below the analytic minimum"};
      }
      if (gap > allowed) {
        return {"grid_oracle_agreement", allowed, gap, false,
                format_detail("gap %.3g exceeds per-cell bound %.3g", gap, allowed)};
      }
    }
  }
  return {"grid_oracle_agreement", worst_allowed, worst, true,
          format_detail("max |lattice - analytic| %.3g within per-cell bound %.3g", worst,
                        worst_allowed)};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  results.push_back(check_inv_sigma(options));
  results.push_back(check_identity_chain(options));
  results.push_back(check_grid_agreement(options));
  return results;
}

}  // namespace bayesint
