// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bayesint/loss.hpp"
#include "bayesint/philox.hpp"
#include "bayesint/posterior.hpp"
#include "test_util.hpp"

using namespace bayesint;

TEST_CASE("loss_value arithmetic") {
  CHECK(loss_value(LossSpec(LossKind::Scaled, 5.0), ThetaPoint(0.0, 1.0), Interval(-1.0, 1.0)) ==
        -3.0);
  CHECK(loss_value(LossSpec(LossKind::Scaled, 5.0), ThetaPoint(10.0, 2.0), Interval(-1.0, 1.0)) ==
        1.0);
  CHECK(loss_value(LossSpec(LossKind::Unscaled, 3.0), ThetaPoint(0.0, 7.0), Interval(-1.0, 1.0)) ==
        -1.0);
}

TEST_CASE("loss_value counts a boundary mean as covered") {
  const LossSpec spec(LossKind::Unscaled, 2.0);
  CHECK(loss_value(spec, ThetaPoint(1.0, 1.0), Interval(-1.0, 1.0)) == 0.0);
  CHECK(loss_value(spec, ThetaPoint(-1.0, 1.0), Interval(-1.0, 1.0)) == 0.0);
  CHECK(loss_value(spec, ThetaPoint(1.0 + 1e-12, 1.0), Interval(-1.0, 1.0)) == 2.0);
}

TEST_CASE("scaled loss is invariant under joint scaling of sigma and offsets") {
  const LossSpec spec(LossKind::Scaled, 4.0);
  PhiloxStream stream(7, 0, 0);
  for (int i = 0; i < 200; ++i) {
    const double mu = -3.0 + 6.0 * stream.next_uniform();
    const double sigma = 0.1 + 5.0 * stream.next_uniform();
    const double lo_offset = -2.0 * stream.next_uniform();
    const double hi_offset = 2.0 * stream.next_uniform();
    const double lambda = 0.05 + 20.0 * stream.next_uniform();
    const double reference = loss_value(spec, ThetaPoint(mu, sigma),
                                        Interval(mu + lo_offset, mu + hi_offset));
    const double rescaled =
        loss_value(spec, ThetaPoint(mu, lambda * sigma),
                   Interval(mu + lambda * lo_offset, mu + lambda * hi_offset));
    CHECK_NEAR(rescaled, reference, 1e-12 * std::max(1.0, std::fabs(reference)));
  }
}

TEST_CASE("LossSpec validation") {
  CHECK_THROWS_AS(LossSpec(LossKind::Scaled, 0.0), std::domain_error);
  CHECK_THROWS_AS(LossSpec(LossKind::Scaled, -2.0), std::domain_error);
  CHECK_THROWS_AS(LossSpec(LossKind::Scaled, 1.0, [](double l) { return l + 1.0; }),
                  std::domain_error);
  const LossSpec squared(LossKind::Unscaled, 1.0, [](double l) { return l * l; });
  CHECK(squared.transformed_length(3.0) == 9.0);
}

TEST_CASE("posterior_expected_loss of the point interval is zero") {
  const SampleSummary summary(5, 1.2, 0.8);
  const Interval point(1.2, 1.2);
  CHECK(posterior_expected_loss(LossSpec(LossKind::Scaled, 3.0), summary, point) == 0.0);
  CHECK(posterior_expected_loss(LossSpec(LossKind::Unscaled, 3.0), summary, point) == 0.0);
}

TEST_CASE("posterior_expected_loss rejects the degenerate summary") {
  CHECK_THROWS_AS(posterior_expected_loss(LossSpec(LossKind::Scaled, 1.0),
                                          SampleSummary(5, 0.0, 0.0), Interval(-1.0, 1.0)),
                  std::domain_error);
}

TEST_CASE("objective_qr basics") {
  const SampleSummary summary(5, 0.0, 1.0);
  CHECK(objective_qr(0.7, 0.7, summary, 1.0) == 0.0);
  CHECK_THROWS_AS(objective_qr(1.0, 0.5, summary, 1.0), std::invalid_argument);
  // 2 - P(-sqrt(5) <= T_4 <= sqrt(5)).
  CHECK_NEAR(objective_qr(-1.0, 1.0, summary, 1.0), 2.0 - 0.9109906574999143207593, 1e-12);
}

TEST_CASE("objective_qr ignores xbar") {
  const SampleSummary a(7, 0.0, 1.3);
  const SampleSummary b(7, 42.0, 1.3);
  CHECK(objective_qr(-0.8, 1.1, a, 2.5) == objective_qr(-0.8, 1.1, b, 2.5));
}

TEST_CASE("objective_h equals objective_qr at symmetric offsets") {
  PhiloxStream stream(11, 0, 0);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(stream.next_uniform() * 30.0);
    const double s = 0.1 + 5.0 * stream.next_uniform();
    const double h = 3.0 * stream.next_uniform();
    const double k1 = 0.2 + 40.0 * stream.next_uniform();
    const SampleSummary summary(n, -1.0 + 2.0 * stream.next_uniform(), s);
    const double via_h = objective_h(h, summary, k1);
    const double via_qr = objective_qr(-h, h, summary, k1);
    CHECK_NEAR(via_h, via_qr, 1e-14 * std::max({1.0, std::fabs(via_h), k1}));
  }
}

TEST_CASE("objective_h at zero is zero") {
  CHECK(objective_h(0.0, SampleSummary(5, 0.0, 1.0), 1.0) == 0.0);
  CHECK_THROWS_AS(objective_h(-0.1, SampleSummary(5, 0.0, 1.0), 1.0), std::invalid_argument);
}

TEST_CASE("posterior_expected_loss at symmetric intervals equals the reduced objective") {
  PhiloxStream stream(13, 0, 0);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(stream.next_uniform() * 30.0);
    const double s = std::exp(std::log(0.1) + stream.next_uniform() * std::log(100.0));
    const double xbar = -2.0 + 4.0 * stream.next_uniform();
    const double h = 2.0 * stream.next_uniform() * s;
    const double k1 = 0.2 + 30.0 * stream.next_uniform();
    const SampleSummary summary(n, xbar, s);
    const double k = k1 * c1(n);
    const double pel = posterior_expected_loss(LossSpec(LossKind::Scaled, k), summary,
                                               Interval(xbar - h, xbar + h));
    const double reduced = c1(n) * objective_h(h, summary, k1);
    CHECK_NEAR(pel, reduced, 1e-12 * std::max({1.0, std::fabs(pel), k}));
  }
}

TEST_CASE("posterior_expected_loss of the usual interval has the closed value") {
  // 2 t(n-1) c1(n) / sqrt(n) - k (1 - alpha) at the canonical k.
  for (int n : {2, 5, 12}) {
    for (double alpha : {0.05, 0.2}) {
      for (double s : {0.3, 1.0, 8.0}) {
        const SampleSummary summary(n, 1.4, s);
        const DegreesOfFreedom df(n - 1);
        const double t = t_quantile(Probability(1.0 - 0.5 * alpha), df);
        const double k = c1(n) / (std::sqrt(static_cast<double>(n)) * t_pdf(t, df));
        const double expected =
            2.0 * t * c1(n) / std::sqrt(static_cast<double>(n)) - k * (1.0 - alpha);
        const Interval usual(summary.xbar - t * s / std::sqrt(static_cast<double>(n)),
                             summary.xbar + t * s / std::sqrt(static_cast<double>(n)));
        const double pel =
            posterior_expected_loss(LossSpec(LossKind::Scaled, k), summary, usual);
        CHECK_NEAR(pel, expected, 1e-9 * std::max(1.0, std::fabs(expected)));
      }
    }
  }
}

TEST_CASE("g matches its closed value at zero") {
  const SampleSummary summary(5, 0.0, 1.0);
  // g(0) = -0.5 / f_4(t(4)) at alpha = 0.05.
  CHECK_NEAR(g_objective(0.0, summary, Probability(0.05)),
             -0.5 / 0.02558081782667427248336, 1e-9);
}

TEST_CASE("g derivative vanishes at t(n-1) s / sqrt(n) and is negative at zero") {
  for (int n : {2, 3, 5, 12, 40}) {
    for (double alpha : {0.01, 0.05, 0.2, 0.6}) {
      const SampleSummary summary(n, 0.4, 1.7);
      const double t = t_quantile(Probability(1.0 - 0.5 * alpha), DegreesOfFreedom(n - 1));
      const double h_star = t * summary.s / std::sqrt(static_cast<double>(n));
      CHECK(g_derivative(0.0, summary, Probability(alpha)) < 0.0);
      CHECK_NEAR(g_derivative(h_star, summary, Probability(alpha)), 0.0, 1e-9);
    }
  }
}

TEST_CASE("g equals the h objective up to the documented constants at the canonical k") {
  const SampleSummary summary(9, -0.7, 2.2);
  const double alpha = 0.1;
  const DegreesOfFreedom df(8);
  const double t = t_quantile(Probability(1.0 - 0.5 * alpha), df);
  const double k2 = 1.0 / t_pdf(t, df);
  const double root_n = 3.0;
  const double k1 = k2 / root_n;
  for (double h = 0.0; h < 4.0; h += 0.21) {
    const double lhs = objective_h(h, summary, k1);
    const double rhs = (2.0 / root_n) * g_objective(h, summary, Probability(alpha)) + k1;
    CHECK_NEAR(lhs, rhs, 1e-12 * std::max(1.0, k1));
  }
}

TEST_CASE("fixed-width objective is minimized by the symmetric placement") {
  const SampleSummary summary(6, 0.0, 1.1);
  const double k1 = 9.0;
  for (double h : {0.2, 0.7, 1.5}) {
    const double at_symmetric = objective_qr(-h, h, summary, k1);
    for (double q = -3.0; q <= 1.0; q += 0.05) {
      CHECK(objective_qr(q, q + 2.0 * h, summary, k1) >= at_symmetric - 1e-13);
    }
  }
}
