// SPDX-License-Identifier: Apache-2.0
#include "bayesint/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bayesint {

DegreesOfFreedom::DegreesOfFreedom(int nu) : nu_(nu) {
  if (nu < 1) throw std::domain_error("DegreesOfFreedom: nu must be >= 1");
}

Probability::Probability(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("Probability: p must lie in [0, 1]");
  }
}

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln sqrt(2 pi)

// Stirling series for x >= 10; first omitted term is below 4e-17.
double stirling_log_gamma(double x) {
  const double r = 1.0 / x;
  const double r2 = r * r;
  const double series =
      r * (1.0 / 12.0 +
           r2 * (-1.0 / 360.0 +
                 r2 * (1.0 / 1260.0 +
                       r2 * (-1.0 / 1680.0 +
                             r2 * (1.0 / 1188.0 +
                                   r2 * (-691.0 / 360360.0 + r2 * (1.0 / 156.0)))))));
  return (x - 0.5) * std::log(x) - x + kLogSqrt2Pi + series;
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("log_gamma: requires finite x > 0");
  }
  if (x >= 10.0) return stirling_log_gamma(x);
  // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)) with x + m >= 10.
  double product = 1.0;
  double shifted = x;
  while (shifted < 10.0) {
    product *= shifted;
    shifted += 1.0;
  }
  return stirling_log_gamma(shifted) - std::log(product);
}

namespace {

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

// Lentz evaluation of the incomplete-beta continued fraction
// (Abramowitz & Stegun 26.5.8 coefficients, unit denominators).
double beta_continued_fraction(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  double c = 1.0;
  double d = 0.0;
  double f = 1.0;  // leading denominator
  for (int term = 1; term < 600; ++term) {
    double numer;
    if (term % 2 == 1) {
      const double m = 0.5 * (term - 1);
      numer = -(a + m) * (a + b + m) * x / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));
    } else {
      const double m = 0.5 * term;
      numer = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
    }
    d = 1.0 + numer * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    c = 1.0 + numer / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    const double factor = c * d;
    f *= factor;
    if (std::fabs(factor - 1.0) <= kEps) break;
  }
  return f;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("regularized_incomplete_beta: requires a > 0 and b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("regularized_incomplete_beta: requires x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  if (x > (a + 1.0) / (a + b + 2.0)) {
    return 1.0 - regularized_incomplete_beta(1.0 - x, b, a);
  }
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b)) / a;
  const double value = front / beta_continued_fraction(x, a, b);
  return value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value);
}

double t_pdf(double x, DegreesOfFreedom df) {
  if (!std::isfinite(x)) throw std::domain_error("t_pdf: requires finite x");
  const double nu = df.nu();
  const double log_norm =
      log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu) - 0.5 * std::log(nu * std::numbers::pi);
  return std::exp(log_norm - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
}

Probability t_cdf(double x, DegreesOfFreedom df) {
  if (!std::isfinite(x)) throw std::domain_error("t_cdf: requires finite x");
  const double nu = df.nu();
  const double u = nu / (nu + x * x);
  const double tail = 0.5 * regularized_incomplete_beta(u, 0.5 * nu, 0.5);
  return Probability(x >= 0.0 ? 1.0 - tail : tail);
}

double t_quantile(Probability p, DegreesOfFreedom df) {
  const double pv = p.value();
  if (pv <= 0.0 || pv >= 1.0) {
    throw std::domain_error("t_quantile: p must lie strictly inside (0, 1)");
  }
  if (pv == 0.5) return 0.0;
  const double target = pv > 0.5 ? pv : 1.0 - pv;
  double lo = 0.0;
  double hi = 1.0;
  while (t_cdf(hi, df) < target && hi < 1e305) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (t_cdf(mid, df) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double q = 0.5 * (lo + hi);
  return pv > 0.5 ? q : -q;
}

double c1(int n) {
  if (n < 2) throw std::domain_error("c1: requires n >= 2");
  return std::exp(log_gamma(0.5 * n) - log_gamma(0.5 * (n - 1)) +
                  0.5 * std::log(2.0 / (n - 1.0)));
}

}  // namespace bayesint
