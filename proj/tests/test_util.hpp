// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bayesint/distributions.hpp"
#include "bayesint/quadrature.hpp"

// Absolute-tolerance check with context on failure.
#define CHECK_NEAR(actual, expected, tol)                                            \
  do {                                                                               \
    const double check_near_a = (actual);                                            \
    const double check_near_e = (expected);                                          \
    INFO("actual=" << check_near_a << " expected=" << check_near_e                   \
                   << " |diff|=" << std::fabs(check_near_a - check_near_e)           \
                   << " tol=" << (tol));                                             \
    CHECK(std::fabs(check_near_a - check_near_e) <= (tol));                          \
  } while (0)

namespace testutil {

// P(T <= x) for T ~ t_nu by quadrature of the density, substituting
// x = tan(theta) to compress the infinite domain. Independent of the
// incomplete-beta path used by t_cdf.
inline double t_cdf_quadrature(double x, int nu) {
  const bayesint::DegreesOfFreedom df(nu);
  const auto integrand = [&df](double theta) {
    const double t = std::tan(theta);
    const double c = std::cos(theta);
    return bayesint::t_pdf(t, df) / (c * c);
  };
  const double lo = -0.5 * std::numbers::pi + 1e-9;
  return bayesint::adaptive_simpson(integrand, lo, std::atan(x), 1e-10);
}

// Total mass of the t_nu density by the same substitution.
inline double t_pdf_total_mass(int nu) {
  const bayesint::DegreesOfFreedom df(nu);
  const auto integrand = [&df](double theta) {
    const double t = std::tan(theta);
    const double c = std::cos(theta);
    return bayesint::t_pdf(t, df) / (c * c);
  };
  const double edge = 0.5 * std::numbers::pi - 1e-9;
  return bayesint::adaptive_simpson(integrand, -edge, edge, 1e-10);
}

}  // namespace testutil
