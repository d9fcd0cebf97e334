// SPDX-License-Identifier: Apache-2.0
#include "bayesint/montecarlo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bayesint/bayes.hpp"
#include "bayesint/kernels/pairwise_sum.hpp"

namespace bayesint {

namespace {

constexpr std::uint64_t kSummaryStream = 0;

void require_reps(std::uint64_t reps, const char* who) {
  if (reps < 1000) {
    throw std::invalid_argument(std::string(who) + ": requires reps >= 1000");
  }
}

// Per-rule memo of quantities that depend only on n; rules are applied
// once per replication, and recomputing a quantile every time dominates
// the simulation cost.
struct HalfWidthCache {
  std::mutex mutex;
  std::map<int, double> per_s_by_n;
};

}  // namespace

SampleSummary simulate_summary(const ThetaPoint& theta, int n, PhiloxStream& stream) {
  if (n < 2) throw std::domain_error("simulate_summary: requires n >= 2");
  const double z = stream.next_normal();
  const double xbar = theta.mu + theta.sigma / std::sqrt(static_cast<double>(n)) * z;
  const double chi_square = 2.0 * stream.next_gamma(0.5 * (n - 1));
  const double s = theta.sigma * std::sqrt(chi_square / (n - 1));
  return SampleSummary(n, xbar, s);
}

RiskEstimate estimate_coverage(const IntervalRule& rule, const ThetaPoint& theta, int n,
                               Probability alpha_ref, std::uint64_t reps, std::uint64_t seed) {
  require_reps(reps, "estimate_coverage");
  if (alpha_ref.value() <= 0.0 || alpha_ref.value() >= 1.0) {
    throw std::domain_error("estimate_coverage: alpha_ref must lie strictly inside (0, 1)");
  }
  std::vector<double> hits(reps);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    PhiloxStream stream(seed, kSummaryStream, rep);
    const SampleSummary summary = simulate_summary(theta, n, stream);
    hits[rep] = rule.apply(summary).contains(theta.mu) ? 1.0 : 0.0;
  }
  const double mean = kernels::pairwise_sum(hits.data(), hits.size()) / static_cast<double>(reps);
  const double variance = mean * (1.0 - mean) / static_cast<double>(reps);
  return {mean, std::sqrt(variance < 0.0 ? 0.0 : variance), reps, seed};
}

RiskEstimate estimate_risk(const IntervalRule& rule, const ThetaPoint& theta,
                           const LossSpec& spec, int n, std::uint64_t reps, std::uint64_t seed) {
  require_reps(reps, "estimate_risk");
  std::vector<double> losses(reps);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    PhiloxStream stream(seed, kSummaryStream, rep);
    const SampleSummary summary = simulate_summary(theta, n, stream);
    losses[rep] = loss_value(spec, theta, rule.apply(summary));
  }
  const double mean =
      kernels::pairwise_sum(losses.data(), losses.size()) / static_cast<double>(reps);
  std::vector<double> squared(reps);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const double dev = losses[rep] - mean;
    squared[rep] = dev * dev;
  }
  const double sample_var = kernels::pairwise_sum(squared.data(), squared.size()) /
                            static_cast<double>(reps - 1);
  return {mean, std::sqrt(sample_var / static_cast<double>(reps)), reps, seed};
}

IntervalRule usual_ci_rule(Probability alpha) {
  auto cache = std::make_shared<HalfWidthCache>();
  return {"usual-ci", [alpha, cache](const SampleSummary& summary) {
            if (summary.s == 0.0) return Interval(summary.xbar, summary.xbar);
            double per_s;
            {
              std::lock_guard<std::mutex> lock(cache->mutex);
              auto [it, inserted] = cache->per_s_by_n.try_emplace(summary.n, 0.0);
              if (inserted) {
                it->second = t_quantile(Probability(1.0 - 0.5 * alpha.value()),
                                        DegreesOfFreedom(summary.n - 1)) /
                             std::sqrt(static_cast<double>(summary.n));
              }
              per_s = it->second;
            }
            const double half = per_s * summary.s;
            return Interval(summary.xbar - half, summary.xbar + half);
          }};
}

IntervalRule bayes_rule(const LossSpec& spec) {
  const std::string name =
      spec.kind == LossKind::Scaled ? "bayes-scaled" : "bayes-unscaled";
  if (spec.kind != LossKind::Scaled || !spec.identity_transform()) {
    return {name, [spec](const SampleSummary& summary) {
              return bayes_interval(summary, spec).interval;
            }};
  }
  // Scaled kind: the half-width per unit s depends only on n.
  auto cache = std::make_shared<HalfWidthCache>();
  return {name, [spec, cache](const SampleSummary& summary) {
            double per_s;
            {
              std::lock_guard<std::mutex> lock(cache->mutex);
              auto [it, inserted] = cache->per_s_by_n.try_emplace(summary.n, 0.0);
              if (inserted) {
                const SampleSummary unit(summary.n, 0.0, 1.0);
                it->second = bayes_interval(unit, spec).half_width;
              }
              per_s = it->second;
            }
            const double half = per_s * summary.s;
            return Interval(summary.xbar - half, summary.xbar + half);
          }};
}

IntervalRule point_rule() {
  return {"point",
          [](const SampleSummary& summary) { return Interval(summary.xbar, summary.xbar); }};
}

}  // namespace bayesint
