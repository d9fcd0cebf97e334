// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: derivation, self-verification, paradox sweep, and
// Monte Carlo risk/coverage reports. Every report embeds its resolved
// configuration (defaults and seed included), so any output can be
// reproduced from its own header.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bayesint/bayes.hpp"
#include "bayesint/montecarlo.hpp"
#include "bayesint/verification.hpp"

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  int n = 5;
  double alpha = 0.05;
  std::optional<double> k;  // canonical when absent
  double resolved_k = 0.0;
  double xbar = 0.0;
  double s = 1.0;
  std::vector<double> mu{0.0};
  std::vector<double> sigma{1.0};
  std::uint64_t reps = 100000;
  std::uint64_t seed = 42;
  int grid = 2001;
  std::string format = "csv";
  std::string out = "-";
  std::string rule = "usual";
  std::string loss = "scaled";
  std::vector<double> s_sweep;  // paradox only; empty selects the default log sweep
};

std::string fmt9(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

std::string join9(const std::vector<double>& values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text += ",";
    text += fmt9(values[i]);
  }
  return text;
}

ordered_json config_json(const RunConfig& config) {
  ordered_json j;
  j["command"] = config.command;
  j["n"] = config.n;
  j["alpha"] = config.alpha;
  j["k"] = config.resolved_k;
  j["k_is_canonical"] = !config.k.has_value();
  j["xbar"] = config.xbar;
  j["s"] = config.s;
  j["mu"] = config.mu;
  j["sigma"] = config.sigma;
  j["reps"] = config.reps;
  j["seed"] = config.seed;
  j["grid"] = config.grid;
  j["format"] = config.format;
  j["out"] = config.out;
  j["rule"] = config.rule;
  j["loss"] = config.loss;
  return j;
}

void write_config_csv(std::ostream& os, const RunConfig& config) {
  os << "# command=" << config.command << "\n";
  os << "# n=" << config.n << "\n";
  os << "# alpha=" << fmt9(config.alpha) << "\n";
  os << "# k=" << fmt9(config.resolved_k)
     << (config.k.has_value() ? "" : " (canonical)") << "\n";
  os << "# xbar=" << fmt9(config.xbar) << "\n";
  os << "# s=" << fmt9(config.s) << "\n";
  os << "# mu=" << join9(config.mu) << "\n";
  os << "# sigma=" << join9(config.sigma) << "\n";
  os << "# reps=" << config.reps << "\n";
  os << "# seed=" << config.seed << "\n";
  os << "# grid=" << config.grid << "\n";
  os << "# format=" << config.format << "\n";
  os << "# out=" << config.out << "\n";
  os << "# rule=" << config.rule << "\n";
  os << "# loss=" << config.loss << "\n";
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output path: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int emit(const RunConfig& config, const std::vector<std::string>& columns,
         const std::vector<std::vector<ordered_json>>& rows, ordered_json extra = {}) {
  Output output(config.out);
  std::ostream& os = output.stream();
  if (config.format == "json") {
    ordered_json doc;
    doc["config"] = config_json(config);
    for (auto& [key, value] : extra.items()) doc[key] = value;
    doc["results"] = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json record;
      for (std::size_t c = 0; c < columns.size(); ++c) record[columns[c]] = row[c];
      doc["results"].push_back(record);
    }
    os << doc.dump(2) << "\n";
    return 0;
  }
  write_config_csv(os, config);
  for (auto& [key, value] : extra.items()) {
    os << "# " << key << "="
       << (value.is_number() ? fmt9(value.get<double>()) : value.dump()) << "\n";
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    os << (c > 0 ? "," : "") << columns[c];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const ordered_json& cell = row[c];
      os << (c > 0 ? "," : "");
      if (cell.is_number_float()) {
        os << fmt9(cell.get<double>());
      } else if (cell.is_string()) {
        os << cell.get<std::string>();
      } else {
        os << cell.dump();
      }
    }
    os << "\n";
  }
  return 0;
}

using bayesint::Probability;

int cmd_derive(RunConfig config) {
  const bayesint::SampleSummary summary(config.n, config.xbar, config.s);
  const Probability alpha(config.alpha);
  const bayesint::BayesSolution closed_solution =
      bayesint::closed_form_solution(summary, alpha);
  const bayesint::Interval closed = closed_solution.interval;

  std::vector<std::vector<ordered_json>> rows;
  rows.push_back({"k", config.resolved_k});
  rows.push_back({"closed_lo", closed.lo});
  rows.push_back({"closed_hi", closed.hi});
  rows.push_back({"closed_half_width", closed_solution.half_width});
  if (config.s == 0.0) {
    rows.push_back({"note", "s = 0: point interval reported; Bayes minimization skipped"});
    return emit(config, {"quantity", "value"}, rows);
  }
  const bayesint::LossSpec spec(bayesint::LossKind::Scaled, config.resolved_k);
  const bayesint::BayesSolution bayes = bayesint::bayes_interval(summary, spec);
  const double discrepancy = std::max(std::fabs(bayes.interval.lo - closed.lo),
                                      std::fabs(bayes.interval.hi - closed.hi));
  rows.push_back({"closed_objective",
                  bayesint::posterior_expected_loss(spec, summary, closed)});
  rows.push_back({"bayes_lo", bayes.interval.lo});
  rows.push_back({"bayes_hi", bayes.interval.hi});
  rows.push_back({"bayes_half_width", bayes.half_width});
  rows.push_back({"bayes_objective", bayes.objective_at_min});
  rows.push_back({"endpoint_discrepancy", discrepancy});
  return emit(config, {"quantity", "value"}, rows);
}

int cmd_verify(const RunConfig& config) {
  bayesint::VerifyOptions options;
  options.seed = config.seed;
  options.grid_points = config.grid;
  options.alpha = config.alpha;
  const std::vector<bayesint::CheckResult> checks = bayesint::run_verification(options);

  std::vector<std::vector<ordered_json>> rows;
  bool all_pass = true;
  for (const auto& check : checks) {
    all_pass = all_pass && check.pass;
    rows.push_back({check.check, check.tolerance, check.observed,
                    check.pass ? "pass" : "fail", check.detail});
  }
  emit(config, {"check", "tolerance", "observed", "status", "detail"}, rows);
  return all_pass ? 0 : 1;
}

int cmd_paradox(const RunConfig& config) {
  const double threshold = bayesint::paradox_threshold(config.n, config.resolved_k);
  std::vector<double> sweep = config.s_sweep;
  if (sweep.empty()) {
    // Log-spaced sweep bracketing the collapse threshold.
    const int points = 33;
    const double lo = std::log(threshold / 8.0);
    const double hi = std::log(threshold * 8.0);
    for (int i = 0; i < points; ++i) {
      sweep.push_back(std::exp(lo + (hi - lo) * i / (points - 1)));
    }
  }
  std::vector<std::vector<ordered_json>> rows;
  for (double s : sweep) {
    const bayesint::SampleSummary summary(config.n, config.xbar, s);
    const bayesint::ParadoxReport report =
        bayesint::analyze_paradox(summary, config.resolved_k);
    rows.push_back({s, report.half_width, report.collapsed ? 1 : 0});
  }
  ordered_json extra;
  extra["s_star"] = threshold;
  return emit(config, {"s", "half_width", "collapsed"}, rows, extra);
}

int cmd_estimate(const RunConfig& config, bool coverage) {
  const Probability alpha(config.alpha);
  const bayesint::LossSpec spec(config.loss == "scaled" ? bayesint::LossKind::Scaled
                                                        : bayesint::LossKind::Unscaled,
                                config.resolved_k);
  bayesint::IntervalRule rule = [&] {
    if (config.rule == "usual") return bayesint::usual_ci_rule(alpha);
    if (config.rule == "bayes") return bayesint::bayes_rule(spec);
    return bayesint::point_rule();
  }();

  std::vector<std::vector<ordered_json>> rows;
  std::uint64_t point_index = 0;
  for (double mu : config.mu) {
    for (double sigma : config.sigma) {
      const bayesint::ThetaPoint theta(mu, sigma);
      const std::uint64_t point_seed = config.seed + point_index;
      const bayesint::RiskEstimate estimate =
          coverage ? bayesint::estimate_coverage(rule, theta, config.n, alpha, config.reps,
                                                 point_seed)
                   : bayesint::estimate_risk(rule, theta, spec, config.n, config.reps,
                                             point_seed);
      rows.push_back({mu, sigma, estimate.mean, estimate.std_error, estimate.reps,
                      estimate.seed});
      ++point_index;
    }
  }
  ordered_json extra;
  extra["rule_name"] = rule.name;
  return emit(config, {"mu", "sigma", "mean", "std_error", "reps", "seed"}, rows, extra);
}

int validate(RunConfig& config) {
  if (config.n < 2) {
    std::cerr << "error: --n must be >= 2\n";
    return 2;
  }
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    std::cerr << "error: --alpha must lie strictly inside (0, 1)\n";
    return 2;
  }
  if (config.k && !(*config.k > 0.0 && std::isfinite(*config.k))) {
    std::cerr << "error: --k must be positive\n";
    return 2;
  }
  if (!(config.s >= 0.0) || !std::isfinite(config.s)) {
    std::cerr << "error: --s must be >= 0\n";
    return 2;
  }
  for (double sigma : config.sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
      std::cerr << "error: --sigma entries must be > 0\n";
      return 2;
    }
  }
  for (double s : config.s_sweep) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      std::cerr << "error: paradox --s entries must be > 0\n";
      return 2;
    }
  }
  if (config.reps < 1000) {
    std::cerr << "error: --reps must be >= 1000\n";
    return 2;
  }
  if (config.grid < 2) {
    std::cerr << "error: --grid must be >= 2\n";
    return 2;
  }
  if (config.format != "csv" && config.format != "json") {
    std::cerr << "error: --format must be csv or json\n";
    return 2;
  }
  if (config.rule != "usual" && config.rule != "bayes" && config.rule != "point") {
    std::cerr << "error: --rule must be usual, bayes, or point\n";
    return 2;
  }
  if (config.loss != "scaled" && config.loss != "unscaled") {
    std::cerr << "error: --loss must be scaled or unscaled\n";
    return 2;
  }
  config.resolved_k =
      config.k ? *config.k : bayesint::canonical_k(config.n, Probability(config.alpha));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  double k_flag = 0.0;

  CLI::App app{"Generalized Bayes interval estimation for a normal mean"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", config.n, "sample size (n >= 2)")->capture_default_str();
    cmd->add_option("--alpha", config.alpha, "nominal level in (0, 1)")->capture_default_str();
    cmd->add_option("--k", k_flag, "loss trade-off constant (default: canonical k)");
    cmd->add_option("--seed", config.seed, "base seed")->capture_default_str();
    cmd->add_option("--reps", config.reps, "Monte Carlo replications")->capture_default_str();
    cmd->add_option("--grid", config.grid, "grid points per axis")->capture_default_str();
    cmd->add_option("--format", config.format, "output format: csv or json")
        ->capture_default_str();
    cmd->add_option("--out", config.out, "output path ('-' = stdout)")->capture_default_str();
  };

  CLI::App* derive = app.add_subcommand(
      "derive", "closed-form vs numerically minimized Bayes interval");
  add_common(derive);
  derive->add_option("--xbar", config.xbar, "sample mean")->required();
  derive->add_option("--s", config.s, "sample standard deviation (>= 0)")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the library self-checks");
  add_common(verify);

  CLI::App* paradox = app.add_subcommand(
      "paradox", "unscaled-loss collapse sweep over s");
  add_common(paradox);
  paradox->add_option("--xbar", config.xbar, "sample mean")->capture_default_str();
  paradox->add_option("--s", config.s_sweep, "s values (comma separated; default: log sweep)")
      ->delimiter(',');
  paradox->get_option("--k")->required();

  CLI::App* risk = app.add_subcommand("risk", "Monte Carlo risk over a theta grid");
  CLI::App* coverage = app.add_subcommand("coverage", "Monte Carlo coverage over a theta grid");
  for (CLI::App* cmd : {risk, coverage}) {
    add_common(cmd);
    cmd->add_option("--mu", config.mu, "mu grid values (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--sigma", config.sigma, "sigma grid values (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--rule", config.rule, "interval rule: usual, bayes, point")
        ->capture_default_str();
    cmd->add_option("--loss", config.loss, "loss kind: scaled or unscaled")
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  CLI::App* active = app.get_subcommands().front();
  config.command = active->get_name();
  if (active->count("--k") > 0) config.k = k_flag;

  const int status = validate(config);
  if (status != 0) return status;

  try {
    if (config.command == "derive") return cmd_derive(config);
    if (config.command == "verify") return cmd_verify(config);
    if (config.command == "paradox") return cmd_paradox(config);
    if (config.command == "risk") return cmd_estimate(config, false);
    if (config.command == "coverage") return cmd_estimate(config, true);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 2;
}
