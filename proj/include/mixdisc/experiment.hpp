#pragma once

// Config-driven sweeps over rule families, producing CSV tables, log-log SVG
// plots and rate fits.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixdisc/config.hpp"
#include "mixdisc/csv.hpp"
#include "mixdisc/cubature.hpp"
#include "mixdisc/discretization.hpp"
#include "mixdisc/plot.hpp"
#include "mixdisc/rate_fit.hpp"

namespace mixdisc {

inline constexpr const char* kOutputDirEnv = "MIXDISC_OUTPUT_DIR";

enum class RuleFamily { Fibonacci, KorobovCbc, Random };

inline std::string to_string(RuleFamily r) {
  switch (r) {
    case RuleFamily::Fibonacci: return "fibonacci";
    case RuleFamily::KorobovCbc: return "korobov_cbc";
    case RuleFamily::Random: return "random";
  }
  return "?";
}

struct ExperimentConfig {
  std::string name = "experiment";
  RuleFamily rule = RuleFamily::Fibonacci;
  /// Fibonacci indices n, or point counts m for the other families.
  std::vector<long long> sweep;
  int dim = 2;
  ClassSpec spec;
  /// "wce" (worst-case integration error) or "er" (sampled discretization error).
  std::string metric = "wce";
  int truncation = 0;
  std::size_t samples = 100;
  int blocks = 5;
  std::uint64_t seed = 1;
  /// Frozen log exponent; empty fits it freely.
  std::optional<double> fit_b;
  std::optional<double> quasi_algebra;
  std::string output_dir = ".";
  bool plot = true;
};

inline std::string default_output_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  return env && *env ? std::string(env) : std::string(".");
}

/// Builds and validates an experiment description.  Every precondition of the
/// modules the sweep touches is checked here, before any work starts.
inline ExperimentConfig parse_experiment(const Config& cfg) {
  ExperimentConfig ex;
  ex.name = cfg.get("name", "experiment");
  const std::string rule = cfg.get("rule");
  if (rule == "fibonacci") ex.rule = RuleFamily::Fibonacci;
  else if (rule == "korobov_cbc") ex.rule = RuleFamily::KorobovCbc;
  else if (rule == "random") ex.rule = RuleFamily::Random;
  else throw ConfigError("rule", "config key 'rule': expected fibonacci, korobov_cbc or random, got '" + rule + "'");

  const std::string sweep_key = ex.rule == RuleFamily::Fibonacci ? "n" : "m";
  ex.sweep = cfg.get_int_list(sweep_key);
  ex.dim = cfg.get_number<int>("dim", 2);
  if (ex.dim < 1 || ex.dim > 8) throw ConfigError("dim", "config key 'dim': must be in [1, 8]");
  if (ex.rule == RuleFamily::Fibonacci && ex.dim != 2) throw ConfigError("dim", "config key 'dim': fibonacci rules are two-dimensional");
  for (long long v : ex.sweep) {
    if (ex.rule == RuleFamily::Fibonacci && (v < 2 || v > 90)) throw ConfigError("n", "config key 'n': indices must be in [2, 90]");
    if (ex.rule == RuleFamily::KorobovCbc && !is_prime(v)) throw ConfigError("m", "config key 'm': " + std::to_string(v) + " is not prime");
    if (ex.rule == RuleFamily::Random && v < 1) throw ConfigError("m", "config key 'm': point counts must be >= 1");
  }

  try {
    ex.spec.family = parse_family(cfg.get("family"));
  } catch (const DomainError& e) {
    throw ConfigError("family", std::string("config key 'family': ") + e.what());
  }
  ex.spec.r = cfg.get_number<double>("r");
  ex.spec.p = cfg.has("p") && cfg.get("p") == "inf" ? kInfinity : cfg.get_number<double>("p", 2.0);
  ex.spec.B = cfg.get_number<double>("B", 1.0);
  if (!(ex.spec.r > 0.0)) throw ConfigError("r", "config key 'r': must be positive");
  if (!(ex.spec.p >= 1.0)) throw ConfigError("p", "config key 'p': must be >= 1");
  if (!(ex.spec.B > 0.0)) throw ConfigError("B", "config key 'B': must be positive");

  ex.metric = cfg.get("metric", "wce");
  if (ex.metric == "wce") {
    try {
      (void)dual_sum_exponent(ex.spec);
    } catch (const Error& e) {
      throw ConfigError("family", std::string("config key 'family' with metric wce: ") + e.what());
    }
  } else if (ex.metric == "er") {
    if (ex.spec.family != ClassFamily::HoelderH) throw ConfigError("family", "config key 'family': metric er requires family hoelder");
    if (!ex.spec.embeds_in_continuous()) throw ConfigError("r", "config key 'r': metric er requires r > 1/p");
  } else {
    throw ConfigError("metric", "config key 'metric': expected wce or er, got '" + ex.metric + "'");
  }
  if (ex.rule == RuleFamily::KorobovCbc && ex.spec.r <= 1.0) throw ConfigError("r", "config key 'r': korobov_cbc search requires r > 1");

  ex.truncation = cfg.get_number<int>("truncation", 0);
  if (ex.truncation < 0) throw ConfigError("truncation", "config key 'truncation': must be >= 0");
  const long long samples = cfg.get_number<long long>("samples", 100);
  if (samples < 0) throw ConfigError("samples", "config key 'samples': must be >= 0");
  ex.samples = static_cast<std::size_t>(samples);
  ex.blocks = cfg.get_number<int>("blocks", 5);
  if (ex.blocks < 0 || ex.blocks > 12) throw ConfigError("blocks", "config key 'blocks': must be in [0, 12]");
  ex.seed = cfg.get_number<std::uint64_t>("seed", 1);

  const std::string fit_b = cfg.get("fit_b", std::to_string(ex.dim - 1));
  if (fit_b != "free") ex.fit_b = cfg.has("fit_b") ? cfg.get_number<double>("fit_b") : static_cast<double>(ex.dim - 1);
  if (cfg.has("quasi_algebra")) {
    ex.quasi_algebra = cfg.get_number<double>("quasi_algebra");
    if (!(*ex.quasi_algebra > 0.0)) throw ConfigError("quasi_algebra", "config key 'quasi_algebra': must be positive");
    if (ex.spec.r <= 1.0) throw ConfigError("quasi_algebra", "config key 'quasi_algebra': transfer uses the hull surrogate, which requires r > 1");
  }
  ex.output_dir = cfg.get("output_dir", default_output_dir());
  const std::string plot = cfg.get("plot", "true");
  if (plot != "true" && plot != "false") throw ConfigError("plot", "config key 'plot': expected true or false");
  ex.plot = plot == "true";

  if (const auto unused = cfg.unused_keys(); !unused.empty()) {
    throw ConfigError(unused.front(), "unknown config key '" + unused.front() + "'");
  }
  return ex;
}

struct ExperimentResult {
  std::vector<CsvRow> rows;
  std::optional<RateFit> fit;
  std::string csv_path;
  std::string svg_path;
  std::vector<std::string> messages;
};

inline CubatureRule build_rule(const ExperimentConfig& ex, long long index) {
  switch (ex.rule) {
    case RuleFamily::Fibonacci: return fibonacci_rule(static_cast<int>(index));
    case RuleFamily::KorobovCbc: return korobov_rule(index, cbc_search(index, ex.dim, ex.spec.r).generator);
    case RuleFamily::Random: return random_rule(static_cast<std::size_t>(index), ex.dim, derive_seed(ex.seed, static_cast<std::uint64_t>(index)));
  }
  throw DomainError("build_rule: unknown rule family");
}

/// The primary metric name written for a config.
inline std::string primary_metric(const ExperimentConfig& ex) { return ex.metric == "wce" ? "wce" : "er_sup"; }

/// Runs the sweep and returns the rows without touching the filesystem.
inline ExperimentResult compute_experiment(const ExperimentConfig& ex) {
  ExperimentResult res;
  const std::string rule_name = to_string(ex.rule);
  const std::string family = to_string(ex.spec.family);
  for (long long index : ex.sweep) {
    const CubatureRule rule = build_rule(ex, index);
    const auto m = static_cast<std::int64_t>(rule.size());
    auto row = [&](const std::string& metric, double value, double tail) {
      res.rows.push_back({m, rule_name, family, ex.spec.r, ex.spec.p, metric, value, tail, ex.seed});
    };
    if (ex.metric == "wce") {
      const ErrorReport rep = worst_case_error(rule, ex.spec, ex.truncation);
      row("wce", rep.value, rep.tail);
      continue;
    }
    std::optional<ErrorReport> kappa;
    if (ex.quasi_algebra) {
      ClassSpec hull = ex.spec;
      hull.family = ClassFamily::FourierHull;
      kappa = worst_case_error(rule, hull, ex.truncation);
    }
    const DiscretizationReport rep = estimate_er(rule, ex.spec, ex.samples, ex.blocks, ex.seed, kappa, ex.quasi_algebra);
    row("er_sup", rep.empirical_sup, 0.0);
    if (rep.witness_lower_bound) row("er_witness", *rep.witness_lower_bound, 0.0);
    if (rep.transferred_upper_bound) row("er_upper", *rep.transferred_upper_bound, 0.0);
    for (const std::string& note : rep.notes) res.messages.push_back("m=" + std::to_string(m) + ": " + note);
  }

  std::vector<std::pair<double, double>> series;
  for (const CsvRow& r : res.rows) {
    if (r.metric == primary_metric(ex) && r.m >= 3 && r.value > 0.0) series.emplace_back(static_cast<double>(r.m), r.value);
  }
  if (series.size() >= 4) {
    res.fit = fit_rate(series, ex.fit_b);
  } else {
    res.messages.push_back("rate fit skipped: " + std::to_string(series.size()) + " usable points (need 4)");
  }
  return res;
}

inline ExperimentResult run_experiment(const ExperimentConfig& ex) {
  ExperimentResult res = compute_experiment(ex);
  std::filesystem::create_directories(ex.output_dir);
  const std::filesystem::path dir(ex.output_dir);
  res.csv_path = (dir / (ex.name + ".csv")).string();
  {
    std::ofstream out(res.csv_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + res.csv_path + "'");
    write_csv(out, res.rows);
  }
  if (ex.plot) {
    std::map<std::string, PlotSeries> by_metric;
    for (const CsvRow& r : res.rows) {
      auto& s = by_metric[r.metric];
      s.label = r.rule + " " + r.metric;
      if (r.value > 0.0) s.points.emplace_back(static_cast<double>(r.m), r.value);
    }
    std::vector<PlotSeries> series;
    for (auto& [k, s] : by_metric) series.push_back(std::move(s));
    res.svg_path = (dir / (ex.name + ".svg")).string();
    std::ofstream out(res.svg_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + res.svg_path + "'");
    write_loglog_svg(out, series, ex.name + " (" + to_string(ex.spec.family) + ", r=" + detail::format_double(ex.spec.r) + ")");
  }
  return res;
}

inline std::string describe(const RateFit& fit) {
  std::ostringstream os;
  os << "C=" << fit.C << " r=" << fit.r << " b=" << fit.b << (fit.b_frozen ? " (frozen)" : " (fitted)")
     << " residual_rms=" << fit.residual_rms << " m=[" << fit.m_min << ", " << fit.m_max << "] points=" << fit.points;
  return os.str();
}

}  // namespace mixdisc
