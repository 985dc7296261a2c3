// mixdisc command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixdisc/mixdisc.hpp"

namespace {

using namespace mixdisc;

struct RuleArgs {
  std::string kind = "fibonacci";
  int n = 10;
  std::int64_t m = 0;
  std::vector<std::int64_t> generator;
  int dim = 2;
  std::uint64_t seed = 1;
  double cbc_r = 1.5;
};

void add_rule_options(CLI::App* cmd, RuleArgs& a) {
  cmd->add_option("--rule", a.kind, "fibonacci, korobov, korobov_cbc or random")
      ->check(CLI::IsMember({"fibonacci", "korobov", "korobov_cbc", "random"}));
  cmd->add_option("--n", a.n, "Fibonacci index");
  cmd->add_option("--m", a.m, "number of points / lattice modulus");
  cmd->add_option("--a", a.generator, "lattice generator (korobov)")->delimiter(',');
  cmd->add_option("--dim", a.dim, "dimension (korobov_cbc, random)");
  cmd->add_option("--seed", a.seed, "seed for random rules");
  cmd->add_option("--cbc-r", a.cbc_r, "smoothness used by the CBC search");
}

CubatureRule build(const RuleArgs& a) {
  if (a.kind == "fibonacci") return fibonacci_rule(a.n);
  if (a.m < 1) throw DomainError("--m is required for rule '" + a.kind + "'");
  if (a.kind == "korobov") {
    if (a.generator.empty()) throw DomainError("--a is required for korobov rules");
    return korobov_rule(a.m, a.generator);
  }
  if (a.kind == "korobov_cbc") return korobov_rule(a.m, cbc_search(a.m, a.dim, a.cbc_r).generator);
  return random_rule(static_cast<std::size_t>(a.m), a.dim, a.seed);
}

struct ClassArgs {
  std::string family = "hoelder";
  double r = 1.5;
  std::string p = "2";
  double B = 1.0;
};

void add_class_options(CLI::App* cmd, ClassArgs& c, const std::string& default_family) {
  c.family = default_family;
  cmd->add_option("--family", c.family, "sobolev, hoelder or fourier_hull");
  cmd->add_option("--r", c.r, "smoothness");
  cmd->add_option("--p", c.p, "integrability (number or inf)");
  cmd->add_option("--B", c.B, "ball radius");
}

double parse_p(const std::string& p) { return p == "inf" ? kInfinity : std::stod(p); }

ClassSpec to_spec(const ClassArgs& c) {
  ClassSpec s{parse_family(c.family), c.r, parse_p(c.p), c.B};
  s.validate();
  return s;
}

TrigPoly load_poly(const std::string& path) {
  if (path == "-") return read_coeffs(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_coeffs(in);
}

void save_poly(const std::string& path, const TrigPoly& f) {
  if (path == "-") {
    write_coeffs(std::cout, f);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_coeffs(out, f);
}

void print_report(const ErrorReport& r) {
  std::cout << "method     " << to_string(r.method) << "\n"
            << "truncation " << r.truncation << "\n"
            << "value      " << r.value << "\n"
            << "tail       " << r.tail << "\n"
            << "upper      " << r.upper() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixdisc: kernels, dyadic blocks, cubature and sampling discretization on the torus"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  std::cout << std::setprecision(12);

  // kernel
  auto* kernel = app.add_subcommand("kernel", "build a kernel and print its norms");
  std::string kernel_type = "fejer", kernel_out;
  KernelSpec kspec;
  kspec.order = 4;
  kernel->add_option("--type", kernel_type, "dirichlet, fejer, vallee_poussin, block or bernoulli")
      ->check(CLI::IsMember({"dirichlet", "fejer", "vallee_poussin", "block", "bernoulli"}));
  kernel->add_option("--order", kspec.order, "order j or block level s");
  kernel->add_option("--dim", kspec.dim, "dimension");
  kernel->add_option("--r", kspec.r, "Bernoulli smoothness");
  kernel->add_option("--truncation", kspec.truncation, "Bernoulli truncation K");
  kernel->add_option("--out", kernel_out, "write coefficients to this file ('-' for stdout)");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "dyadic block norms and seminorm of a coefficient file");
  std::string decompose_in;
  double decompose_r = 1.5;
  std::string decompose_p = "2";
  decompose->add_option("input", decompose_in, "coefficient file ('-' for stdin)")->required();
  decompose->add_option("--r", decompose_r, "smoothness");
  decompose->add_option("--p", decompose_p, "integrability (number or inf)");

  // cubature
  auto* cubature = app.add_subcommand("cubature", "worst-case integration error of a rule");
  RuleArgs cub_rule;
  ClassArgs cub_class;
  int cub_truncation = 0;
  std::string cub_nodes, cub_apply;
  add_rule_options(cubature, cub_rule);
  add_class_options(cubature, cub_class, "fourier_hull");
  cubature->add_option("--truncation", cub_truncation, "box bound K (0: closed form for lattices)");
  cubature->add_option("--nodes", cub_nodes, "write the nodes to this file");
  cubature->add_option("--apply", cub_apply, "apply the rule to the polynomial in this coefficient file");

  // cbc
  auto* cbc = app.add_subcommand("cbc", "component-by-component lattice generator search");
  std::int64_t cbc_m = 101;
  int cbc_dim = 3;
  double cbc_r = 1.5;
  cbc->add_option("--m", cbc_m, "prime modulus");
  cbc->add_option("--dim", cbc_dim, "dimension");
  cbc->add_option("--r", cbc_r, "smoothness (> 1)");

  // discretize
  auto* discretize = app.add_subcommand("discretize", "sampling discretization error of a rule");
  RuleArgs disc_rule;
  ClassArgs disc_class;
  std::size_t disc_samples = 100;
  int disc_blocks = 5;
  std::uint64_t disc_seed = 1;
  std::string disc_in;
  std::optional<double> disc_a;
  add_rule_options(discretize, disc_rule);
  add_class_options(discretize, disc_class, "hoelder");
  discretize->add_option("--samples", disc_samples, "number of class samples");
  discretize->add_option("--blocks", disc_blocks, "block cap S of the sampler");
  discretize->add_option("--sample-seed", disc_seed, "seed of the class sampler");
  discretize->add_option("--input", disc_in, "report the defect and witness of this coefficient file instead");
  discretize->add_option("--quasi-algebra", disc_a, "quasi-algebra parameter for the transferred upper bound");

  // fit
  auto* fit = app.add_subcommand("fit", "fit C m^-r (log m)^b to a result table");
  std::string fit_csv, fit_metric, fit_b = "1";
  fit->add_option("csv", fit_csv, "result table")->required();
  fit->add_option("--metric", fit_metric, "metric column to fit (default: first metric in the file)");
  fit->add_option("--b", fit_b, "frozen log exponent, or 'free'");

  // run
  auto* run = app.add_subcommand("run", "run an experiment described by a config file");
  std::string run_config, run_outdir;
  run->add_option("config", run_config, "config file")->required();
  run->add_option("--output-dir", run_outdir, std::string("output directory (default: $") + kOutputDirEnv + " or .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*kernel) {
      if (kernel_type == "dirichlet") kspec.kind = KernelKind::Dirichlet;
      else if (kernel_type == "fejer") kspec.kind = KernelKind::Fejer;
      else if (kernel_type == "vallee_poussin") kspec.kind = KernelKind::ValleePoussin;
      else if (kernel_type == "block") kspec.kind = KernelKind::Block;
      else kspec.kind = KernelKind::Bernoulli;
      const TrigPoly f = make_kernel(kspec);
      std::cout << "kernel " << kernel_type << " dim=" << f.dim() << " degree=" << f.box()[0] << "\n";
      std::cout << "L1   " << lp_norm(f, 1.0).value << "\n";
      std::cout << "L2   " << lp_norm(f, 2.0).value << "\n";
      std::cout << "Linf " << lp_norm(f, kInfinity).value << "\n";
      if (kspec.kind == KernelKind::Bernoulli) {
        const auto b = bernoulli(kspec.r, kspec.truncation, kspec.dim);
        if (b.l2_tail) std::cout << "l2 tail (squared) " << *b.l2_tail << "\n";
      }
      if (!kernel_out.empty()) save_poly(kernel_out, f);
    } else if (*decompose) {
      const TrigPoly f = load_poly(decompose_in);
      const double p = parse_p(decompose_p);
      double sup = 0.0;
      std::cout << "block,norm,scaled\n";
      for (const BlockNorm& b : block_norms(f, decompose_r, p)) {
        for (std::size_t j = 0; j < b.s.s.size(); ++j) std::cout << (j ? " " : "") << b.s.s[j];
        std::cout << "," << b.norm << "," << b.scaled << "\n";
        sup = std::max(sup, b.scaled);
      }
      std::cout << "seminorm " << sup << "\n";
    } else if (*cubature) {
      const CubatureRule rule = build(cub_rule);
      std::cout << "points " << rule.size() << " dim " << rule.dim() << "\n";
      if (rule.lattice) {
        std::cout << "generator";
        for (auto a : rule.lattice->generator) std::cout << ' ' << a;
        std::cout << "\n";
      }
      print_report(worst_case_error(rule, to_spec(cub_class), cub_truncation));
      if (!cub_apply.empty()) {
        const cplx q = apply_rule(rule, load_poly(cub_apply));
        std::cout << "rule value " << q.real() << " " << q.imag() << "\n";
      }
      if (!cub_nodes.empty()) {
        std::ofstream out(cub_nodes);
        if (!out) throw Error("cannot write '" + cub_nodes + "'");
        out << std::setprecision(17);
        for (std::size_t i = 0; i < rule.size(); ++i) {
          for (double x : rule.nodes[i]) out << x << ' ';
          out << rule.weights[i] << '\n';
        }
      }
    } else if (*cbc) {
      const CbcResult res = cbc_search(cbc_m, cbc_dim, cbc_r);
      std::cout << "generator";
      for (auto a : res.generator) std::cout << ' ' << a;
      std::cout << "\ndual_sum " << res.dual_sum << "\n";
    } else if (*discretize) {
      const CubatureRule rule = build(disc_rule);
      if (!disc_in.empty()) {
        const TrigPoly g = load_poly(disc_in);
        const WitnessResult w = er_witness(g, rule);
        std::cout << "defect " << signed_defect(g, rule) << "\n"
                  << "witness_plus " << w.d_plus << "\nwitness_minus " << w.d_minus << "\n"
                  << "witness_lower_bound " << w.lower_bound << "\nintegration_residual " << w.integration_residual << "\n";
      } else {
        const ClassSpec spec = to_spec(disc_class);
        std::optional<ErrorReport> kappa;
        if (disc_a) {
          ClassSpec hull = spec;
          hull.family = ClassFamily::FourierHull;
          kappa = worst_case_error(rule, hull);
        }
        const DiscretizationReport rep = estimate_er(rule, spec, disc_samples, disc_blocks, disc_seed, kappa, disc_a);
        std::cout << "points " << rep.points << " dim " << rep.dim << "\n"
                  << "samples " << rep.errors.size() << " block_cap " << rep.block_cap << "\n"
                  << "constant_probe " << rep.constant_probe << "\n"
                  << "empirical_sup " << rep.empirical_sup << " (sample " << rep.worst_index << ")\n";
        if (rep.witness_lower_bound) std::cout << "witness_lower_bound " << *rep.witness_lower_bound << "\n";
        if (rep.transferred_upper_bound) std::cout << "transferred_upper_bound " << *rep.transferred_upper_bound << "\n";
        for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
      }
    } else if (*fit) {
      std::ifstream in(fit_csv);
      if (!in) throw Error("cannot open '" + fit_csv + "'");
      const auto rows = read_csv(in);
      if (rows.empty()) throw DomainError("fit: table has no rows");
      const std::string metric = fit_metric.empty() ? rows.front().metric : fit_metric;
      std::vector<std::pair<double, double>> data;
      for (const CsvRow& r : rows) {
        if (r.metric == metric && r.m >= 3 && r.value > 0.0) data.emplace_back(static_cast<double>(r.m), r.value);
      }
      std::optional<double> b;
      if (fit_b != "free") b = std::stod(fit_b);
      std::cout << "metric " << metric << "\n" << describe(fit_rate(data, b)) << "\n";
    } else if (*run) {
      Config cfg = Config::load(run_config);
      if (!run_outdir.empty()) cfg.set("output_dir", run_outdir);
      const ExperimentConfig ex = parse_experiment(cfg);
      const ExperimentResult res = run_experiment(ex);
      for (const CsvRow& r : res.rows) std::cout << r.m << " " << r.metric << " " << r.value << "\n";
      for (const auto& msg : res.messages) std::cout << "note: " << msg << "\n";
      if (res.fit) std::cout << "fit " << describe(*res.fit) << "\n";
      std::cout << "csv " << res.csv_path << "\n";
      if (!res.svg_path.empty()) std::cout << "plot " << res.svg_path << "\n";
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
