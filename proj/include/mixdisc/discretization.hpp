#pragma once

// Sampling discretization of the L2 norm.  The defect of a real function f on
// a weighted point set is
//     D(f) = ||f||_2^2 - sum_j lambda_j f(xi_j)^2,
// and er_m is the supremum of |D(f)| over a class.  Lower bounds come from the
// witness f+- = (g +- 1)/2, for which D(f+) - D(f-) equals the
// integration residual of g; upper bounds come from transferring a worst-case
// integration error through the quasi-algebra parameter.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixdisc/cubature.hpp"
#include "mixdisc/dyadic.hpp"
#include "mixdisc/grid.hpp"

namespace mixdisc {

namespace detail {

inline void require_real(const TrigPoly& f, const char* where) {
  if (!f.is_real_valued(1e-12)) throw DomainError(std::string(where) + ": function must be real-valued");
}

}  // namespace detail

/// sum_j lambda_j f(xi_j)^2 for real f.  Equal-weight lattice rules integrate
/// the exact square f*f through the dual lattice.
inline double weighted_square_sum(const TrigPoly& f, const CubatureRule& rule) {
  if (rule.lattice && rule.equal_weights) return apply_rule(rule, multiply(f, f)).real();
  Evaluator ev(f);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = ev(rule.nodes[i]).real();
    acc += rule.weights[i] * v * v;
  }
  return acc;
}

/// Signed defect ||f||_2^2 - sum_j lambda_j f(xi_j)^2.
inline double signed_defect(const TrigPoly& f, const CubatureRule& rule) {
  detail::require_real(f, "disc_error");
  if (f.dim() != rule.dim()) throw DomainError("disc_error: dimension mismatch");
  return f.l2_norm_squared() - weighted_square_sum(f, rule);
}

/// |D(f)| for a weighted rule (the er^o setting).
inline double disc_error(const TrigPoly& f, const CubatureRule& rule) { return std::abs(signed_defect(f, rule)); }

/// |D(f)| with equal weights 1/m on the given points.
inline double disc_error(const TrigPoly& f, const PointSet& points) { return disc_error(f, point_rule(points)); }

struct WitnessResult {
  double d_plus = 0.0;
  double d_minus = 0.0;
  /// max(|D+|, |D-|)
  double lower_bound = 0.0;
  /// integral g - sum_j lambda_j g(xi_j)
  double integration_residual = 0.0;
  /// (D+ - D-) - integration_residual; zero up to rounding.
  double identity_residual = 0.0;
};

inline WitnessResult er_witness(const TrigPoly& g, const CubatureRule& rule) {
  detail::require_real(g, "er_witness");
  const TrigPoly one = TrigPoly::constant(g.dim(), 1.0);
  const TrigPoly f_plus = 0.5 * (g + one);
  const TrigPoly f_minus = 0.5 * (g - one);
  WitnessResult w;
  w.d_plus = signed_defect(f_plus, rule);
  w.d_minus = signed_defect(f_minus, rule);
  w.lower_bound = std::max(std::abs(w.d_plus), std::abs(w.d_minus));
  w.integration_residual = g.coeff(std::vector<int>(static_cast<std::size_t>(g.dim()), 0)).real() - apply_rule(rule, g).real();
  w.identity_residual = (w.d_plus - w.d_minus) - w.integration_residual;
  return w;
}

inline WitnessResult er_witness(const TrigPoly& g, const PointSet& points) { return er_witness(g, point_rule(points)); }

/// a * (kappa + tail): an upper bound on er_m, conditional on the class having
/// the quasi-algebra property with parameter a.
inline double er_upper_transfer(const ErrorReport& kappa, double a) {
  if (!(a > 0.0)) throw DomainError("er_upper_transfer: a must be positive");
  return a * (kappa.value + kappa.tail);
}

struct DiscretizationReport {
  ClassSpec spec;
  int dim = 0;
  std::size_t points = 0;
  int block_cap = 0;
  std::uint64_t seed = 0;
  /// |D(f_i)| for the sampled class members, in draw order.
  std::vector<double> errors;
  double constant_probe = 0.0;
  /// max(|D+|, |D-|) of the (g +- 1)/2 transforms of the worst sample.
  std::optional<double> witness_lower_bound;
  std::size_t worst_index = 0;
  /// max over samples and probes; a lower estimate of er_m.
  double empirical_sup = 0.0;
  /// Set when a worst-case integration error and quasi-algebra parameter were supplied.
  std::optional<double> transferred_upper_bound;
  std::vector<std::string> notes;
};

/// Empirical er_m estimate over n_samples H-ball draws (draw i uses
/// derive_seed(seed, i)), the constant probe and the (g +- 1)/2 witness.
inline DiscretizationReport estimate_er(const CubatureRule& rule, const ClassSpec& spec, std::size_t n_samples, int block_cap,
                                        std::uint64_t seed, std::optional<ErrorReport> kappa = std::nullopt,
                                        std::optional<double> quasi_algebra = std::nullopt) {
  spec.validate();
  if (spec.family != ClassFamily::HoelderH) throw DomainError("estimate_er: class family must be hoelder");
  if (!spec.embeds_in_continuous()) throw DomainError("estimate_er: requires r > 1/p");
  DiscretizationReport rep;
  rep.spec = spec;
  rep.dim = rule.dim();
  rep.points = rule.size();
  rep.block_cap = block_cap;
  rep.seed = seed;

  rep.constant_probe = disc_error(TrigPoly::constant(rule.dim(), 1.0), rule);
  rep.empirical_sup = rep.constant_probe;

  std::optional<TrigPoly> worst;
  double worst_err = -1.0;
  rep.errors.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    TrigPoly f = sample_h_ball(spec, rule.dim(), block_cap, derive_seed(seed, i));
    const double e = disc_error(f, rule);
    rep.errors.push_back(e);
    if (e > worst_err) {
      worst_err = e;
      rep.worst_index = i;
      worst = std::move(f);
    }
  }
  if (worst) {
    rep.empirical_sup = std::max(rep.empirical_sup, worst_err);
    const WitnessResult w = er_witness(*worst, rule);
    rep.witness_lower_bound = w.lower_bound;
    rep.empirical_sup = std::max(rep.empirical_sup, w.lower_bound);
  }
  if (kappa && quasi_algebra) {
    rep.transferred_upper_bound = er_upper_transfer(*kappa, *quasi_algebra);
    rep.notes.push_back("upper bound conditional on quasi-algebra parameter " + std::to_string(*quasi_algebra));
  }
  if (rule.dim() >= 3 && rule.equal_weights) {
    rep.notes.push_back("d >= 3: equal-weight estimate is sampled evidence only; the equal-weight rate is unresolved");
  }
  return rep;
}

}  // namespace mixdisc
