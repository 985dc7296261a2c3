#pragma once

// Cubature rules on the torus: Fibonacci and Korobov (rank-1 lattice) rules,
// arbitrary weighted point sets, worst-case integration errors for the
// Sobolev-type class W^r_2 and the Fourier hull class, component-by-component
// lattice generator search, and the Monte Carlo / Hoeffding baseline.
//
// Worst-case errors.  With G(k) = sum_j lambda_j e^{i k.xi_j} and
// w(k) = prod_j max(1, |k_j|)^{-r}:
//   W^r_2 ball (f = phi * F_r, ||phi||_2 <= B):
//       B * sqrt( sum_{k != 0} w(k)^2 |G(k)|^2 + |1 - G(0)|^2 )
//   Fourier hull (|f^(k)| <= B w(k)):
//       B * ( sum_{k != 0} w(k) |G(k)| + |1 - G(0)| )
// For an equal-weight lattice rule G is the indicator of the dual lattice
// {k : k.a = 0 mod m}, and the dual sums have the closed form
//   sum_{k dual} w(k) = (1/m) sum_mu prod_j omega(mu a_j mod m),
//   omega(c) = sum_{rho mod m} W(rho) e^{2 pi i rho c / m},
// with residue sums W(rho) = sum_{k = rho mod m} max(1,|k|)^{-s} evaluated by
// Hurwitz zeta functions.

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mixdisc/dyadic.hpp"
#include "mixdisc/grid.hpp"
#include "mixdisc/norms.hpp"
#include "mixdisc/random.hpp"

namespace mixdisc {

struct LatticeDescriptor {
  std::int64_t modulus = 1;
  /// Generator reduced into [0, modulus).
  std::vector<std::int64_t> generator;
  friend bool operator==(const LatticeDescriptor&, const LatticeDescriptor&) = default;
};

struct CubatureRule {
  PointSet nodes;
  std::vector<double> weights;
  bool equal_weights = false;
  std::optional<LatticeDescriptor> lattice;

  int dim() const { return nodes.dim; }
  std::size_t size() const { return nodes.size(); }
  double weight_l1() const {
    double s = 0.0;
    for (double w : weights) s += std::abs(w);
    return s;
  }
};

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

inline PointSet lattice_nodes(const LatticeDescriptor& lat) {
  const auto d = lat.generator.size();
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(lat.modulus) * d);
  for (std::int64_t mu = 1; mu <= lat.modulus; ++mu) {
    for (std::int64_t a : lat.generator) {
      const std::int64_t res = mul_mod(mu % lat.modulus, a, lat.modulus);
      coords.push_back(kTwoPi * static_cast<double>(res) / static_cast<double>(lat.modulus));
    }
  }
  return PointSet(static_cast<int>(d), std::move(coords));
}

}  // namespace detail

/// Rank-1 lattice rule with nodes 2*pi*{mu a / m}, mu = 1..m, equal weights 1/m.
inline CubatureRule korobov_rule(std::int64_t m, const std::vector<std::int64_t>& a) {
  if (m < 1) throw DomainError("korobov_rule: modulus must be >= 1");
  if (a.empty()) throw DomainError("korobov_rule: generator must be nonempty");
  LatticeDescriptor lat{m, {}};
  for (std::int64_t aj : a) lat.generator.push_back(detail::mod_floor(aj, m));
  CubatureRule rule;
  rule.nodes = detail::lattice_nodes(lat);
  rule.weights.assign(static_cast<std::size_t>(m), 1.0 / static_cast<double>(m));
  rule.equal_weights = true;
  rule.lattice = std::move(lat);
  return rule;
}

/// b_0 = b_1 = 1, b_n = b_{n-1} + b_{n-2}.
inline std::int64_t fibonacci_number(int n) {
  if (n < 0) throw DomainError("fibonacci_number: index must be >= 0");
  std::int64_t prev = 1, cur = 1;
  for (int i = 2; i <= n; ++i) {
    std::int64_t next = 0;
    if (__builtin_add_overflow(prev, cur, &next)) {
      throw RangeError("fibonacci_number: b_" + std::to_string(n) + " overflows 64-bit integers");
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Fibonacci rule on T^2: nodes (2 pi mu / b_n, 2 pi {mu b_{n-1} / b_n}).
inline CubatureRule fibonacci_rule(int n) {
  if (n < 2) throw DomainError("fibonacci_rule: index must be >= 2");
  const std::int64_t bn = fibonacci_number(n);
  return korobov_rule(bn, {1, fibonacci_number(n - 1)});
}

/// Arbitrary node set; equal weights 1/m unless weights are supplied.
inline CubatureRule point_rule(PointSet nodes, std::optional<std::vector<double>> weights = std::nullopt) {
  if (nodes.size() == 0) throw DomainError("point_rule: need at least one node");
  CubatureRule rule;
  const auto m = nodes.size();
  rule.nodes = std::move(nodes);
  if (weights) {
    if (weights->size() != m) throw DomainError("point_rule: weight count does not match node count");
    rule.weights = std::move(*weights);
  } else {
    rule.weights.assign(m, 1.0 / static_cast<double>(m));
    rule.equal_weights = true;
  }
  return rule;
}

/// m independent uniform points in T^d with equal weights.
inline CubatureRule random_rule(std::size_t m, int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coords(m * static_cast<std::size_t>(d));
  for (double& x : coords) x = kTwoPi * uniform01(rng);
  return point_rule(PointSet(d, std::move(coords)));
}

/// Checks the rule invariants, including that a lattice descriptor regenerates the nodes.
inline void validate(const CubatureRule& rule) {
  if (rule.size() == 0) throw DomainError("CubatureRule: empty");
  if (rule.weights.size() != rule.size()) throw DomainError("CubatureRule: weight count mismatch");
  if (rule.lattice) {
    if (static_cast<int>(rule.lattice->generator.size()) != rule.dim()) throw DomainError("CubatureRule: lattice dimension mismatch");
    if (detail::lattice_nodes(*rule.lattice).coords != rule.nodes.coords) {
      throw DomainError("CubatureRule: lattice descriptor does not regenerate the nodes");
    }
  }
}

/// k.a = 0 (mod m), in exact integer arithmetic.
inline bool is_dual(const LatticeDescriptor& lat, std::span<const int> k) {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    acc = detail::mod_floor(acc + detail::mul_mod(detail::mod_floor(k[j], lat.modulus), lat.generator[j], lat.modulus), lat.modulus);
  }
  return acc == 0;
}

/// Visits every dual-lattice frequency with |k_j| <= K.  The last coordinate is
/// resolved by bucketing its values by residue, so the cost is
/// (2K+1)^{d-1} times the bucket size rather than (2K+1)^d.
template <class Fn>
void for_each_dual(const LatticeDescriptor& lat, int K, Fn&& fn) {
  const auto d = lat.generator.size();
  const std::int64_t m = lat.modulus;
  const std::int64_t a_last = lat.generator[d - 1];
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(m));
  for (int k = -K; k <= K; ++k) bucket[static_cast<std::size_t>(detail::mul_mod(detail::mod_floor(k, m), a_last, m))].push_back(k);

  std::vector<int> k(d, -K);
  std::vector<std::int64_t> prefix(d + 1, 0);  // prefix[j] = sum_{i<j} k_i a_i mod m
  auto refresh = [&](std::size_t from) {
    for (std::size_t j = from; j + 1 < d; ++j) {
      prefix[j + 1] = detail::mod_floor(prefix[j] + detail::mul_mod(detail::mod_floor(k[j], m), lat.generator[j], m), m);
    }
  };
  refresh(0);
  while (true) {
    const std::int64_t need = detail::mod_floor(-prefix[d - 1], m);
    for (int last : bucket[static_cast<std::size_t>(need)]) {
      k[d - 1] = last;
      fn(std::span<const int>(k));
    }
    if (d == 1) break;
    std::size_t j = d - 1;
    while (j-- > 0) {
      if (++k[j] <= K) break;
      k[j] = -K;
    }
    if (j == static_cast<std::size_t>(-1)) break;
    refresh(j);
  }
}

/// All dual-lattice frequencies with |k_j| <= K, flattened row by row.
inline std::vector<std::vector<int>> dual_lattice(const CubatureRule& rule, int K) {
  if (!rule.lattice) throw DomainError("dual_lattice: rule has no lattice descriptor");
  if (K < 0) throw DomainError("dual_lattice: box bound must be >= 0");
  std::vector<std::vector<int>> out;
  for_each_dual(*rule.lattice, K, [&](std::span<const int> k) { out.emplace_back(k.begin(), k.end()); });
  return out;
}

/// G(k) = sum_j lambda_j e^{i k.xi_j}: the rule applied to a single exponential.
inline cplx exponential_sum(const CubatureRule& rule, std::span<const int> k) {
  if (static_cast<int>(k.size()) != rule.dim()) throw DomainError("exponential_sum: dimension mismatch");
  cplx acc{};
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto x = rule.nodes[i];
    double phase = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) phase += k[j] * x[j];
    acc += rule.weights[i] * std::polar(1.0, phase);
  }
  return acc;
}

/// G(k) for every |k_j| <= K, evaluated from the nodes (no lattice shortcut).
/// Returned as the coefficient array of a TrigPoly on that box.
inline TrigPoly exponential_sums(const CubatureRule& rule, int K) {
  const int d = rule.dim();
  TrigPoly G(std::vector<int>(static_cast<std::size_t>(d), K));
  auto out = G.coeffs();
  const std::size_t n = static_cast<std::size_t>(2 * K + 1);
  std::vector<std::vector<cplx>> tables(static_cast<std::size_t>(d), std::vector<cplx>(n));
  std::vector<cplx> prefix(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto x = rule.nodes[i];
    for (int j = 0; j < d; ++j) {
      for (int k = -K; k <= K; ++k) tables[static_cast<std::size_t>(j)][static_cast<std::size_t>(k + K)] = std::polar(1.0, k * x[static_cast<std::size_t>(j)]);
    }
    // Odometer over the box with running prefix products.
    std::vector<std::size_t> pos(static_cast<std::size_t>(d), 0);
    prefix[0] = rule.weights[i];
    for (int j = 0; j + 1 < d; ++j) prefix[static_cast<std::size_t>(j) + 1] = prefix[static_cast<std::size_t>(j)] * tables[static_cast<std::size_t>(j)][0];
    std::size_t idx = 0;
    const auto& last = tables[static_cast<std::size_t>(d) - 1];
    while (true) {
      const cplx p = prefix[static_cast<std::size_t>(d) - 1];
      detail::axpy(p, last.data(), out.data() + idx, n);
      idx += n;
      int j = d - 2;
      for (; j >= 0; --j) {
        if (++pos[static_cast<std::size_t>(j)] < n) break;
        pos[static_cast<std::size_t>(j)] = 0;
      }
      if (j < 0) break;
      for (int q = j; q + 1 < d; ++q) {
        prefix[static_cast<std::size_t>(q) + 1] = prefix[static_cast<std::size_t>(q)] * tables[static_cast<std::size_t>(q)][pos[static_cast<std::size_t>(q)]];
      }
    }
  }
  return G;
}

/// Weighted node sum sum_j lambda_j f(xi_j), evaluated at the nodes.
inline cplx apply_rule_nodes(const CubatureRule& rule, const TrigPoly& f) {
  if (rule.dim() != f.dim()) throw DomainError("apply_rule: dimension mismatch");
  Evaluator ev(f);
  cplx acc{};
  for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * ev(rule.nodes[i]);
  return acc;
}

/// Weighted node sum.  Equal-weight lattice rules use the exact identity
/// rule(e^{ik.x}) = [k dual], i.e. the sum of f^(k) over dual frequencies.
inline cplx apply_rule(const CubatureRule& rule, const TrigPoly& f) {
  if (rule.dim() != f.dim()) throw DomainError("apply_rule: dimension mismatch");
  if (!rule.lattice || !rule.equal_weights) return apply_rule_nodes(rule, f);
  cplx acc{};
  f.for_each([&](std::span<const int> k, cplx c) {
    if (c != cplx{} && is_dual(*rule.lattice, k)) acc += c;
  });
  return acc;
}

// ---------------------------------------------------------------------------
// Worst-case errors

enum class ErrorMethod { ClosedFormDual, TruncatedDual, TruncatedGeneral, Empirical };

inline std::string to_string(ErrorMethod m) {
  switch (m) {
    case ErrorMethod::ClosedFormDual: return "closed_form_dual";
    case ErrorMethod::TruncatedDual: return "truncated_dual";
    case ErrorMethod::TruncatedGeneral: return "truncated_general";
    case ErrorMethod::Empirical: return "empirical";
  }
  return "?";
}

/// value is a lower bound of the untruncated quantity, value + tail an upper bound.
struct ErrorReport {
  double value = 0.0;
  /// Box bound used; 0 for the untruncated closed form.
  int truncation = 0;
  double tail = 0.0;
  ErrorMethod method = ErrorMethod::Empirical;

  double upper() const { return value + tail; }
};

inline int default_truncation(int d) { return d <= 2 ? 1 << 10 : 1 << 6; }

/// Exponent of the weights entering the dual sum: 2r for W^r_2, r for the hull.
inline double dual_sum_exponent(const ClassSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case ClassFamily::SobolevW:
      if (spec.p != 2.0) throw DomainError("worst_case_error: Sobolev class supported only for p = 2");
      if (2.0 * spec.r <= 1.0) throw DivergenceError("worst_case_error: W^r_2 requires 2r > 1");
      return 2.0 * spec.r;
    case ClassFamily::FourierHull:
      if (spec.r <= 1.0) throw DivergenceError("worst_case_error: Fourier hull class requires r > 1");
      return spec.r;
    case ClassFamily::HoelderH:
      break;
  }
  throw DomainError("worst_case_error: no closed worst-case formula for the hoelder family; use sampled suprema");
}

/// Upper bound on sum_{k outside |k_j|<=K} prod_j max(1,|k_j|)^{-s} (s > 1).
inline double weight_mass_outside_box(double s, int K, int d) {
  double kept = 1.0;
  for (int k = 1; k <= K; ++k) kept += 2.0 * std::pow(k, -s);
  const double tail = 2.0 * std::pow(K, 1.0 - s) / (s - 1.0);
  return std::pow(kept + tail, d) - std::pow(kept, d);
}

namespace detail {

/// W(rho) = sum_{k = rho mod m} max(1,|k|)^{-s}, rho = 0..m-1.
inline std::vector<double> residue_weight_sums(std::int64_t m, double s) {
  std::vector<double> W(static_cast<std::size_t>(m));
  const double ms = std::pow(static_cast<double>(m), -s);
  W[0] = 1.0 + 2.0 * ms * gsl_sf_zeta(s);
  for (std::int64_t c = 1; c < m; ++c) {
    const double q1 = static_cast<double>(c) / static_cast<double>(m);
    const double q2 = static_cast<double>(m - c) / static_cast<double>(m);
    W[static_cast<std::size_t>(c)] = ms * (gsl_sf_hzeta(s, q1) + gsl_sf_hzeta(s, q2));
  }
  return W;
}

/// omega(c) = sum_rho W(rho) e^{2 pi i rho c/m}; real and even because W is.
inline std::vector<double> lattice_kernel_table(std::int64_t m, double s) {
  const auto W = residue_weight_sums(m, s);
  std::vector<cplx> buf(W.begin(), W.end());
  detail::dft_inplace(buf, {static_cast<int>(m)}, FFTW_BACKWARD);
  std::vector<double> omega(static_cast<std::size_t>(m));
  for (std::int64_t c = 0; c < m; ++c) {
    omega[static_cast<std::size_t>(c)] = 0.5 * (buf[static_cast<std::size_t>(c)].real() + buf[static_cast<std::size_t>((m - c) % m)].real());
  }
  return omega;
}

}  // namespace detail

/// Closed-form sum over the whole dual lattice (k = 0 excluded) of
/// prod_j max(1,|k_j|)^{-s}; requires s > 1.
inline double lattice_dual_sum(const LatticeDescriptor& lat, double s) {
  if (s <= 1.0) throw DivergenceError("lattice_dual_sum: requires exponent > 1");
  const std::int64_t m = lat.modulus;
  const auto omega = detail::lattice_kernel_table(m, s);
  double acc = 0.0;
  for (std::int64_t mu = 0; mu < m; ++mu) {
    double prod = 1.0;
    for (std::int64_t a : lat.generator) prod *= omega[static_cast<std::size_t>(detail::mul_mod(mu, a, m))];
    acc += prod;
  }
  return acc / static_cast<double>(m) - 1.0;
}

namespace detail {

/// Rounding allowance for the closed form: the sum cancels from O((1+2 zeta(s))^d) down to the result.
inline double closed_form_rounding(double s, int d, std::int64_t m) {
  const double scale = std::pow(1.0 + 2.0 * gsl_sf_zeta(s), d);
  return 64.0 * std::numeric_limits<double>::epsilon() * scale * std::log2(static_cast<double>(m) + 2.0);
}

inline ErrorReport finish_report(const ClassSpec& spec, double raw, double raw_tail, int K, ErrorMethod method) {
  if (spec.family == ClassFamily::SobolevW) {
    const double v = std::sqrt(std::max(raw, 0.0));
    return {spec.B * v, K, spec.B * (std::sqrt(std::max(raw, 0.0) + raw_tail) - v), method};
  }
  return {spec.B * raw, K, spec.B * raw_tail, method};
}

}  // namespace detail

/// Worst-case integration error of a fixed rule over the class ball.
/// K > 0: truncation to |k_j| <= K (dual enumeration for equal-weight lattice
/// rules, node-evaluated exponential sums otherwise) with a tail bound.
/// K == 0: untruncated closed form for equal-weight lattice rules; other rules
/// fall back to the default truncation.
inline ErrorReport worst_case_error(const CubatureRule& rule, const ClassSpec& spec, int K = 0) {
  const double s = dual_sum_exponent(spec);
  const int d = rule.dim();
  const bool lattice_path = rule.lattice.has_value() && rule.equal_weights;
  if (K < 0) throw DomainError("worst_case_error: truncation must be >= 0");
  if (K == 0 && lattice_path) {
    const double raw = std::max(lattice_dual_sum(*rule.lattice, s), 0.0);
    const double rounding = detail::closed_form_rounding(s, d, rule.lattice->modulus);
    return detail::finish_report(spec, raw, rounding, 0, ErrorMethod::ClosedFormDual);
  }
  if (K == 0) K = default_truncation(d);

  const double lambda1 = rule.weight_l1();
  // Sobolev tails bound the squared quantity: |G| <= lambda1 outside the box.
  const double raw_tail = (spec.family == ClassFamily::SobolevW ? lambda1 * lambda1 : lambda1) * weight_mass_outside_box(s, K, d);

  double raw = 0.0;
  if (lattice_path) {
    for_each_dual(*rule.lattice, K, [&](std::span<const int> k) {
      bool zero = true;
      for (int v : k) zero = zero && v == 0;
      if (!zero) raw += hull_weight(k, s);
    });
    return detail::finish_report(spec, raw, raw_tail, K, ErrorMethod::TruncatedDual);
  }

  const TrigPoly G = exponential_sums(rule, K);
  const bool sobolev = spec.family == ClassFamily::SobolevW;
  G.for_each([&](std::span<const int> k, cplx g) {
    bool zero = true;
    for (int v : k) zero = zero && v == 0;
    if (zero) {
      raw += sobolev ? std::norm(1.0 - g) : std::abs(1.0 - g);
    } else {
      raw += sobolev ? hull_weight(k, s) * std::norm(g) : hull_weight(k, s) * std::abs(g);
    }
  });
  return detail::finish_report(spec, raw, raw_tail, K, ErrorMethod::TruncatedGeneral);
}

// ---------------------------------------------------------------------------
// Component-by-component search

inline bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) return false;
  }
  return true;
}

struct CbcResult {
  std::vector<std::int64_t> generator;
  /// Closed-form Fourier hull dual sum sum_{k dual, k != 0} w(k) of the result.
  double dual_sum = 0.0;
};

/// Greedy component-by-component minimization of the hull dual sum over
/// a_j in {1..m-1}, a_1 = 1.  Ties go to the smallest a_j.
inline CbcResult cbc_search(std::int64_t m, int d, double r) {
  if (!is_prime(m)) throw DomainError("cbc_search: modulus must be prime");
  if (d < 1) throw DomainError("cbc_search: dimension must be positive");
  if (r <= 1.0) throw DivergenceError("cbc_search: requires r > 1");
  const auto omega = detail::lattice_kernel_table(m, r);
  const auto mu_count = static_cast<std::size_t>(m);
  std::vector<double> prod(omega);  // a_1 = 1
  CbcResult out{{1}, 0.0};
  double best_total = 0.0;
  for (double v : prod) best_total += v;
  for (int j = 1; j < d; ++j) {
    std::int64_t best_a = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t a = 1; a < m; ++a) {
      double total = 0.0;
      std::int64_t res = 0;
      for (std::size_t mu = 0; mu < mu_count; ++mu) {
        total += prod[mu] * omega[static_cast<std::size_t>(res)];
        res += a;
        if (res >= m) res -= m;
      }
      if (total < best * (1.0 - 1e-12)) {
        best = total;
        best_a = a;
      }
    }
    std::int64_t res = 0;
    for (std::size_t mu = 0; mu < mu_count; ++mu) {
      prod[mu] *= omega[static_cast<std::size_t>(res)];
      res += best_a;
      if (res >= m) res -= m;
    }
    out.generator.push_back(best_a);
    best_total = best;
  }
  out.dual_sum = best_total / static_cast<double>(m) - 1.0;
  return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo baseline

/// Hoeffding tail bound 2 exp(-m eta^2 / (8 M^2)).
inline double hoeffding_bound(std::size_t m, double eta, double M) {
  return 2.0 * std::exp(-static_cast<double>(m) * eta * eta / (8.0 * M * M));
}

struct ExceedanceStat {
  double eta = 0.0;
  double frequency = 0.0;
  double bound = 0.0;
  /// Binomial standard deviation sqrt(q(1-q)/trials), q = min(bound, 1).
  double binomial_sd = 0.0;
};

struct McBaseline {
  std::vector<double> errors;
  double mean_error = 0.0;
  double max_error = 0.0;
  std::vector<ExceedanceStat> exceedance;
};

/// Errors |integral f - (1/m) sum f(x_j)| of `trials` independent uniform
/// m-point sets; trial t draws from the stream derive_seed(seed, t).
inline McBaseline mc_baseline(const TrigPoly& f, std::size_t m, std::size_t trials, const std::vector<double>& etas, double M,
                              std::uint64_t seed, int oversample = 8) {
  if (m < 1 || trials < 1) throw DomainError("mc_baseline: m and trials must be >= 1");
  if (!(M > 0.0)) throw DomainError("mc_baseline: M must be positive");
  if (!f.is_real_valued(1e-12)) throw DomainError("mc_baseline: f must be real-valued");
  const double sup = lp_norm(f, kInfinity, oversample).value;
  if (sup > M * (1.0 + 1e-12)) {
    throw PreconditionError("mc_baseline: grid maximum " + std::to_string(sup) + " exceeds M = " + std::to_string(M));
  }
  const double integral = f.coeffs()[f.size() / 2].real();  // center of the box is k = 0
  const int d = f.dim();
  McBaseline out;
  out.errors.resize(trials);
  Evaluator ev(f);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (double& xj : x) xj = kTwoPi * uniform01(rng);
      acc += ev(x).real();
    }
    out.errors[t] = std::abs(integral - acc / static_cast<double>(m));
  }
  for (double e : out.errors) {
    out.mean_error += e;
    out.max_error = std::max(out.max_error, e);
  }
  out.mean_error /= static_cast<double>(trials);
  for (double eta : etas) {
    std::size_t hits = 0;
    for (double e : out.errors) hits += e >= eta ? 1 : 0;
    const double bound = hoeffding_bound(m, eta, M);
    const double q = std::min(bound, 1.0);
    out.exceedance.push_back({eta, static_cast<double>(hits) / static_cast<double>(trials), bound,
                              std::sqrt(q * (1.0 - q) / static_cast<double>(trials))});
  }
  return out;
}

}  // namespace mixdisc
