#pragma once

// Classical univariate kernels (Dirichlet, Fejer, de la Vallee Poussin, dyadic
// blocks, Bernoulli) and their tensor products.  Everything is built in
// coefficient space.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "mixdisc/trig_poly.hpp"

namespace mixdisc {

enum class KernelKind { Dirichlet, Fejer, ValleePoussin, Block, Bernoulli };

namespace coeff1d {

inline double dirichlet(int j, int k) { return std::abs(k) <= j ? 1.0 : 0.0; }

/// (1 - |k|/j) on |k| < j.
inline double fejer(int j, int k) {
  const int a = std::abs(k);
  return a < j ? static_cast<double>(j - a) / j : 0.0;
}

/// Average of Dirichlet coefficients D_l(k) over l = j..2j-1.
inline double vallee_poussin(int j, int k) {
  const int a = std::abs(k);
  const int count = std::clamp(2 * j - a, 0, j);
  return static_cast<double>(count) / j;
}

/// Coefficients of the dyadic block kernel of level s.
inline double block(int s, int k) {
  if (s == 0) return k == 0 ? 1.0 : 0.0;
  if (s == 1) return std::abs(k) == 1 ? 1.0 : 0.0;
  return vallee_poussin(1 << (s - 1), k) - vallee_poussin(1 << (s - 2), k);
}

inline int block_degree(int s) { return s == 0 ? 0 : (1 << s) - 1; }

/// Bernoulli kernel coefficient: |k|^{-r} with phase exp(-i sign(k) r pi/2).
inline cplx bernoulli(double r, int k) {
  if (k == 0) return 1.0;
  const double mag = std::pow(static_cast<double>(std::abs(k)), -r);
  return std::polar(mag, (k > 0 ? -1.0 : 1.0) * r * std::numbers::pi / 2.0);
}

}  // namespace coeff1d

/// Tensor product prod_j u_j(k_j) on the box |k_j| <= degree[j].
inline TrigPoly tensor_kernel(const std::vector<int>& degree, const std::vector<std::function<cplx(int)>>& factors) {
  TrigPoly f(degree);
  auto out = f.coeffs();
  std::vector<std::vector<cplx>> tables(degree.size());
  for (std::size_t j = 0; j < degree.size(); ++j) {
    for (int k = -degree[j]; k <= degree[j]; ++k) tables[j].push_back(factors[j](k));
  }
  std::size_t idx = 0;
  f.for_each([&](std::span<const int> k, cplx) {
    cplx c = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) c *= tables[j][static_cast<std::size_t>(k[j] + degree[j])];
    out[idx++] = c;
  });
  return f;
}

namespace detail {
template <class Fn>
TrigPoly isotropic_tensor(int d, int degree, Fn fn) {
  if (d < 1) throw DomainError("kernel: dimension must be positive");
  return tensor_kernel(std::vector<int>(static_cast<std::size_t>(d), degree),
                       std::vector<std::function<cplx(int)>>(static_cast<std::size_t>(d), fn));
}
}  // namespace detail

/// D_j(x) = sum_{|k|<=j} e^{ikx}, tensorized over d coordinates.
inline TrigPoly dirichlet(int j, int d = 1) {
  if (j < 0) throw DomainError("dirichlet: order must be >= 0");
  return detail::isotropic_tensor(d, j, [j](int k) { return cplx(coeff1d::dirichlet(j, k)); });
}

/// K_j, the mean of D_0..D_{j-1}; degree j-1.
inline TrigPoly fejer(int j, int d = 1) {
  if (j < 1) throw DomainError("fejer: order must be >= 1");
  return detail::isotropic_tensor(d, j - 1, [j](int k) { return cplx(coeff1d::fejer(j, k)); });
}

/// V_j, the mean of D_j..D_{2j-1}; degree 2j-1.
inline TrigPoly vallee_poussin(int j, int d = 1) {
  if (j < 1) throw DomainError("vallee_poussin: order must be >= 1");
  return detail::isotropic_tensor(d, 2 * j - 1, [j](int k) { return cplx(coeff1d::vallee_poussin(j, k)); });
}

/// A_s(x) = prod_j A_{s_j}(x_j).
inline TrigPoly block_kernel(const std::vector<int>& s) {
  if (s.empty()) throw DomainError("block_kernel: empty block index");
  std::vector<int> degree(s.size());
  std::vector<std::function<cplx(int)>> factors;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 0 || s[j] > 30) throw DomainError("block_kernel: block level out of range");
    degree[j] = coeff1d::block_degree(s[j]);
    const int sj = s[j];
    factors.emplace_back([sj](int k) { return cplx(coeff1d::block(sj, k)); });
  }
  return tensor_kernel(degree, factors);
}

inline TrigPoly block_kernel(int s) { return block_kernel(std::vector<int>{s}); }

/// Squared l2 mass of Bernoulli coefficients discarded by truncation at |k_j| <= K.
/// Coordinatewise integral bound 2 K^{1-2r}/(2r-1), composed over the product.
inline double bernoulli_l2_tail(double r, int K, int d) {
  if (2.0 * r <= 1.0) throw DivergenceError("bernoulli_l2_tail: requires 2r > 1");
  double kept = 1.0;
  for (int k = 1; k <= K; ++k) kept += 2.0 * std::pow(k, -2.0 * r);
  const double tail = 2.0 * std::pow(K, 1.0 - 2.0 * r) / (2.0 * r - 1.0);
  return std::pow(kept + tail, d) - std::pow(kept, d);
}

/// Bound on the sup-norm of the discarded part (sum of |coefficients|); requires r > 1.
inline double bernoulli_sup_tail(double r, int K, int d) {
  if (r <= 1.0) throw DivergenceError("bernoulli_sup_tail: requires r > 1");
  double kept = 1.0;
  for (int k = 1; k <= K; ++k) kept += 2.0 * std::pow(k, -r);
  const double tail = 2.0 * std::pow(K, 1.0 - r) / (r - 1.0);
  return std::pow(kept + tail, d) - std::pow(kept, d);
}

struct BernoulliKernel {
  TrigPoly poly;
  /// Squared l2 mass of the truncated tail; empty when 2r <= 1.
  std::optional<double> l2_tail;
};

/// Bernoulli kernel F_r truncated to |k_j| <= K in d coordinates.
inline BernoulliKernel bernoulli(double r, int K, int d = 1) {
  if (!(r > 0.0)) throw DomainError("bernoulli: r must be positive");
  if (K < 1) throw DomainError("bernoulli: truncation must be >= 1");
  BernoulliKernel out{detail::isotropic_tensor(d, K, [r](int k) { return coeff1d::bernoulli(r, k); }), std::nullopt};
  if (2.0 * r > 1.0) out.l2_tail = bernoulli_l2_tail(r, K, d);
  return out;
}

/// prod_j max(1, |k_j|)^{-r}
inline double hull_weight(std::span<const int> k, double r) {
  double w = 1.0;
  for (int kj : k) {
    if (kj != 0) w *= std::pow(static_cast<double>(std::abs(kj)), -r);
  }
  return w;
}

struct KernelSpec {
  KernelKind kind = KernelKind::Dirichlet;
  /// Order j (Dirichlet/Fejer/ValleePoussin) or block level s.
  int order = 0;
  double r = 1.0;
  int dim = 1;
  int truncation = 1;
};

inline TrigPoly make_kernel(const KernelSpec& spec) {
  switch (spec.kind) {
    case KernelKind::Dirichlet: return dirichlet(spec.order, spec.dim);
    case KernelKind::Fejer: return fejer(spec.order, spec.dim);
    case KernelKind::ValleePoussin: return vallee_poussin(spec.order, spec.dim);
    case KernelKind::Block: return block_kernel(std::vector<int>(static_cast<std::size_t>(spec.dim), spec.order));
    case KernelKind::Bernoulli: return bernoulli(spec.r, spec.truncation, spec.dim).poly;
  }
  throw DomainError("make_kernel: unknown kind");
}

}  // namespace mixdisc
