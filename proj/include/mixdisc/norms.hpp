#pragma once

#include <cmath>
#include <limits>

#include "mixdisc/grid.hpp"

namespace mixdisc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct NormValue {
  double value = 0.0;
  /// true for the Parseval path; false for grid quadrature / grid maxima.
  bool exact = false;
};

/// Grid used for L_p quadrature of f: oversample * (N_j + 1) points per
/// coordinate, rounded up to an FFT-friendly size.
inline std::vector<int> quadrature_grid(const TrigPoly& f, int oversample) {
  std::vector<int> sizes(static_cast<std::size_t>(f.dim()));
  for (int j = 0; j < f.dim(); ++j) sizes[static_cast<std::size_t>(j)] = fft_friendly_size(oversample * (f.degree(j) + 1));
  return sizes;
}

/// L_p norm under the normalized measure.  p = 2 is exact (Parseval), p = inf
/// is the maximum over the oversampled grid, other p use a Riemann sum on it.
inline NormValue lp_norm(const TrigPoly& f, double p, int oversample = 8) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be >= 1");
  if (oversample < 2) throw DomainError("lp_norm: oversample must be >= 2");
  if (p == 2.0) return {std::sqrt(f.l2_norm_squared()), true};
  const GridFunction g = sample_on_grid(f, quadrature_grid(f, oversample));
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : g.values) m = std::max(m, std::abs(v));
    return {m, false};
  }
  double s = 0.0;
  for (const cplx& v : g.values) s += std::pow(std::abs(v), p);
  return {std::pow(s / static_cast<double>(g.values.size()), 1.0 / p), false};
}

}  // namespace mixdisc
