#pragma once

// Uniform tensor grids on the torus and the FFT bridge between grid samples
// and TrigPoly coefficients.  Grid point i has coordinates 2*pi*i_j/n_j.

#include <fftw3.h>

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "mixdisc/trig_poly.hpp"

namespace mixdisc {

struct GridFunction {
  std::vector<int> sizes;
  std::vector<cplx> values;

  GridFunction() = default;
  GridFunction(std::vector<int> n, std::vector<cplx> v) : sizes(std::move(n)), values(std::move(v)) {
    if (sizes.empty()) throw DomainError("GridFunction: dimension must be positive");
    std::size_t total = 1;
    for (int s : sizes) {
      if (s < 1) throw DomainError("GridFunction: grid sizes must be >= 1");
      total *= static_cast<std::size_t>(s);
    }
    if (values.size() != total) throw DomainError("GridFunction: sample count does not match grid");
  }

  int dim() const { return static_cast<int>(sizes.size()); }

  /// Coordinates of grid point with flat index idx.
  std::vector<double> point(std::size_t idx) const {
    std::vector<double> x(sizes.size());
    for (std::size_t j = sizes.size(); j-- > 0;) {
      const auto n = static_cast<std::size_t>(sizes[j]);
      x[j] = kTwoPi * static_cast<double>(idx % n) / static_cast<double>(n);
      idx /= n;
    }
    return x;
  }
};

namespace detail {

inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

/// Unnormalized in-place DFT over a row-major array.  sign = FFTW_FORWARD
/// computes sum_x v(x) e^{-ik.x}, FFTW_BACKWARD the e^{+ik.x} sum.
inline void dft_inplace(std::vector<cplx>& data, const std::vector<int>& dims, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), ptr, ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

inline int positive_mod(long long k, int n) {
  long long r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace detail

/// Smallest integer >= n of the form 2^a 3^b 5^c.
inline int fft_friendly_size(int n) {
  for (int m = std::max(n, 1);; ++m) {
    int t = m;
    for (int p : {2, 3, 5}) {
      while (t % p == 0) t /= p;
    }
    if (t == 1) return m;
  }
}

/// Samples f on the grid of the given sizes.  Coarse grids are allowed here:
/// frequencies fold onto their residues, which is still exact sampling.
inline GridFunction sample_on_grid(const TrigPoly& f, std::vector<int> sizes) {
  if (static_cast<int>(sizes.size()) != f.dim()) throw DomainError("sample_on_grid: dimension mismatch");
  std::size_t total = 1;
  for (int s : sizes) {
    if (s < 1) throw DomainError("sample_on_grid: grid sizes must be >= 1");
    total *= static_cast<std::size_t>(s);
  }
  std::vector<cplx> data(total, cplx{});
  f.for_each([&](std::span<const int> k, cplx c) {
    if (c == cplx{}) return;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k.size(); ++j) idx = idx * static_cast<std::size_t>(sizes[j]) + detail::positive_mod(k[j], sizes[j]);
    data[idx] += c;
  });
  detail::dft_inplace(data, sizes, FFTW_BACKWARD);
  return GridFunction(std::move(sizes), std::move(data));
}

/// Discrete Fourier coefficients of grid samples, normalized by the grid size
/// so that coefficient 0 is the grid mean.  Requires n_j >= 2 N_j + 1.
inline TrigPoly forward_coeffs(const GridFunction& g, std::vector<int> box) {
  if (static_cast<int>(box.size()) != g.dim()) throw DomainError("forward_coeffs: dimension mismatch");
  for (std::size_t j = 0; j < box.size(); ++j) {
    if (g.sizes[j] < 2 * box[j] + 1) {
      throw AliasingError("forward_coeffs: grid size " + std::to_string(g.sizes[j]) + " in coordinate " +
                          std::to_string(j) + " cannot resolve degree " + std::to_string(box[j]));
    }
  }
  std::vector<cplx> data = g.values;
  detail::dft_inplace(data, g.sizes, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(data.size());
  TrigPoly f(std::move(box));
  auto out = f.coeffs();
  std::size_t pos = 0;
  f.for_each([&](std::span<const int> k, cplx) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k.size(); ++j) idx = idx * static_cast<std::size_t>(g.sizes[j]) + detail::positive_mod(k[j], g.sizes[j]);
    out[pos++] = data[idx] * scale;
  });
  return f;
}

/// Exact product f*g (coefficient convolution) computed through a grid that
/// resolves the product's degree.
inline TrigPoly multiply(const TrigPoly& f, const TrigPoly& g) {
  if (f.dim() != g.dim()) throw DomainError("multiply: dimension mismatch");
  std::vector<int> box(static_cast<std::size_t>(f.dim()));
  std::vector<int> sizes(box.size());
  for (std::size_t j = 0; j < box.size(); ++j) {
    box[j] = f.box()[j] + g.box()[j];
    sizes[j] = fft_friendly_size(2 * box[j] + 1);
  }
  GridFunction gf = sample_on_grid(f, sizes);
  const GridFunction gg = sample_on_grid(g, sizes);
  for (std::size_t i = 0; i < gf.values.size(); ++i) gf.values[i] *= gg.values[i];
  return forward_coeffs(gf, std::move(box));
}

/// |f|^2 = f * conj(f) as a polynomial.
inline TrigPoly abs_squared(const TrigPoly& f) {
  std::vector<int> box(static_cast<std::size_t>(f.dim()));
  std::vector<int> sizes(box.size());
  for (std::size_t j = 0; j < box.size(); ++j) {
    box[j] = 2 * f.box()[j];
    sizes[j] = fft_friendly_size(2 * box[j] + 1);
  }
  GridFunction gf = sample_on_grid(f, sizes);
  for (cplx& v : gf.values) v = std::norm(v);
  return forward_coeffs(gf, std::move(box));
}

}  // namespace mixdisc
