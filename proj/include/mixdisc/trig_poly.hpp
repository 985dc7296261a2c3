#pragma once

// Multivariate trigonometric polynomials on the torus [0, 2*pi)^d with the
// normalized measure dx / (2*pi)^d.  Coefficients are stored densely over a
// box |k_j| <= N_j, row-major with the last coordinate varying fastest.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixdisc/errors.hpp"

namespace mixdisc {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A finite set of points in the torus, stored as a flat row-major array.
struct PointSet {
  int dim = 0;
  std::vector<double> coords;

  PointSet() = default;
  PointSet(int d, std::vector<double> c) : dim(d), coords(std::move(c)) {
    if (d < 1 || coords.size() % static_cast<std::size_t>(d) != 0) {
      throw DomainError("PointSet: coordinate count is not a multiple of dim");
    }
  }

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const double> operator[](std::size_t i) const {
    return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
  }
};

class TrigPoly {
 public:
  TrigPoly() = default;

  /// Zero polynomial on the box |k_j| <= box[j].
  explicit TrigPoly(std::vector<int> box) : box_(std::move(box)) {
    if (box_.empty()) throw DomainError("TrigPoly: dimension must be positive");
    for (int n : box_) {
      if (n < 0) throw DomainError("TrigPoly: negative degree bound");
    }
    strides_.assign(box_.size(), 1);
    std::size_t total = 1;
    for (std::size_t j = box_.size(); j-- > 0;) {
      strides_[j] = total;
      total *= static_cast<std::size_t>(2 * box_[j] + 1);
    }
    coeffs_.assign(total, cplx{0.0, 0.0});
  }

  static TrigPoly constant(int dim, cplx value) {
    TrigPoly f(std::vector<int>(static_cast<std::size_t>(dim), 0));
    f.coeffs_[0] = value;
    return f;
  }

  /// value * e^{i k.x} on the smallest box holding k.
  static TrigPoly monomial(std::span<const int> k, cplx value = 1.0) {
    std::vector<int> box(k.size());
    std::transform(k.begin(), k.end(), box.begin(), [](int v) { return std::abs(v); });
    TrigPoly f(std::move(box));
    f.at(k) = value;
    return f;
  }

  int dim() const { return static_cast<int>(box_.size()); }
  const std::vector<int>& box() const { return box_; }
  int degree(int j) const { return box_[static_cast<std::size_t>(j)]; }
  int extent(int j) const { return 2 * box_[static_cast<std::size_t>(j)] + 1; }
  std::size_t size() const { return coeffs_.size(); }

  bool in_box(std::span<const int> k) const {
    if (k.size() != box_.size()) return false;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (std::abs(k[j]) > box_[j]) return false;
    }
    return true;
  }

  std::size_t flat_index(std::span<const int> k) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      idx += static_cast<std::size_t>(k[j] + box_[j]) * strides_[j];
    }
    return idx;
  }

  /// Frequency stored at a flat index.
  void frequency(std::size_t idx, std::span<int> k) const {
    for (std::size_t j = 0; j < box_.size(); ++j) {
      k[j] = static_cast<int>(idx / strides_[j]) - box_[j];
      idx %= strides_[j];
    }
  }

  /// Coefficient at k; zero outside the box.
  cplx coeff(std::span<const int> k) const {
    if (k.size() != box_.size()) throw DomainError("TrigPoly::coeff: dimension mismatch");
    return in_box(k) ? coeffs_[flat_index(k)] : cplx{};
  }
  cplx coeff(std::initializer_list<int> k) const {
    return coeff(std::span<const int>(k.begin(), k.size()));
  }

  cplx& at(std::span<const int> k) {
    if (!in_box(k)) throw DomainError("TrigPoly::at: frequency outside the box");
    return coeffs_[flat_index(k)];
  }
  cplx& at(std::initializer_list<int> k) { return at(std::span<const int>(k.begin(), k.size())); }

  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }

  /// Calls fn(k, coefficient) for every stored frequency.
  template <class Fn>
  void for_each(Fn&& fn) const {
    std::vector<int> k(box_.size());
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
      frequency(idx, k);
      fn(std::span<const int>(k), coeffs_[idx]);
    }
  }

  /// Same polynomial re-expressed on another box; coefficients outside it are dropped.
  TrigPoly reboxed(std::vector<int> box) const {
    if (box.size() != box_.size()) throw DomainError("TrigPoly::reboxed: dimension mismatch");
    TrigPoly out(std::move(box));
    for_each([&](std::span<const int> k, cplx c) {
      if (c != cplx{} && out.in_box(k)) out.coeffs_[out.flat_index(k)] = c;
    });
    return out;
  }

  /// Smallest box containing every coefficient with |c| > tol.
  std::vector<int> support_box(double tol = 0.0) const {
    std::vector<int> sb(box_.size(), 0);
    for_each([&](std::span<const int> k, cplx c) {
      if (std::abs(c) > tol) {
        for (std::size_t j = 0; j < sb.size(); ++j) sb[j] = std::max(sb[j], std::abs(k[j]));
      }
    });
    return sb;
  }

  /// Conjugate symmetry coeff(-k) == conj(coeff(k)).
  bool is_real_valued(double tol = 1e-12) const {
    std::vector<int> neg(box_.size());
    bool ok = true;
    for_each([&](std::span<const int> k, cplx c) {
      for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -k[j];
      if (std::abs(coeffs_[flat_index(neg)] - std::conj(c)) > tol) ok = false;
    });
    return ok;
  }

  /// Squared L2 norm under the normalized measure (Parseval).
  double l2_norm_squared() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s += std::norm(c);
    return s;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  TrigPoly& operator*=(cplx s) {
    for (cplx& c : coeffs_) c *= s;
    return *this;
  }

  TrigPoly& operator+=(const TrigPoly& g) { return accumulate(g, 1.0); }
  TrigPoly& operator-=(const TrigPoly& g) { return accumulate(g, -1.0); }

  friend TrigPoly operator+(const TrigPoly& f, const TrigPoly& g) {
    TrigPoly out = f.reboxed(joint_box(f, g));
    out += g;
    return out;
  }
  friend TrigPoly operator-(const TrigPoly& f, const TrigPoly& g) {
    TrigPoly out = f.reboxed(joint_box(f, g));
    out -= g;
    return out;
  }
  friend TrigPoly operator*(cplx s, TrigPoly f) { return f *= s; }
  friend TrigPoly operator*(TrigPoly f, cplx s) { return f *= s; }

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  static std::vector<int> joint_box(const TrigPoly& f, const TrigPoly& g) {
    if (f.dim() != g.dim()) throw DomainError("TrigPoly: dimension mismatch");
    std::vector<int> b(f.box_.size());
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = std::max(f.box_[j], g.box_[j]);
    return b;
  }

  TrigPoly& accumulate(const TrigPoly& g, double sign) {
    if (g.dim() != dim()) throw DomainError("TrigPoly: dimension mismatch");
    if (box_ != joint_box(*this, g)) *this = reboxed(joint_box(*this, g));
    g.for_each([&](std::span<const int> k, cplx c) {
      if (c != cplx{}) coeffs_[flat_index(k)] += sign * c;
    });
    return *this;
  }

  std::vector<int> box_;
  std::vector<std::size_t> strides_;
  std::vector<cplx> coeffs_;
};

/// Point evaluation by axis-wise contraction; reuses its buffers across calls.
namespace detail {

/// sum_i a[i] * b[i] in plain real arithmetic, so the loop vectorizes
/// (std::complex products carry NaN-recovery branches).
inline cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

/// out[i] += p * b[i]
inline void axpy(cplx p, const cplx* b, cplx* out, std::size_t n) {
  const double pr = p.real(), pi = p.imag();
  auto* o = reinterpret_cast<double*>(out);
  const auto* v = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < n; ++i) {
    o[2 * i] += pr * v[2 * i] - pi * v[2 * i + 1];
    o[2 * i + 1] += pr * v[2 * i + 1] + pi * v[2 * i];
  }
}

}  // namespace detail

class Evaluator {
 public:
  explicit Evaluator(const TrigPoly& f) : f_(&f), tables_(static_cast<std::size_t>(f.dim())) {
    for (int j = 0; j < f.dim(); ++j) tables_[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(f.extent(j)));
  }

  cplx operator()(std::span<const double> x) {
    const int d = f_->dim();
    if (static_cast<int>(x.size()) != d) throw DomainError("evaluate: dimension mismatch");
    for (int j = 0; j < d; ++j) {
      auto& t = tables_[static_cast<std::size_t>(j)];
      const int n = f_->degree(j);
      for (int k = -n; k <= n; ++k) t[static_cast<std::size_t>(k + n)] = std::polar(1.0, k * x[static_cast<std::size_t>(j)]);
    }
    std::span<const cplx> cur = f_->coeffs();
    for (int j = d - 1; j >= 0; --j) {
      const auto& t = tables_[static_cast<std::size_t>(j)];
      const std::size_t n = t.size();
      const std::size_t outer = cur.size() / n;
      auto& next = (j % 2 == 0) ? buf_a_ : buf_b_;
      next.assign(outer, cplx{});
      for (std::size_t o = 0; o < outer; ++o) next[o] = detail::dot(cur.data() + o * n, t.data(), n);
      cur = next;
    }
    return cur[0];
  }

 private:
  const TrigPoly* f_;
  std::vector<std::vector<cplx>> tables_;
  std::vector<cplx> buf_a_, buf_b_;
};

inline cplx evaluate(const TrigPoly& f, std::span<const double> x) { return Evaluator(f)(x); }

inline std::vector<cplx> evaluate(const TrigPoly& f, const PointSet& points) {
  if (points.dim != f.dim()) throw DomainError("evaluate: dimension mismatch");
  Evaluator ev(f);
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = ev(points[i]);
  return out;
}

/// Coefficientwise (Hadamard) multiplier: c(k) <- c(k) * m(k).
template <class Multiplier>
TrigPoly apply_multiplier(const TrigPoly& f, Multiplier&& m) {
  TrigPoly out = f;
  auto out_coeffs = out.coeffs();
  std::size_t idx = 0;
  f.for_each([&](std::span<const int> k, cplx c) { out_coeffs[idx++] = c * m(k); });
  return out;
}

}  // namespace mixdisc
