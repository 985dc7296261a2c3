#pragma once

// Dyadic block analysis of trigonometric polynomials: block projections
// A_s(f) = f * A_s, the block seminorm sup_s 2^{r|s|_1} ||A_s(f)||_p, mixed
// differences, a sampler for the unit ball of that seminorm and the
// quasi-algebra ratio for products.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mixdisc/grid.hpp"
#include "mixdisc/kernels.hpp"
#include "mixdisc/norms.hpp"
#include "mixdisc/random.hpp"

namespace mixdisc {

struct BlockIndex {
  std::vector<int> s;

  int l1() const { return std::accumulate(s.begin(), s.end(), 0); }
  int dim() const { return static_cast<int>(s.size()); }
  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

enum class ClassFamily { SobolevW, HoelderH, FourierHull };

inline std::string to_string(ClassFamily f) {
  switch (f) {
    case ClassFamily::SobolevW: return "sobolev";
    case ClassFamily::HoelderH: return "hoelder";
    case ClassFamily::FourierHull: return "fourier_hull";
  }
  return "?";
}

inline ClassFamily parse_family(const std::string& name) {
  if (name == "sobolev" || name == "W") return ClassFamily::SobolevW;
  if (name == "hoelder" || name == "H") return ClassFamily::HoelderH;
  if (name == "fourier_hull" || name == "hull" || name == "E") return ClassFamily::FourierHull;
  throw DomainError("unknown class family '" + name + "'");
}

/// Function-class descriptor.  M = 0 means the uniform bound is unknown.
struct ClassSpec {
  ClassFamily family = ClassFamily::HoelderH;
  double r = 1.0;
  double p = 2.0;
  double B = 1.0;
  double M = 0.0;

  void validate() const {
    if (!(r > 0.0)) throw DomainError("ClassSpec: r must be positive");
    if (!(p >= 1.0)) throw DomainError("ClassSpec: p must be in [1, inf]");
    if (!(B > 0.0)) throw DomainError("ClassSpec: B must be positive");
    if (!(M >= 0.0)) throw DomainError("ClassSpec: M must be nonnegative");
  }
  /// r > 1/p: members are continuous and uniformly bounded.
  bool embeds_in_continuous() const { return r > 1.0 / p; }
};

/// Highest block level whose kernel is nonzero somewhere on |k| <= degree.
inline int max_block_level(int degree) {
  if (degree == 0) return 0;
  int s = 1;
  while ((1 << (s - 1)) < degree) ++s;  // block s+1 starts above 2^{s-1}
  return s;
}

/// All block indices with 0 <= s_j <= cap[j], in lexicographic order.
inline std::vector<BlockIndex> enumerate_blocks(const std::vector<int>& cap) {
  std::vector<BlockIndex> out;
  std::vector<int> s(cap.size(), 0);
  while (true) {
    out.push_back({s});
    std::size_t j = s.size();
    while (j-- > 0) {
      if (++s[j] <= cap[j]) break;
      s[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

/// Every block index whose kernel meets the box, in lexicographic order.
inline std::vector<BlockIndex> blocks_meeting(const std::vector<int>& box) {
  std::vector<int> cap(box.size());
  for (std::size_t j = 0; j < box.size(); ++j) cap[j] = max_block_level(box[j]);
  return enumerate_blocks(cap);
}

/// A_s(f): coefficientwise product with the block kernel, on the box where it can be nonzero.
inline TrigPoly block_project(const TrigPoly& f, const BlockIndex& s) {
  if (s.dim() != f.dim()) throw DomainError("block_project: dimension mismatch");
  std::vector<int> box(s.s.size());
  for (std::size_t j = 0; j < box.size(); ++j) box[j] = std::min(f.box()[j], coeff1d::block_degree(s.s[j]));
  TrigPoly out(box);
  auto c = out.coeffs();
  std::size_t idx = 0;
  out.for_each([&](std::span<const int> k, cplx) {
    double m = 1.0;
    for (std::size_t j = 0; j < k.size() && m != 0.0; ++j) m *= coeff1d::block(s.s[j], k[j]);
    c[idx++] = m == 0.0 ? cplx{} : f.coeffs()[f.flat_index(k)] * m;
  });
  return out;
}

/// ||A_s(f)||_2 by Parseval without materializing the projection.
inline double block_l2_norm(const TrigPoly& f, const BlockIndex& s) {
  double acc = 0.0;
  f.for_each([&](std::span<const int> k, cplx c) {
    if (c == cplx{}) return;
    double m = 1.0;
    for (std::size_t j = 0; j < k.size() && m != 0.0; ++j) m *= coeff1d::block(s.s[j], k[j]);
    acc += std::norm(c) * m * m;
  });
  return std::sqrt(acc);
}

inline double block_lp_norm(const TrigPoly& f, const BlockIndex& s, double p, int oversample = 8) {
  if (p == 2.0) return block_l2_norm(f, s);
  return lp_norm(block_project(f, s), p, oversample).value;
}

struct BlockNorm {
  BlockIndex s;
  double norm = 0.0;
  /// 2^{r |s|_1} * norm
  double scaled = 0.0;
};

inline std::vector<BlockNorm> block_norms(const TrigPoly& f, double r, double p, int oversample = 8) {
  std::vector<BlockNorm> out;
  for (const BlockIndex& s : blocks_meeting(f.box())) {
    const double n = block_lp_norm(f, s, p, oversample);
    out.push_back({s, n, std::exp2(r * s.l1()) * n});
  }
  return out;
}

/// sup_s 2^{r |s|_1} ||A_s(f)||_p over the blocks meeting the box of f.
/// f belongs to the class ball of radius B iff this is <= B.
inline double h_seminorm(const TrigPoly& f, double r, double p, int oversample = 8) {
  double sup = 0.0;
  for (const BlockNorm& b : block_norms(f, r, p, oversample)) sup = std::max(sup, b.scaled);
  return sup;
}

inline int default_difference_order(double r) { return static_cast<int>(std::floor(r)) + 1; }

/// l-th mixed difference with step t_j in each coordinate j of `coords`:
/// c(k) <- c(k) * prod_{j in coords} (e^{i k_j t_j} - 1)^l.
inline TrigPoly mixed_difference(const TrigPoly& f, const std::vector<double>& t, int l, const std::vector<int>& coords) {
  if (l < 1) throw DomainError("mixed_difference: order must be >= 1");
  if (static_cast<int>(t.size()) != f.dim()) throw DomainError("mixed_difference: step dimension mismatch");
  for (int j : coords) {
    if (j < 0 || j >= f.dim()) throw DomainError("mixed_difference: coordinate out of range");
  }
  return apply_multiplier(f, [&](std::span<const int> k) {
    cplx m = 1.0;
    for (int j : coords) m *= std::pow(std::polar(1.0, k[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(j)]) - 1.0, l);
    return m;
  });
}

namespace detail {

/// Frequencies assigned to level s in one coordinate: {0} or 2^{s-1} <= |k| < 2^s.
inline std::vector<int> level_template(int s) {
  if (s == 0) return {0};
  std::vector<int> out;
  for (int k = -(1 << s) + 1; k <= -(1 << (s - 1)); ++k) out.push_back(k);
  for (int k = 1 << (s - 1); k < (1 << s); ++k) out.push_back(k);
  return out;
}

inline bool is_canonical_half(std::span<const int> k) {
  for (int v : k) {
    if (v != 0) return v > 0;
  }
  return true;
}

}  // namespace detail

/// Random real polynomial in the H^r_p unit ball:
///   f = sum_{|s|_inf <= S} 2^{-r |s|_1} g_s,
/// where g_s carries random phases from {1, i, -1, -i} on the dyadic shell of
/// level s and has ||g_s||_p = 1.  The sum is finally divided by its block
/// seminorm whenever that exceeds 1, so the result lies in the ball.
inline TrigPoly sample_h_ball(const ClassSpec& spec, int dim, int S, std::uint64_t seed, int oversample = 8) {
  spec.validate();
  if (spec.family != ClassFamily::HoelderH) throw DomainError("sample_h_ball: class family must be hoelder");
  if (!spec.embeds_in_continuous()) throw DomainError("sample_h_ball: requires r > 1/p");
  if (dim < 1) throw DomainError("sample_h_ball: dimension must be positive");
  if (S < 0 || S > 12) throw DomainError("sample_h_ball: block cap must be in [0, 12]");

  Rng rng(seed);
  const int degree = coeff1d::block_degree(S);
  TrigPoly f(std::vector<int>(static_cast<std::size_t>(dim), degree));
  static constexpr cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  for (const BlockIndex& s : enumerate_blocks(std::vector<int>(static_cast<std::size_t>(dim), S))) {
    std::vector<std::vector<int>> templ(static_cast<std::size_t>(dim));
    std::vector<int> sub_box(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      templ[static_cast<std::size_t>(j)] = detail::level_template(s.s[static_cast<std::size_t>(j)]);
      sub_box[static_cast<std::size_t>(j)] = coeff1d::block_degree(s.s[static_cast<std::size_t>(j)]);
    }
    TrigPoly g(sub_box);
    std::vector<std::size_t> pos(static_cast<std::size_t>(dim), 0);
    std::vector<int> k(static_cast<std::size_t>(dim)), neg(static_cast<std::size_t>(dim));
    while (true) {
      for (int j = 0; j < dim; ++j) {
        k[static_cast<std::size_t>(j)] = templ[static_cast<std::size_t>(j)][pos[static_cast<std::size_t>(j)]];
        neg[static_cast<std::size_t>(j)] = -k[static_cast<std::size_t>(j)];
      }
      if (detail::is_canonical_half(k)) {
        const std::uint64_t draw = rng();
        cplx c = kPhases[draw & 3U];
        if (k == neg) c = (draw & 1U) ? 1.0 : -1.0;
        g.at(k) = c;
        g.at(neg) = std::conj(c);
      }
      int j = dim - 1;
      for (; j >= 0; --j) {
        if (++pos[static_cast<std::size_t>(j)] < templ[static_cast<std::size_t>(j)].size()) break;
        pos[static_cast<std::size_t>(j)] = 0;
      }
      if (j < 0) break;
    }
    const double norm = lp_norm(g, spec.p, oversample).value;
    g *= std::exp2(-spec.r * s.l1()) / norm;
    f += g;
  }
  const double h = h_seminorm(f, spec.r, spec.p, oversample);
  if (h > 1.0) f *= 1.0 / h;
  return f;
}

/// h(fg) / (h(f) h(g)) for the block seminorm with parameters (r, p).
inline double quasi_algebra_ratio(const TrigPoly& f, const TrigPoly& g, double r, double p, int oversample = 8) {
  if (!f.is_real_valued(1e-12) || !g.is_real_valued(1e-12)) {
    throw DomainError("quasi_algebra_ratio: arguments must be real-valued");
  }
  const double hf = h_seminorm(f, r, p, oversample);
  const double hg = h_seminorm(g, r, p, oversample);
  if (hf == 0.0 || hg == 0.0) throw UndefinedRatioError("quasi_algebra_ratio: zero seminorm in denominator");
  return h_seminorm(multiply(f, g), r, p, oversample) / (hf * hg);
}

}  // namespace mixdisc
