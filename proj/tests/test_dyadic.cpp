#include <gtest/gtest.h>

#include <cmath>

#include "mixdisc/dyadic.hpp"
#include "test_util.hpp"

namespace mixdisc {
namespace {

using testing::naive_eval;
using testing::random_point;
using testing::random_poly;

TrigPoly sum_of_blocks(const TrigPoly& f) {
  TrigPoly sum(f.box());
  for (const BlockIndex& s : blocks_meeting(f.box())) sum += block_project(f, s).reboxed(f.box());
  return sum;
}

TEST(Blocks, MaxLevel) {
  EXPECT_EQ(max_block_level(0), 0);
  EXPECT_EQ(max_block_level(1), 1);
  EXPECT_EQ(max_block_level(2), 2);
  EXPECT_EQ(max_block_level(3), 3);
  EXPECT_EQ(max_block_level(4), 3);
  EXPECT_EQ(max_block_level(5), 4);
  EXPECT_EQ(max_block_level(64), 7);
}

TEST(Blocks, EnumerationIsLexicographic) {
  const auto b = enumerate_blocks({1, 2});
  ASSERT_EQ(b.size(), 6U);
  EXPECT_EQ(b.front().s, (std::vector<int>{0, 0}));
  EXPECT_EQ(b[1].s, (std::vector<int>{0, 1}));
  EXPECT_EQ(b.back().s, (std::vector<int>{1, 2}));
  EXPECT_EQ(b.back().l1(), 3);
}

TEST(Blocks, ReconstructRandomPolynomials) {
  for (int d = 1; d <= 3; ++d) {
    for (int S = 3; S <= 6; ++S) {
      const int N = 1 << (S - 1);
      std::vector<int> box(static_cast<std::size_t>(d), d == 3 ? std::min(N, 8) : N);
      const TrigPoly f = random_poly(box, static_cast<std::uint64_t>(10 * d + S));
      const TrigPoly sum = sum_of_blocks(f);
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(std::abs(sum.coeffs()[i] - f.coeffs()[i]), 0.0, 1e-12);
    }
  }
}

TEST(Blocks, L2NormMatchesProjection) {
  const TrigPoly f = random_poly({9, 5}, 4);
  for (const BlockIndex& s : blocks_meeting(f.box())) {
    EXPECT_NEAR(block_l2_norm(f, s), std::sqrt(block_project(f, s).l2_norm_squared()), 1e-12);
    EXPECT_NEAR(block_lp_norm(f, s, 2.0), lp_norm(block_project(f, s), 2.0).value, 1e-12);
  }
}

TEST(Seminorm, ConstantAndSingleExponential) {
  EXPECT_DOUBLE_EQ(h_seminorm(TrigPoly::constant(2, 1.0), 1.5, 2.0), 1.0);
  // e^{ix} lives only in block 1
  const TrigPoly e = TrigPoly::monomial(std::vector<int>{1});
  EXPECT_NEAR(h_seminorm(e, 1.5, 2.0), std::exp2(1.5), 1e-12);
  EXPECT_NEAR(h_seminorm(e, 1.5, 1.0), std::exp2(1.5), 1e-9);
}

TEST(Seminorm, HomogeneousAndSubadditive) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const TrigPoly f = random_poly({6, 6}, seed, true), g = random_poly({6, 6}, 100 + seed, true);
    for (double p : {1.0, 2.0, 3.0}) {
      const double hf = h_seminorm(f, 1.2, p), hg = h_seminorm(g, 1.2, p);
      EXPECT_NEAR(h_seminorm(-2.5 * f, 1.2, p), 2.5 * hf, 1e-9 * hf);
      EXPECT_LE(h_seminorm(f + g, 1.2, p), (hf + hg) * (1.0 + 1e-9));
    }
  }
}

TEST(MixedDifference, MatchesShiftedEvaluations) {
  Rng rng(5);
  const TrigPoly f = random_poly({4, 3}, 6);
  const std::vector<double> t{0.37, -1.2};
  const TrigPoly d1 = mixed_difference(f, t, 1, {0});
  const TrigPoly d2 = mixed_difference(f, t, 2, {0, 1});
  for (int n = 0; n < 10; ++n) {
    const auto x = random_point(2, rng);
    auto at = [&](double a, double b) { return naive_eval(f, {x[0] + a * t[0], x[1] + b * t[1]}); };
    EXPECT_NEAR(std::abs(evaluate(d1, x) - (at(1, 0) - at(0, 0))), 0.0, 1e-11);
    // second difference in both coordinates: product of (1 - 2 S + S^2) operators
    cplx expect{};
    const double w[3] = {1.0, -2.0, 1.0};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) expect += w[2 - a] * w[2 - b] * at(a, b);
    }
    EXPECT_NEAR(std::abs(evaluate(d2, x) - expect), 0.0, 1e-10);
  }
  EXPECT_EQ(default_difference_order(1.5), 2);
  EXPECT_THROW(mixed_difference(f, t, 0, {0}), DomainError);
  EXPECT_THROW(mixed_difference(f, t, 1, {2}), DomainError);
}

TEST(Sampler, LandsInTheBallAndIsReal) {
  ClassSpec spec{ClassFamily::HoelderH, 1.5, 2.0};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const TrigPoly f = sample_h_ball(spec, 2, 4, seed);
    EXPECT_TRUE(f.is_real_valued(1e-14));
    EXPECT_LE(h_seminorm(f, spec.r, spec.p), 1.0 + 1e-12);
    EXPECT_GT(h_seminorm(f, spec.r, spec.p), 0.1);
    EXPECT_EQ(f.box(), (std::vector<int>{15, 15}));
  }
  spec.p = 1.0;
  const TrigPoly g = sample_h_ball(spec, 1, 5, 3);
  EXPECT_LE(h_seminorm(g, spec.r, spec.p), 1.0 + 1e-9);
}

TEST(Sampler, DeterministicPerSeed) {
  const ClassSpec spec{ClassFamily::HoelderH, 1.5, 2.0};
  EXPECT_EQ(sample_h_ball(spec, 2, 3, 42), sample_h_ball(spec, 2, 3, 42));
  EXPECT_NE(sample_h_ball(spec, 2, 3, 42), sample_h_ball(spec, 2, 3, 43));
}

TEST(Sampler, RejectsInvalidClasses) {
  EXPECT_THROW(sample_h_ball({ClassFamily::SobolevW, 1.5, 2.0}, 2, 3, 1), DomainError);
  EXPECT_THROW(sample_h_ball({ClassFamily::HoelderH, 0.5, 2.0}, 2, 3, 1), DomainError);
  EXPECT_THROW(sample_h_ball({ClassFamily::HoelderH, 1.5, 2.0}, 2, 13, 1), DomainError);
  EXPECT_THROW(sample_h_ball({ClassFamily::HoelderH, 1.5, 0.5}, 2, 3, 1), DomainError);
}

TEST(QuasiAlgebra, RatioIsFiniteForRealPolynomials) {
  const TrigPoly f = random_poly({4, 4}, 1, true), g = random_poly({4, 4}, 2, true);
  const double q = quasi_algebra_ratio(f, g, 1.5, 2.0);
  EXPECT_TRUE(std::isfinite(q));
  EXPECT_GT(q, 0.0);
  // constants are units: h(c g) = |c| h(g) and h(c) = |c|
  const TrigPoly two = TrigPoly::constant(2, 2.0);
  EXPECT_NEAR(quasi_algebra_ratio(two, g, 1.5, 2.0), 1.0, 1e-12);
}

TEST(QuasiAlgebra, Preconditions) {
  const TrigPoly g = random_poly({2, 2}, 2, true);
  EXPECT_THROW(quasi_algebra_ratio(TrigPoly({2, 2}), g, 1.5, 2.0), UndefinedRatioError);
  EXPECT_THROW(quasi_algebra_ratio(random_poly({2, 2}, 3), g, 1.5, 2.0), DomainError);
}

TEST(ClassSpecType, ParseAndValidate) {
  EXPECT_EQ(parse_family("sobolev"), ClassFamily::SobolevW);
  EXPECT_EQ(parse_family("hoelder"), ClassFamily::HoelderH);
  EXPECT_EQ(parse_family("fourier_hull"), ClassFamily::FourierHull);
  EXPECT_THROW(parse_family("besov"), DomainError);
  EXPECT_THROW((ClassSpec{ClassFamily::HoelderH, -1.0}.validate()), DomainError);
  EXPECT_TRUE((ClassSpec{ClassFamily::HoelderH, 0.6, 2.0}.embeds_in_continuous()));
  EXPECT_FALSE((ClassSpec{ClassFamily::HoelderH, 0.5, 2.0}.embeds_in_continuous()));
}

}  // namespace
}  // namespace mixdisc
