#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mixdisc/grid.hpp"
#include "mixdisc/kernels.hpp"
#include "mixdisc/norms.hpp"
#include "test_util.hpp"

namespace mixdisc {
namespace {

TEST(Fejer, CoefficientsOfOrderThree) {
  const TrigPoly k = fejer(3);
  ASSERT_EQ(k.box(), std::vector<int>{2});
  EXPECT_DOUBLE_EQ(k.coeff({0}).real(), 1.0);
  EXPECT_DOUBLE_EQ(k.coeff({1}).real(), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(k.coeff({-2}).real(), 1.0 / 3.0);
  EXPECT_EQ(k.coeff({3}), cplx{});
}

TEST(Fejer, IsMeanOfDirichletKernels) {
  for (int j = 1; j <= 12; ++j) {
    TrigPoly mean(std::vector<int>{j - 1});
    for (int l = 0; l < j; ++l) mean += dirichlet(l).reboxed({j - 1});
    mean *= 1.0 / j;
    EXPECT_EQ(mean.box(), fejer(j).box());
    for (std::size_t i = 0; i < mean.size(); ++i) EXPECT_NEAR(std::abs(mean.coeffs()[i] - fejer(j).coeffs()[i]), 0.0, 1e-15);
  }
}

TEST(Fejer, ClosedFormAgreesWithCoefficients) {
  // K_j(x) = (1/j) (sin(jx/2) / sin(x/2))^2
  for (int j : {1, 2, 5, 17}) {
    const TrigPoly k = fejer(j);
    for (double x : {0.3, 1.1, 2.9, 4.4}) {
      const double closed = std::pow(std::sin(j * x / 2) / std::sin(x / 2), 2) / j;
      EXPECT_NEAR(evaluate(k, std::vector<double>{x}).real(), closed, 1e-12);
    }
  }
}

TEST(Fejer, SupAndL1Norms) {
  for (int j = 1; j <= 32; ++j) {
    EXPECT_NEAR(lp_norm(fejer(j), kInfinity).value, static_cast<double>(j), 1e-10 * j);
    EXPECT_NEAR(lp_norm(fejer(j), 1.0).value, 1.0, 1e-6);
  }
}

TEST(ValleePoussin, IdentityWithFejer) {
  for (int j = 1; j <= 40; ++j) {
    const std::vector<int> box{2 * j - 1};
    const TrigPoly rhs = 2.0 * fejer(2 * j).reboxed(box) - fejer(j).reboxed(box);
    EXPECT_EQ(vallee_poussin(j).box(), rhs.box());
    for (std::size_t i = 0; i < rhs.size(); ++i) EXPECT_NEAR(std::abs(vallee_poussin(j).coeffs()[i] - rhs.coeffs()[i]), 0.0, 1e-14);
  }
}

TEST(ValleePoussin, ReproducesLowFrequencies) {
  const TrigPoly v = vallee_poussin(8);
  for (int k = -8; k <= 8; ++k) EXPECT_DOUBLE_EQ(v.coeff({k}).real(), 1.0);
  EXPECT_DOUBLE_EQ(v.coeff({12}).real(), 0.5);
  EXPECT_DOUBLE_EQ(v.coeff({15}).real(), 1.0 / 8.0);
}

TEST(Block, FirstLevels) {
  EXPECT_EQ(block_kernel(0).box(), std::vector<int>{0});
  EXPECT_DOUBLE_EQ(block_kernel(0).coeff({0}).real(), 1.0);
  const TrigPoly a1 = block_kernel(1);
  EXPECT_DOUBLE_EQ(a1.coeff({0}).real(), 0.0);
  EXPECT_DOUBLE_EQ(a1.coeff({1}).real(), 1.0);
  EXPECT_DOUBLE_EQ(a1.coeff({-1}).real(), 1.0);
}

TEST(Block, SupportBetweenDyadicLevels) {
  for (int s = 2; s <= 12; ++s) {
    const TrigPoly a = block_kernel(s);
    EXPECT_EQ(a.box(), std::vector<int>{(1 << s) - 1});
    a.for_each([&](std::span<const int> k, cplx c) {
      const int ak = std::abs(k[0]);
      if (ak <= (1 << (s - 2))) EXPECT_EQ(c, cplx{}) << "s=" << s << " k=" << k[0];
      else EXPECT_GT(c.real(), 0.0) << "s=" << s << " k=" << k[0];
    });
  }
}

TEST(Block, PartitionOfUnity) {
  // sum_{s<=S} A_s = V_{2^{S-1}} for S >= 2: equals 1 on |k| <= 2^{S-1}.
  for (int S = 2; S <= 9; ++S) {
    const std::vector<int> box{(1 << S) - 1};
    TrigPoly sum(box);
    for (int s = 0; s <= S; ++s) sum += block_kernel(s).reboxed(box);
    const TrigPoly v = vallee_poussin(1 << (S - 1));
    for (std::size_t i = 0; i < sum.size(); ++i) EXPECT_NEAR(std::abs(sum.coeffs()[i] - v.coeffs()[i]), 0.0, 1e-14);
  }
}

TEST(Tensor, ProductOfUnivariateValues) {
  Rng rng(3);
  const TrigPoly k2 = fejer(4, 2);
  const TrigPoly k1 = fejer(4);
  for (int t = 0; t < 10; ++t) {
    const auto x = testing::random_point(2, rng);
    const cplx lhs = evaluate(k2, x);
    const cplx rhs = evaluate(k1, std::vector<double>{x[0]}) * evaluate(k1, std::vector<double>{x[1]});
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
  }
}

TEST(Bernoulli, CoefficientsAndTail) {
  const double r = 1.5;
  const BernoulliKernel b = bernoulli(r, 16);
  EXPECT_DOUBLE_EQ(b.poly.coeff({0}).real(), 1.0);
  const cplx c = b.poly.coeff({4});
  EXPECT_NEAR(std::abs(c), std::pow(4.0, -r), 1e-15);
  EXPECT_NEAR(std::arg(c), -r * std::numbers::pi / 2, 1e-14);
  EXPECT_NEAR(std::abs(b.poly.coeff({-4}) - std::conj(c)), 0.0, 1e-15);
  ASSERT_TRUE(b.l2_tail.has_value());
  // the l2 tail bounds the mass sum_{|k|>16} |k|^{-3}, computed far out
  double mass = 0.0;
  for (int k = 17; k < 2000000; ++k) mass += 2.0 * std::pow(k, -2 * r);
  EXPECT_GE(*b.l2_tail, mass);
  EXPECT_LE(*b.l2_tail, 1.2 * mass);
}

TEST(Bernoulli, TailDivergesForSmallR) {
  EXPECT_FALSE(bernoulli(0.5, 8).l2_tail.has_value());
  EXPECT_THROW(bernoulli_l2_tail(0.4, 8, 1), DivergenceError);
  EXPECT_THROW(bernoulli_sup_tail(1.0, 8, 1), DivergenceError);
  EXPECT_THROW(bernoulli(-1.0, 8), DomainError);
}

TEST(Bernoulli, MultivariateTailComposes) {
  const double r = 1.0;
  const int K = 8;
  double kept = 1.0;
  for (int k = 1; k <= K; ++k) kept += 2.0 * std::pow(k, -2 * r);
  const double t1 = bernoulli_l2_tail(r, K, 1);
  EXPECT_NEAR(bernoulli_l2_tail(r, K, 2), (kept + t1) * (kept + t1) - kept * kept, 1e-12);
}

TEST(Kernels, RejectBadOrders) {
  EXPECT_THROW(fejer(0), DomainError);
  EXPECT_THROW(vallee_poussin(0), DomainError);
  EXPECT_THROW(dirichlet(-1), DomainError);
  EXPECT_THROW(block_kernel(-1), DomainError);
  EXPECT_THROW(fejer(2, 0), DomainError);
}

TEST(Kernels, MakeKernelDispatches) {
  KernelSpec spec;
  spec.kind = KernelKind::ValleePoussin;
  spec.order = 3;
  spec.dim = 2;
  EXPECT_EQ(make_kernel(spec), vallee_poussin(3, 2));
  spec.kind = KernelKind::Block;
  EXPECT_EQ(make_kernel(spec), block_kernel({3, 3}));
}

TEST(HullWeight, ProductOfPowers) {
  const std::vector<int> k{0, -4, 2};
  EXPECT_DOUBLE_EQ(hull_weight(k, 1.0), 1.0 / 8.0);
}

}  // namespace
}  // namespace mixdisc
