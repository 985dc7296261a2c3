#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mixdisc/cubature.hpp"
#include "test_util.hpp"

namespace mixdisc {
namespace {

using testing::random_poly;

/// Brute-force dual sum over |k_j| <= K by the congruence test.
double brute_dual_sum(const LatticeDescriptor& lat, double s, int K) {
  const int d = static_cast<int>(lat.generator.size());
  double acc = 0.0;
  std::vector<int> k(static_cast<std::size_t>(d), -K);
  while (true) {
    long long dot = 0;
    bool zero = true;
    for (int j = 0; j < d; ++j) {
      dot += static_cast<long long>(k[static_cast<std::size_t>(j)]) * lat.generator[static_cast<std::size_t>(j)];
      zero = zero && k[static_cast<std::size_t>(j)] == 0;
    }
    if (!zero && dot % lat.modulus == 0) acc += hull_weight(k, s);
    int j = d - 1;
    for (; j >= 0; --j) {
      if (++k[static_cast<std::size_t>(j)] <= K) break;
      k[static_cast<std::size_t>(j)] = -K;
    }
    if (j < 0) break;
  }
  return acc;
}

TEST(Fibonacci, Numbers) {
  EXPECT_EQ(fibonacci_number(0), 1);
  EXPECT_EQ(fibonacci_number(1), 1);
  EXPECT_EQ(fibonacci_number(6), 13);
  EXPECT_EQ(fibonacci_number(16), 1597);
  EXPECT_NO_THROW(fibonacci_number(90));
  EXPECT_THROW(fibonacci_number(92), RangeError);
  EXPECT_THROW(fibonacci_rule(1), DomainError);
}

TEST(Fibonacci, NodesOfB5) {
  const CubatureRule rule = fibonacci_rule(5);  // b_5 = 8, b_4 = 5
  ASSERT_EQ(rule.size(), 8U);
  for (std::size_t mu = 1; mu <= 8; ++mu) {
    const auto x = rule.nodes[mu - 1];
    EXPECT_NEAR(x[0], kTwoPi * static_cast<double>(mu % 8) / 8.0, 1e-15);
    EXPECT_NEAR(x[1], kTwoPi * static_cast<double>((mu * 5) % 8) / 8.0, 1e-15);
    EXPECT_DOUBLE_EQ(rule.weights[mu - 1], 1.0 / 8.0);
  }
  EXPECT_NO_THROW(validate(rule));
}

TEST(Lattice, ExponentialSumsAreDualIndicators) {
  for (int n = 4; n <= 10; ++n) {
    const CubatureRule rule = fibonacci_rule(n);
    const int K = 24;
    const TrigPoly G = exponential_sums(rule, K);
    G.for_each([&](std::span<const int> k, cplx g) {
      const double expect = is_dual(*rule.lattice, k) ? 1.0 : 0.0;
      EXPECT_NEAR(std::abs(g - expect), 0.0, 1e-12);
    });
    std::vector<int> k{3, -7};
    EXPECT_NEAR(std::abs(exponential_sum(rule, k) - G.coeff(k)), 0.0, 1e-12);
  }
}

TEST(Lattice, DualEnumerationMatchesCongruence) {
  const CubatureRule rule = korobov_rule(31, {1, 12, 7});
  const int K = 9;
  std::size_t brute = 0;
  const TrigPoly box(std::vector<int>{K, K, K});
  box.for_each([&](std::span<const int> k, cplx) { brute += is_dual(*rule.lattice, k) ? 1 : 0; });
  const auto duals = dual_lattice(rule, K);
  EXPECT_EQ(duals.size(), brute);
  for (const auto& k : duals) {
    long long dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += static_cast<long long>(k[j]) * rule.lattice->generator[j];
    EXPECT_EQ(dot % 31, 0);
  }
}

TEST(Lattice, FastRuleApplicationMatchesNodes) {
  const CubatureRule rule = korobov_rule(37, {1, 10});
  const TrigPoly f = random_poly({40, 40}, 3);
  EXPECT_NEAR(std::abs(apply_rule(rule, f) - apply_rule_nodes(rule, f)), 0.0, 1e-11);
}

TEST(Lattice, ValidateDetectsTamperedNodes) {
  CubatureRule rule = korobov_rule(13, {1, 5});
  rule.nodes.coords[3] += 0.1;
  EXPECT_THROW(validate(rule), DomainError);
}

TEST(WorstCase, SingleNodeSobolevR1) {
  // One node at 0 in d = 1: B * sqrt(2 zeta(2)) = pi / sqrt(3).
  const CubatureRule rule = point_rule(PointSet(1, {0.0}));
  const ErrorReport rep = worst_case_error(rule, {ClassFamily::SobolevW, 1.0, 2.0}, 1000);
  const double target = std::numbers::pi / std::sqrt(3.0);
  EXPECT_LE(rep.value, target);
  EXPECT_GE(rep.upper(), target);
  EXPECT_NEAR(rep.value, target, 1e-3);
  // the same node as a 1-point lattice goes through the closed form
  const ErrorReport closed = worst_case_error(korobov_rule(1, {0}), {ClassFamily::SobolevW, 1.0, 2.0});
  EXPECT_EQ(closed.method, ErrorMethod::ClosedFormDual);
  EXPECT_NEAR(closed.value, target, 1e-12);
}

TEST(WorstCase, ClosedFormMatchesBruteForce) {
  const LatticeDescriptor lat{21, {1, 8}};
  for (double s : {1.5, 2.0, 3.0}) {
    const double closed = lattice_dual_sum(lat, s);
    const int K = 800;
    const double brute = brute_dual_sum(lat, s, K);
    const double tail = weight_mass_outside_box(s, K, 2);
    EXPECT_GE(closed, brute - 1e-12);
    EXPECT_LE(closed, brute + tail + 1e-12);
  }
}

TEST(WorstCase, ThreePathsAgree) {
  const CubatureRule rule = korobov_rule(53, {1, 19, 30});
  const ClassSpec hull{ClassFamily::FourierHull, 2.0, 2.0};
  const ErrorReport closed = worst_case_error(rule, hull);
  const ErrorReport dual = worst_case_error(rule, hull, 40);
  CubatureRule plain = point_rule(rule.nodes);  // same nodes, no lattice descriptor
  const ErrorReport general = worst_case_error(plain, hull, 40);
  EXPECT_EQ(dual.method, ErrorMethod::TruncatedDual);
  EXPECT_EQ(general.method, ErrorMethod::TruncatedGeneral);
  EXPECT_NEAR(dual.value, general.value, 1e-9);
  EXPECT_GE(closed.value + closed.tail, dual.value);
  EXPECT_LE(closed.value, dual.upper());
}

TEST(WorstCase, ScalesWithRadius) {
  const CubatureRule rule = fibonacci_rule(9);
  ClassSpec spec{ClassFamily::SobolevW, 1.0, 2.0, 1.0};
  const double one = worst_case_error(rule, spec).value;
  spec.B = 3.0;
  EXPECT_NEAR(worst_case_error(rule, spec).value, 3.0 * one, 1e-12);
}

TEST(WorstCase, FibonacciDecreasesWithN) {
  const ClassSpec hull{ClassFamily::FourierHull, 1.5, 2.0};
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 6; n <= 16; ++n) {
    const double v = worst_case_error(fibonacci_rule(n), hull).value;
    EXPECT_LT(v, prev) << n;
    prev = v;
  }
}

TEST(WorstCase, Preconditions) {
  const CubatureRule rule = fibonacci_rule(6);
  EXPECT_THROW(worst_case_error(rule, {ClassFamily::HoelderH, 1.5, 2.0}), DomainError);
  EXPECT_THROW(worst_case_error(rule, {ClassFamily::FourierHull, 1.0, 2.0}), DivergenceError);
  EXPECT_THROW(worst_case_error(rule, {ClassFamily::SobolevW, 0.5, 2.0}), DivergenceError);
  EXPECT_THROW(worst_case_error(rule, {ClassFamily::SobolevW, 1.0, 3.0}), DomainError);
}

TEST(Cbc, MatchesExhaustiveSearchInTwoDimensions) {
  for (std::int64_t m : {5, 7, 11, 13}) {
    const CbcResult cbc = cbc_search(m, 2, 1.5);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t a = 1; a < m; ++a) best = std::min(best, lattice_dual_sum({m, {1, a}}, 1.5));
    EXPECT_LE(cbc.dual_sum, best * (1.0 + 1e-12)) << m;
    EXPECT_NEAR(cbc.dual_sum, lattice_dual_sum({m, cbc.generator}, 1.5), 1e-12);
  }
}

TEST(Cbc, Preconditions) {
  EXPECT_THROW(cbc_search(12, 2, 1.5), DomainError);
  EXPECT_THROW(cbc_search(13, 2, 1.0), DivergenceError);
  EXPECT_TRUE(is_prime(1009));
  EXPECT_FALSE(is_prime(1));
}

TEST(MonteCarlo, HoeffdingAndDeterminism) {
  EXPECT_NEAR(hoeffding_bound(200, 0.2, 1.0), 2.0 * std::exp(-1.0), 1e-15);
  TrigPoly f({1});
  f.at({1}) = 0.5;
  f.at({-1}) = 0.5;  // cos x
  const auto a = mc_baseline(f, 50, 200, {0.1}, 1.0, 9);
  const auto b = mc_baseline(f, 50, 200, {0.1}, 1.0, 9);
  EXPECT_EQ(a.errors, b.errors);
  // E|mean| is about sqrt(2/pi) * sqrt(1/2) / sqrt(m)
  EXPECT_NEAR(a.mean_error, std::sqrt(1.0 / std::numbers::pi / 50.0), 0.03);
  EXPECT_THROW(mc_baseline(f, 50, 10, {0.1}, 0.5, 9), PreconditionError);
}

}  // namespace
}  // namespace mixdisc
