#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "polybound/circle_norms.hpp"
#include "polybound/error.hpp"

namespace pb = polybound;
using pb::Complex;
using pb::Polynomial;

namespace {

Polynomial cyclotomic(int n) {
  std::vector<Complex> a(n + 1);
  a[0] = -1.0;
  a[n] = 1.0;
  return Polynomial::normalize(a);
}

const Polynomial kExample = Polynomial::normalize({90.0, -101.0, 18.0});

}  // namespace

TEST(LpNorm, OnePlusZ) {
  const Polynomial f = Polynomial::normalize({1.0, 1.0});
  EXPECT_NEAR(pb::lp_norm(f, 2.0).value, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(pb::lp_norm(f, 1.0).value, 4.0 / std::numbers::pi, 1e-9);
}

TEST(LpNorm, CyclotomicIsDegreeIndependent) {
  for (int n : {1, 2, 5}) {
    const auto v = pb::lp_norm(cyclotomic(n), 1.0);
    EXPECT_NEAR(v.value, 4.0 / std::numbers::pi, 1e-9) << n;
    EXPECT_TRUE(v.converged);
  }
}

TEST(LpNorm, FrozenOracleValues) {
  // Reference values from 30-digit quadrature, frozen.
  EXPECT_NEAR(pb::lp_norm(kExample, 1.0).value, 118.79206935004772, 1e-8);
  EXPECT_NEAR(pb::lp_norm(Polynomial::normalize({20.0, 81.0}), 1.0).value, 82.239345551936097, 1e-8);
  EXPECT_NEAR(pb::lp_norm(Polynomial::normalize({1.0, 0.5}), 1.0).value, 1.0635444099733650, 1e-10);
  EXPECT_NEAR(pb::lp_norm(Polynomial::normalize({1.0, 1.0, 0.0, 1.0}), 1.0).value,
              1.5998743485431362, 1e-9);
  EXPECT_NEAR(pb::lp_norm(Polynomial::normalize({-2.0, 1.0}), 1.0).value, 2.1270888199467299, 1e-10);
}

TEST(LpNorm, AgreesWithBruteForce) {
  gen::Source src(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = src.coefficients(src.integer(1, 8));
    const double p = src.uniform(0.5, 4.0);
    const double got = pb::lp_norm(Polynomial::normalize(a), p).value;
    EXPECT_NEAR(got, oracle::lp(a, p), 1e-8 * got) << "trial " << trial << " p=" << p;
  }
}

TEST(LpNorm, ErrorEstimateIsLevelDifference) {
  const auto v = pb::lp_norm(kExample, 1.5);
  EXPECT_GE(v.err_estimate, 0.0);
  EXPECT_LE(v.err_estimate, 1e-10 * v.value);
  EXPECT_GE(v.nodes_used, 512u);
}

TEST(LpNorm, FlagsNonConvergence) {
  pb::QuadratureConfig cfg;
  cfg.initial_nodes = 4;
  cfg.max_nodes = 8;
  const auto v = pb::lp_norm(cyclotomic(1), 0.5, cfg);
  EXPECT_FALSE(v.converged);
  EXPECT_EQ(v.nodes_used, 8u);
}

TEST(LpNorm, RejectsBadInput) {
  EXPECT_THROW(pb::lp_norm(kExample, 0.0), pb::Error);
  EXPECT_THROW(pb::lp_norm(kExample, -1.0), pb::Error);
  pb::QuadratureConfig cfg;
  cfg.initial_nodes = 100;
  EXPECT_THROW(pb::lp_norm(kExample, 1.0, cfg), pb::Error);
}

TEST(LpNorm, Homogeneity) {
  gen::Source src(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = src.polynomial(src.integer(1, 6));
    const Complex c = src.box(3.0);
    const double p = src.uniform(0.5, 3.0);
    const double lhs = pb::lp_norm(f.scaled(c), p).value;
    EXPECT_NEAR(lhs, std::abs(c) * pb::lp_norm(f, p).value, 1e-10 * lhs);
  }
}

TEST(LpNorm, RotationInvariance) {
  gen::Source src(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = src.polynomial(src.integer(1, 6));
    const double p = src.uniform(0.5, 3.0);
    const double base = pb::lp_norm(f, p).value;
    EXPECT_NEAR(pb::lp_norm(f.rotated(src.unimodular()), p).value, base, 1e-9 * base);
  }
}

TEST(LpNorm, MonomialFactorIsExact) {
  gen::Source src(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = src.polynomial(src.integer(1, 5));
    const double p = src.uniform(0.5, 3.0);
    EXPECT_EQ(pb::lp_norm(f.shifted(src.integer(1, 4)), p).value, pb::lp_norm(f, p).value);
  }
}

TEST(LpNorm, NondecreasingInP) {
  gen::Source src(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = src.polynomial(src.integer(1, 8));
    double prev = 0.0;
    for (double p : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}) {
      const double v = pb::lp_norm(f, p).value;
      EXPECT_GE(v, prev * (1 - 1e-12));
      prev = v;
    }
  }
}

TEST(SupNorm, SpecExamples) {
  std::vector<Complex> a(6);
  a[0] = a[5] = 1.0;
  EXPECT_NEAR(pb::sup_norm(Polynomial::normalize(a)), 2.0, 1e-12);
  EXPECT_NEAR(pb::sup_norm(Polynomial::normalize({1.0, 1.0, 1.0})), 3.0, 1e-12);
  EXPECT_NEAR(pb::sup_norm(kExample), 209.0, 1e-10);
}

TEST(SupNorm, AgreesWithDenseSampling) {
  gen::Source src(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = src.coefficients(src.integer(1, 12));
    const double got = pb::sup_norm(Polynomial::normalize(a));
    const double sampled = oracle::sup(a, 1 << 16);
    EXPECT_GE(got, sampled * (1 - 1e-12)) << trial;
    EXPECT_LE(got, sampled * (1 + 1e-7)) << trial;
  }
}

TEST(Mahler, RootFormula) {
  EXPECT_NEAR(pb::mahler_roots(pb::find_roots(kExample)), 90.0, 1e-10);
  EXPECT_NEAR(pb::mahler_roots(pb::find_roots(cyclotomic(5))), 1.0, 1e-12);
  EXPECT_NEAR(pb::mahler_roots(pb::find_roots(Polynomial::normalize({-2.0, 1.0}))), 2.0, 1e-14);
}

TEST(Mahler, IntegralMatchesRoots) {
  EXPECT_NEAR(pb::mahler_integral(Polynomial::normalize({5.0})).value, 5.0, 1e-12);
  EXPECT_NEAR(pb::mahler_integral(kExample).value, 90.0, 1e-4);
  EXPECT_NEAR(pb::mahler_integral(Polynomial::normalize({-1.0, 2.0})).value, 2.0, 1e-10);

  gen::Source src(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = src.integer(1, 8);
    const auto roots = src.roots_off_circle(n, 0.05);
    const Complex lead = src.unimodular() * 1.5;
    const Polynomial f = Polynomial::normalize(pb::expand_roots(lead, roots));
    const double want = oracle::mahler_product(lead, roots);
    EXPECT_NEAR(pb::mahler_integral(f).value, want, 1e-4 * want) << trial;
  }
}

TEST(Mahler, IntegralRefusesCircleRoots) {
  try {
    pb::mahler_integral(cyclotomic(3));
    FAIL();
  } catch (const pb::Error& e) {
    EXPECT_EQ(e.code(), pb::ErrorCode::singular_integrand);
  }
}

TEST(NormChain, Examples) {
  EXPECT_TRUE(pb::norm_chain_check(Polynomial::normalize({1.0, 1.0}), 1.0, 2.0));
  const Polynomial c = Polynomial::normalize({3.0});
  EXPECT_TRUE(pb::norm_chain_check(c, 1.0, 2.0));
  EXPECT_NEAR(pb::lp_norm(c, 1.0).value, 3.0, 1e-15);
  EXPECT_NEAR(pb::sup_norm(c), 3.0, 1e-15);
  EXPECT_TRUE(pb::norm_chain_check(kExample, 1.0, 2.0));
  EXPECT_LT(pb::lp_norm(kExample, 1.0).value, pb::lp_norm(kExample, 2.0).value - 1.0);
  EXPECT_THROW(pb::norm_chain_check(kExample, 2.0, 1.0), pb::Error);
}

TEST(PairwiseSum, MatchesLongDouble) {
  std::vector<double> v;
  long double ref = 0;
  for (int i = 0; i < 100000; ++i) {
    v.push_back(1.0 / (1.0 + i));
    ref += 1.0L / (1.0L + i);
  }
  EXPECT_NEAR(pb::pairwise_sum(v), static_cast<double>(ref), 1e-12);
  EXPECT_EQ(pb::pairwise_sum(std::vector<double>{}), 0.0);
}
