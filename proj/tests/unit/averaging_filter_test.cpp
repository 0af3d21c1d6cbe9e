#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "polybound/averaging_filter.hpp"
#include "polybound/circle_norms.hpp"
#include "polybound/error.hpp"

namespace pb = polybound;
using pb::Complex;
using pb::Polynomial;

namespace {

std::vector<std::pair<int, int>> indices(const std::vector<pb::CoefficientPair>& pairs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : pairs) out.emplace_back(p.L, p.M);
  return out;
}

Polynomial of_degree(int n) {
  std::vector<Complex> a(n + 1, 1.0);
  return Polynomial::normalize(a);
}

}  // namespace

TEST(AdmissiblePairs, SmallDegrees) {
  using V = std::vector<std::pair<int, int>>;
  EXPECT_EQ(indices(pb::admissible_pairs(of_degree(1))), (V{{0, 1}}));
  EXPECT_EQ(indices(pb::admissible_pairs(of_degree(2))), (V{{0, 2}}));
  EXPECT_EQ(indices(pb::admissible_pairs(of_degree(3))), (V{{0, 2}, {0, 3}, {1, 3}}));
}

TEST(AdmissiblePairs, MatchesEnumeration) {
  for (int n = 1; n <= 15; ++n) {
    std::vector<std::pair<int, int>> want;
    for (int L = 0; L <= n; ++L) {
      for (int M = L + 1; M <= n; ++M) {
        if (M - L > std::max(L, n - M)) want.emplace_back(L, M);
      }
    }
    EXPECT_EQ(indices(pb::admissible_pairs(of_degree(n))), want) << n;
    for (int L = 0; L <= n; ++L)
      for (int M = L + 1; M <= n; ++M)
        EXPECT_EQ(pb::is_admissible(L, M, n), M - L > std::max(L, n - M));
  }
}

TEST(AdmissiblePairs, CarryCoefficientsIncludingZeros) {
  const Polynomial f = Polynomial::normalize({2.0, 0.0, 0.0, 5.0});
  const auto pairs = pb::admissible_pairs(f);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0].aM, Complex{});  // (0, 2)
  EXPECT_EQ(pairs[1].aL, Complex(2.0));
  EXPECT_EQ(pairs[1].aM, Complex(5.0));
}

TEST(Filter, SpecExamples) {
  const Polynomial f = Polynomial::normalize({1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(pb::filter(f, pb::make_pair(f, 0, 3)).expanded(),
            (std::vector<Complex>{1.0, 0.0, 0.0, 4.0}));
  const auto g = pb::filter(f, pb::make_pair(f, 1, 3)).expanded();
  ASSERT_EQ(g.size(), 4u);
  EXPECT_NEAR(std::abs(g[1] - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g[3] - 4.0), 0.0, 1e-15);
  EXPECT_EQ(g[0], Complex{});
  EXPECT_EQ(g[2], Complex{});
  const Polynomial h = Polynomial::normalize({Complex(1, 2), Complex(-3, 0.5)});
  EXPECT_EQ(pb::filter(h, pb::make_pair(h, 0, 1)), h);
}

TEST(Filter, InadmissibleListsSurvivors) {
  const Polynomial f = Polynomial::normalize({1.0, 2.0, 3.0, 4.0});
  try {
    pb::filter(f, pb::make_pair(f, 0, 1));
    FAIL();
  } catch (const pb::Error& e) {
    EXPECT_EQ(e.code(), pb::ErrorCode::inadmissible_pair);
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos) << e.what();
  }
}

TEST(Filter, MatchesCongruenceAndDirectAverage) {
  gen::Source src(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = src.integer(1, 12);
    const auto a = src.coefficients(n);
    const Polynomial f = Polynomial::normalize(a);
    const auto pairs = pb::admissible_pairs(f);
    const auto& pair = pairs[src.integer(0, static_cast<int>(pairs.size()) - 1)];
    const auto got = pb::filter(f, pair).expanded();
    const auto cong = pb::congruence_select(f, pair.L, pair.K());
    const auto direct = oracle::average(f.expanded(), pair.L, pair.K());
    for (std::size_t i = 0; i < cong.size(); ++i) {
      const Complex g = i < got.size() ? got[i] : Complex{};
      EXPECT_LE(std::abs(g - cong[i]), 1e-12) << trial << " index " << i;
      EXPECT_LE(std::abs(g - direct[i]), 1e-12) << trial << " index " << i;
    }
  }
}

TEST(Filter, ContractsEveryNorm) {
  gen::Source src(67);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = src.polynomial(src.integer(1, 9));
    for (const auto& pair : pb::admissible_pairs(f)) {
      const Polynomial g = pb::filter(f, pair);
      if (g.is_zero()) continue;
      for (double p : {1.0, 1.5, 2.0, 4.0}) {
        EXPECT_LE(pb::lp_norm(g, p).value, pb::lp_norm(f, p).value + 1e-8);
      }
      EXPECT_LE(pb::sup_norm(g), pb::sup_norm(f) + 1e-8);
    }
  }
}

TEST(PairBounds, SupExamples) {
  const Polynomial f = Polynomial::normalize({1.0, 1.0, 1.0});
  const auto b = pb::pair_bounds(f, pb::make_pair(f, 0, 2), INFINITY);
  ASSERT_TRUE(b.sup_bound.applicable());
  EXPECT_NEAR(*b.sup_bound.value, 2.0, 1e-15);
  EXPECT_GE(pb::sup_norm(f), *b.sup_bound.value);
  EXPECT_FALSE(b.sym_bound.applicable());
  EXPECT_FALSE(b.asym_bound.applicable());

  const Polynomial g = Polynomial::normalize({1.0, 0.0, 0.0, 0.0, 1.0});
  EXPECT_NEAR(*pb::pair_bounds(g, pb::make_pair(g, 0, 4), 1.0).sup_bound.value, pb::sup_norm(g), 1e-12);
}

TEST(PairBounds, SymExample) {
  const Polynomial f = Polynomial::normalize({1.0, 1.0, 0.0, 1.0});
  const auto b = pb::pair_bounds(f, pb::make_pair(f, 0, 3), 1.0);
  ASSERT_TRUE(b.sym_bound.applicable());
  EXPECT_NEAR(*b.sym_bound.value, 4.0 / std::numbers::pi, 1e-14);
  EXPECT_GE(pb::lp_norm(f, 1.0).value, *b.sym_bound.value);
}

TEST(PairBounds, WindowsRespected) {
  const Polynomial f = Polynomial::normalize({1.0, 2.0, 3.0});
  const auto pair = pb::make_pair(f, 0, 2);
  EXPECT_FALSE(pb::pair_bounds(f, pair, 0.5).sym_bound.applicable());
  EXPECT_FALSE(pb::pair_bounds(f, pair, 0.5).asym_bound.applicable());
  EXPECT_FALSE(pb::pair_bounds(f, pair, 2.5).sym_bound.applicable());
  EXPECT_TRUE(pb::pair_bounds(f, pair, 2.5).asym_bound.applicable());
  const auto b = pb::pair_bounds(f, pair, 1.5);
  EXPECT_EQ(b.sym_bound.p_lo, 1.0);
  EXPECT_EQ(b.sym_bound.p_hi, 2.0);
  EXPECT_EQ(b.asym_bound.p_lo, 1.0);
  EXPECT_TRUE(std::isinf(b.asym_bound.p_hi));

  const Polynomial z = Polynomial::normalize({0.0, 1.0, 0.0, 0.0, 1.0});
  const auto zero_pair = pb::make_pair(z, 0, 3);  // both coefficients zero
  EXPECT_FALSE(pb::pair_bounds(z, zero_pair, 1.5).asym_bound.applicable());
  EXPECT_NEAR(*pb::pair_bounds(z, zero_pair, 1.5).sym_bound.value, 0.0, 0.0);
}

TEST(PairBounds, HoldOnRandomPolynomials) {
  gen::Source src(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = src.polynomial(src.integer(1, 9));
    const double sup = pb::sup_norm(f);
    for (double p : {1.0, 1.3, 2.0, 3.0}) {
      const double norm = pb::lp_norm(f, p).value;
      for (const auto& pair : pb::admissible_pairs(f)) {
        const auto b = pb::pair_bounds(f, pair, p);
        EXPECT_LE(*b.sup_bound.value, sup * (1 + 1e-7));
        if (b.sym_bound.applicable()) EXPECT_LE(*b.sym_bound.value, norm * (1 + 1e-7));
        if (b.asym_bound.applicable()) EXPECT_LE(*b.asym_bound.value, norm * (1 + 1e-7));
      }
    }
  }
}
