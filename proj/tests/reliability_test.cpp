// Copyright 2026 The robustcut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustcut/reliability.hpp"

#include <random>

#include <gtest/gtest.h>

#include "robustcut/generators.hpp"
#include "support/oracles.hpp"

namespace robustcut {
namespace {

// Reference values computed with 50-digit arithmetic (mpmath ncdf).
struct CdfPoint {
  double t, phi;
};
constexpr CdfPoint kCdfTable[] = {
    {-8.0, 6.2209605742717841e-16},  {-7.5, 3.1908916729108962e-14},
    {-6.0, 9.8658764503769814e-10},  {-5.5, 1.8989562465887719e-08},
    {-4.5, 3.3976731247300604e-06},  {-4.0, 3.1671241833119921e-05},
    {-3.5, 0.00023262907903552504},  {-3.09, 0.0010007824766140109},
    {-2.5, 0.0062096653257761352},   {-2.0, 0.022750131948179207},
    {-1.5, 0.066807201268858066},    {-1.0, 0.15865525393145705},
    {-0.5, 0.3085375387259869},      {-0.1, 0.46017216272297102},
    {0.0, 0.5},                      {0.3, 0.61791142218895263},
    {1.0, 0.84134474606854295},      {1.96, 0.97500210485177956},
    {3.0, 0.99865010196836991},      {5.0, 0.99999971334842812},
};

TEST(NormalCdf, TabulatedPoints) {
  for (const auto& p : kCdfTable) EXPECT_NEAR(normal_cdf(p.t), p.phi, 1e-12) << "t = " << p.t;
}

TEST(NormalCdf, NamedValues) {
  EXPECT_NEAR(normal_cdf(-4.5), 3.3977e-6, 5e-11);
  EXPECT_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(-3.09), 1.0008e-3, 5e-8);  // 1.000782e-3
}

TEST(NormalCdf, SymmetryAndMonotonicity) {
  double prev = 0.0;
  for (int k = -800; k <= 800; ++k) {
    const double t = k / 100.0;
    EXPECT_NEAR(normal_cdf(-t), 1.0 - normal_cdf(t), 1e-15) << "t = " << t;
    const double v = normal_cdf(t);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(ProbabilityBound, Values) {
  EXPECT_EQ(probability_bound(0.0), 1.0);
  EXPECT_NEAR(probability_bound(4.5), 4.006529739295e-5, 1e-15);
  EXPECT_NEAR(probability_bound(3.09), 8.446104076e-3, 1e-12);
  EXPECT_THROW(probability_bound(-0.1), std::invalid_argument);
}

TEST(ConicLhs, IllustrativeRowOne) {
  const auto p = gen_illustrative();
  const std::vector<double> x21{2, 1}, x13{1, 3};
  EXPECT_NEAR(conic_lhs(p.rows[0], x21), 5.707629936490925, 1e-12);
  EXPECT_TRUE(conic_feasible(p.rows[0], x21, 1e-6));
  EXPECT_NEAR(conic_lhs(p.rows[0], x13), 10.071888669857682, 1e-12);
  EXPECT_FALSE(conic_feasible(p.rows[0], x13, 1e-6));
}

TEST(ConicLhs, ZeroBetaIsNominalExactly) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int t = 0; t < 200; ++t) {
    auto p = testing::random_robust_problem(rng);
    std::vector<double> x(p.num_vars());
    for (double& v : x) v = u(rng);
    for (auto& r : p.rows) {
      r.beta = 0.0;
      EXPECT_EQ(conic_lhs(r, x), r.nominal_lhs(x));
    }
  }
}

TEST(ReliabilityIndex, IllustrativeValues) {
  const auto p = gen_illustrative();
  const std::vector<double> x{2, 1};
  EXPECT_NEAR(reliability_index(p.rows[0], x), 7.905694150420947, 1e-12);
  EXPECT_NEAR(reliability_index(p.rows[1], x), 5.547001962252291, 1e-12);
}

TEST(ReliabilityIndex, OnLimitStateIsZero) {
  auto row = gen_illustrative().rows[0];
  const std::vector<double> x{1, 3};
  EXPECT_EQ(reliability_index(row, x), 0.0);  // 1 + 6 = 7
}

TEST(ReliabilityIndex, ZeroVarianceIsDeterministic) {
  auto row = gen_illustrative().rows[0];
  const std::vector<double> zero{0, 0};
  EXPECT_EQ(reliability_index(row, zero), kInf);
  row.b = -1.0;
  EXPECT_EQ(reliability_index(row, zero), -kInf);
}

TEST(ReliabilityIndex, MatchesNumericalMinimization) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3, 3), ub(-4, 8);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 2 + t % 3;
    EllipsoidalRow row;
    for (std::size_t j = 0; j < k; ++j) {
      row.support.push_back(j);
      row.a.push_back(u(rng));
    }
    row.b = ub(rng);
    row.beta = 1.0;
    row.cov = testing::random_psd(rng, k, k, 0.5);
    std::vector<double> x(k);
    for (double& v : x) v = u(rng);
    if (row.variance(x) < 1e-6) continue;
    const double closed = reliability_index(row, x);
    const double numeric = testing::reliability_index_numeric(row, x);
    EXPECT_NEAR(closed, numeric, 1e-6 * (1 + std::abs(closed))) << "case " << t;
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

// conic_lhs <= b  <=>  beta_true >= beta, wherever the variance is positive.
TEST(ReliabilityIndex, EquivalenceOfForms) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-4, 4);
  int agree = 0, total = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto p = testing::random_robust_problem(rng);
    std::vector<double> x(p.num_vars());
    for (double& v : x) v = u(rng);
    for (const auto& r : p.rows) {
      const double var = r.variance(x);
      if (var <= 1e-12) continue;
      const double lhs = conic_lhs(r, x);
      // Skip points within round-off of the boundary.
      if (std::abs(lhs - r.b) < 1e-9 * (1 + std::abs(r.b) + std::abs(lhs))) continue;
      ++total;
      agree += (lhs <= r.b) == (reliability_index(r, x) >= r.beta);
    }
  }
  EXPECT_EQ(agree, total);
  EXPECT_GT(total, 1000);
}

TEST(Report, IllustrativeOptimum) {
  const auto p = gen_illustrative();
  const std::vector<double> x{2, 1};
  const auto rep = report(p, x);
  ASSERT_EQ(rep.size(), 2u);
  EXPECT_TRUE(rep[0].feasible && rep[1].feasible);
  EXPECT_NEAR(rep[0].beta_true, 7.905694150420947, 1e-12);
  EXPECT_NEAR(rep[1].beta_true, 5.547001962252291, 1e-12);
  EXPECT_DOUBLE_EQ(rep[0].p_exact, normal_cdf(-rep[0].beta_true));
  EXPECT_DOUBLE_EQ(rep[1].p_exact, normal_cdf(-rep[1].beta_true));
  EXPECT_NEAR(rep[0].margin, 7 - 5.707629936490925, 1e-12);
}

TEST(Report, ZeroPointIsDeterministic) {
  const auto p = gen_illustrative();
  const auto rep = report(p, std::vector<double>{0, 0});
  for (const auto& e : rep) {
    EXPECT_TRUE(e.feasible);
    EXPECT_EQ(e.beta_true, kInf);
    EXPECT_EQ(e.p_exact, 0.0);
  }
}

TEST(Report, TrussBarThreeAtOnePointOne) {
  const auto p = gen_truss_bar(TrussSpec{}, 2);
  const std::vector<double> x{6, 1};  // area 0.5 + 0.1 * 6
  const auto rep = report(p, x);
  ASSERT_EQ(rep.size(), 1u);
  EXPECT_TRUE(rep[0].feasible);
  EXPECT_GE(rep[0].beta_true, 3.09);
  EXPECT_NEAR(rep[0].beta_true, 3.2653889786404195, 1e-12);
  EXPECT_NEAR(rep[0].conic_lhs, -8.715497015503416, 1e-9);
}

TEST(Report, ProbabilityInvariants) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int t = 0; t < 500; ++t) {
    const auto p = testing::random_robust_problem(rng);
    std::vector<double> x(p.num_vars());
    for (double& v : x) v = u(rng);
    for (const auto& e : report(p, x)) {
      EXPECT_GE(e.p_exact, 0.0);
      EXPECT_LE(e.p_exact, 1.0);
      EXPECT_LE(e.p_bound, 1.0);
      // exp underflows to 0 beyond beta ~ 38.6; positivity is checked below that.
      if (std::isfinite(e.beta_true) && e.beta_true < 38.0) {
        EXPECT_GT(e.p_bound, 0.0);
      }
      if (std::isfinite(e.beta_true) && e.beta_true >= 1.0) {
        EXPECT_LE(e.p_exact, e.p_bound);
      }
    }
  }
}

TEST(Report, WrongLengthThrows) {
  EXPECT_THROW(report(gen_illustrative(), std::vector<double>{1}), std::invalid_argument);
}

}  // namespace
}  // namespace robustcut
