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

#include "robustcut/cutting_plane.hpp"

#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "robustcut/generators.hpp"
#include "support/oracles.hpp"

namespace robustcut {
namespace {

SolverConfig with_policy(CutPolicy p) {
  SolverConfig c;
  c.cut_policy = p;
  return c;
}

// Checks that hold on every trace: no repeated iterate, monotone objective,
// tangency of each cut at its generating point, cut-off of violated rows.
void expect_trace_invariants(const RobustProblem& p, const SolveReport& rep) {
  std::set<std::vector<double>> seen;
  for (const auto& it : rep.iterations) EXPECT_TRUE(seen.insert(it.x).second) << "iterate repeats";
  for (std::size_t k = 1; k < rep.iterations.size(); ++k) {
    const double a = rep.iterations[k - 1].objective, b = rep.iterations[k].objective;
    const double tol = 1e-9 * (1 + std::abs(a));
    if (p.sense == Sense::Maximize) EXPECT_LE(b, a + tol);
    else EXPECT_GE(b, a - tol);
  }
  for (const auto& cut : rep.cuts) {
    const auto& row = p.rows[cut.row_index];
    const double lhs = conic_lhs(row, cut.generated_at);
    EXPECT_NEAR(cut.lhs(cut.generated_at), lhs, 1e-9 * (1 + std::abs(lhs)));
    if (lhs > row.b + SolverConfig{}.feas_tol * (1 + std::abs(row.b))) {
      EXPECT_GT(cut.lhs(cut.generated_at), cut.rhs);
    }
  }
}

TEST(WorstCaseRow, IllustrativeCutsAtFirstIterate) {
  const auto p = gen_illustrative();
  const std::vector<double> x{1, 3};
  const auto c1 = worst_case_row(p.rows[0], x);
  const auto c2 = worst_case_row(p.rows[1], x);
  EXPECT_NEAR(c1.a_hat[0], 1.38234, 5e-6);
  EXPECT_NEAR(c1.a_hat[1], 2.89652, 5e-6);
  EXPECT_NEAR(c2.a_hat[0], 2.17008, 5e-6);
  EXPECT_NEAR(c2.a_hat[1], 1.34017, 5e-6);
  // Full-precision values of the closed form.
  EXPECT_NEAR(c1.a_hat[0], 1.3823380747891536, 1e-13);
  EXPECT_NEAR(c1.a_hat[1], 2.8965168650228432, 1e-13);
  EXPECT_NEAR(c2.a_hat[0], 2.170084012854152, 1e-13);
  EXPECT_NEAR(c2.a_hat[1], 1.3401680257083044, 1e-13);
  EXPECT_EQ(c1.rhs, 7.0);
}

TEST(WorstCaseRow, ZeroBetaAndZeroVariance) {
  auto row = gen_illustrative().rows[0];
  EXPECT_EQ(worst_case_row(row, std::vector<double>{0, 0}).a_hat, row.a);
  row.beta = 0.0;
  EXPECT_EQ(worst_case_row(row, std::vector<double>{4, 1}).a_hat, row.a);
}

TEST(WorstCaseRow, TangencyAndRadius) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + t % 4;
    EllipsoidalRow row;
    for (std::size_t j = 0; j < k; ++j) {
      row.support.push_back(j);
      row.a.push_back(u(rng));
    }
    row.beta = std::abs(u(rng));
    row.cov = testing::random_psd(rng, k, k, 0.6);
    std::vector<double> x(k);
    for (double& v : x) v = u(rng);
    const auto cut = worst_case_row(row, x);
    const double lhs = conic_lhs(row, x);
    EXPECT_NEAR(cut.lhs(x), lhs, 1e-9 * (1 + std::abs(lhs)));
    std::vector<double> diff(k);
    for (std::size_t j = 0; j < k; ++j) diff[j] = cut.a_hat[j] - row.a[j];
    EXPECT_NEAR(mahalanobis_norm(row.chol(), diff), row.beta, 1e-9 * (1 + row.beta)) << "case " << t;
  }
}

// Each cut is a supporting hyperplane of the conic region: conic-feasible
// points never violate it.
TEST(WorstCaseRow, CutsAreValid) {
  const auto p = gen_illustrative();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 10);
  std::vector<Cut> cuts;
  for (int t = 0; t < 40; ++t) {
    const std::vector<double> at{u(rng), u(rng)};
    for (std::size_t i = 0; i < 2; ++i) cuts.push_back(worst_case_row(p.rows[i], at, i));
  }
  int feasible = 0;
  while (feasible < 1000) {
    const std::vector<double> x{u(rng) * 0.4, u(rng) * 0.4};
    bool ok = true;
    for (const auto& r : p.rows) ok = ok && conic_lhs(r, x) <= r.b;
    if (!ok) continue;
    ++feasible;
    for (const auto& c : cuts) EXPECT_LE(c.lhs(x), c.rhs + 1e-7);
  }
}

TEST(CheckStop, Decisions) {
  const SolverConfig cfg;
  const std::vector<double> x{2, 1}, v{0.5};
  const std::span<const double> xs(x);
  EXPECT_EQ(check_stop(x, std::nullopt, {}, cfg), StopDecision::ConicOptimal);
  EXPECT_EQ(check_stop(x, xs, v, cfg), StopDecision::Stalled);
  EXPECT_EQ(check_stop(x, std::nullopt, v, cfg), StopDecision::Continue);
  const std::vector<double> far{2, 2};
  EXPECT_EQ(check_stop(x, std::span<const double>(far), v, cfg), StopDecision::Continue);
}

TEST(Solve, IllustrativeAllRows) {
  const auto p = gen_illustrative();
  const auto rep = solve(p, with_policy(CutPolicy::AllRows));
  ASSERT_EQ(rep.final_status, SolveStatus::ConicOptimal);
  EXPECT_EQ(rep.final_x, (std::vector<double>{2, 1}));
  EXPECT_EQ(rep.final_objective, 9.0);
  EXPECT_LE(rep.iterations.size(), 4u);
  // First master is the nominal problem; its pick here is (1, 3), objective 12.
  EXPECT_EQ(rep.iterations[0].x, (std::vector<double>{1, 3}));
  EXPECT_EQ(rep.iterations[0].objective, 12.0);
  EXPECT_EQ(rep.iterations[0].cuts_added, 2u);
  ASSERT_GE(rep.cuts.size(), 2u);
  EXPECT_NEAR(rep.cuts[0].a_hat[0], 1.38234, 5e-6);
  EXPECT_NEAR(rep.cuts[1].a_hat[1], 1.34017, 5e-6);
  ASSERT_EQ(rep.reliability.size(), 2u);
  EXPECT_NEAR(rep.reliability[0].beta_true, 7.905694150420947, 1e-12);
  expect_trace_invariants(p, rep);
}

TEST(Solve, IllustrativeViolatedOnly) {
  const auto p = gen_illustrative();
  const auto rep = solve(p, with_policy(CutPolicy::ViolatedOnly));
  ASSERT_EQ(rep.final_status, SolveStatus::ConicOptimal);
  EXPECT_EQ(rep.final_x, (std::vector<double>{2, 1}));
  EXPECT_LE(rep.iterations.size(), 4u);
  for (const auto& it : rep.iterations) EXPECT_LE(it.cuts_added, it.violated.size());
  expect_trace_invariants(p, rep);
}

TEST(Solve, TrussSingleBlock) {
  const TrussSpec spec;
  const auto p = gen_truss(spec);
  const auto rep = solve(p);
  ASSERT_EQ(rep.final_status, SolveStatus::ConicOptimal);
  EXPECT_NEAR(rep.final_objective, 7.3, 1e-9);
  EXPECT_LE(rep.iterations.size(), 3u);
  const auto areas = truss_areas(spec, rep.final_x);
  const std::vector<double> expected{0.9, 0.9, 1.1, 1.1, 1.1, 1.1, 1.1};
  for (std::size_t j = 0; j < 7; ++j) EXPECT_NEAR(areas[j], expected[j], 1e-12);
  for (const auto& e : rep.reliability) EXPECT_GE(e.beta_true, 3.09);
  expect_trace_invariants(p, rep);
}

TEST(Solve, ZeroBetaIsNominalMilp) {
  auto p = gen_illustrative();
  for (auto& r : p.rows) r.beta = 0.0;
  const auto rep = solve(p);
  ASSERT_EQ(rep.final_status, SolveStatus::ConicOptimal);
  EXPECT_EQ(rep.iterations.size(), 1u);
  MilpModel m;
  m.sense = p.sense;
  m.c = p.c;
  m.lb = p.lb;
  m.ub = p.ub;
  m.kind = p.kind;
  for (const auto& r : p.rows) m.rows.push_back({r.support, r.a, r.b});
  const auto s = solve_milp(m);
  EXPECT_EQ(rep.final_x, s.x);
  EXPECT_EQ(rep.final_objective, 12.0);
}

TEST(Solve, MasterInfeasible) {
  auto p = gen_illustrative();
  p.rows[0].b = -1.0;
  EXPECT_EQ(solve(p).final_status, SolveStatus::MasterInfeasible);
}

TEST(Solve, RobustInfeasibleNominalFeasible) {
  // Nominal row x <= 3 admits the whole box {1,2,3}; the robust row
  // x + 5|x| <= 3 admits none of it. Cuts drive the master infeasible.
  RobustProblem p;
  p.sense = Sense::Maximize;
  p.add_variable(1, 1, 3, VarKind::Integer);
  p.rows.push_back({{0}, {1.0}, 3.0, 5.0, DenseMatrix{{1.0}}});
  const auto rep = solve(p);
  EXPECT_EQ(rep.final_status, SolveStatus::MasterInfeasible);
  EXPECT_FALSE(brute_force(p).feasible);
}

TEST(Solve, IterLimitKeepsLastIterate) {
  const auto p = gen_illustrative();
  SolverConfig cfg;
  cfg.max_iter = 1;
  const auto rep = solve(p, cfg);
  EXPECT_EQ(rep.final_status, SolveStatus::IterLimit);
  EXPECT_EQ(rep.final_x, (std::vector<double>{1, 3}));
  EXPECT_EQ(rep.iterations.size(), 1u);
}

TEST(Solve, MatchesBruteForce) {
  std::mt19937_64 rng(123);
  int feasible = 0, total = 0;
  for (int t = 0; t < 300; ++t) {
    const auto p = testing::random_robust_problem(rng);
    ASSERT_TRUE(validate(p).empty()) << "case " << t;
    const auto bf = brute_force(p);
    for (auto policy : {CutPolicy::AllRows, CutPolicy::ViolatedOnly}) {
      const auto rep = solve(p, with_policy(policy));
      ++total;
      if (!bf.feasible) {
        EXPECT_EQ(rep.final_status, SolveStatus::MasterInfeasible) << "case " << t;
        continue;
      }
      ++feasible;
      ASSERT_EQ(rep.final_status, SolveStatus::ConicOptimal) << "case " << t;
      EXPECT_DOUBLE_EQ(rep.final_objective, bf.objective) << "case " << t;
      for (const auto& r : p.rows) EXPECT_TRUE(conic_feasible(r, rep.final_x, 1e-6));
      EXPECT_LE(rep.iterations.size(), static_cast<std::size_t>(SolverConfig{}.max_iter));
      expect_trace_invariants(p, rep);
    }
  }
  EXPECT_GE(feasible, 200);
  EXPECT_EQ(total, 600);
}

TEST(TraceCsv, Format) {
  const auto rep = solve(gen_illustrative());
  std::ostringstream os;
  write_trace_csv(os, rep);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "iter,objective,x,n_violated,max_violation,cuts_added");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("1,12,1;3,", 0), 0u) << line;
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, rep.iterations.size());
}

TEST(FormatDouble, RoundTrips) {
  EXPECT_EQ(format_double(9.0), "9");
  EXPECT_EQ(format_double(0.1), "0.1");
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int t = 0; t < 1000; ++t) {
    const double v = u(rng);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

}  // namespace
}  // namespace robustcut
