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

#ifndef ROBUSTCUT_BUDGET_HPP
#define ROBUSTCUT_BUDGET_HPP

// Budget-of-uncertainty baseline. Each coefficient a_j of a row may deviate
// by up to delta_j, and at most Gamma of them (fractionally) deviate at once.
// The inner worst case is an LP whose dual gives the linear reformulation
//
//   a^T x + Gamma s + sum_j g_j <= b
//   s + g_j >= delta_j y_j,   -y_j <= x_j <= y_j,   s, g, y >= 0.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "robustcut/milp.hpp"
#include "robustcut/problem.hpp"

namespace robustcut {

struct BudgetRow {
  std::vector<std::size_t> support;
  std::vector<double> a;
  double b = 0.0;
  std::vector<double> deltas;  // maximum absolute deviation per coefficient
  double gamma = 0.0;

  std::size_t uncertain_count() const {
    return static_cast<std::size_t>(
        std::count_if(deltas.begin(), deltas.end(), [](double d) { return d > 0.0; }));
  }

  double nominal_lhs(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < support.size(); ++k) s += a[k] * x[support[k]];
    return s;
  }
};

using BudgetProblem = Problem<BudgetRow>;

inline ValidationReport validate(const BudgetProblem& p) {
  ValidationReport out;
  detail::validate_variables(p, out);
  const std::size_t n = p.c.size();
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& r = p.rows[i];
    if (!detail::validate_support(r.support, r.a.size(), n, i, out)) continue;
    if (r.deltas.size() != r.support.size()) {
      out.push_back({Violation::Kind::Dimension, i, {}, "delta length differs from support"});
      continue;
    }
    if (std::any_of(r.deltas.begin(), r.deltas.end(), [](double d) { return !(d >= 0.0); }))
      out.push_back({Violation::Kind::BadBudget, i, {}, "deviations must be >= 0"});
    if (!(r.gamma >= 0.0) || r.gamma > static_cast<double>(r.uncertain_count()))
      out.push_back({Violation::Kind::BadBudget, i, {},
                     "gamma must lie in [0, number of positive deviations]"});
  }
  return out;
}

/// max sum_j z_j delta_j |x_j|  over  0 <= z <= 1, sum z <= Gamma.
inline double protection_value(const BudgetRow& row, std::span<const double> x) {
  std::vector<double> dev(row.support.size());
  for (std::size_t k = 0; k < dev.size(); ++k) dev[k] = row.deltas[k] * std::abs(x[row.support[k]]);
  std::sort(dev.begin(), dev.end(), std::greater<>());
  double left = row.gamma;
  double s = 0.0;
  for (double d : dev) {
    if (left <= 0.0) break;
    const double take = std::min(1.0, left);
    s += take * d;
    left -= take;
  }
  return s;
}

/// Linear MILP equivalent of a budget problem. The original variables keep
/// their indices; auxiliary variables follow.
inline MilpModel reformulate(const BudgetProblem& problem) {
  for (const auto& r : problem.rows)
    for (double d : r.deltas)
      if (d < 0.0) throw std::invalid_argument("reformulate: negative deviation");

  MilpModel m;
  m.sense = problem.sense;
  m.c = problem.c;
  m.lb = problem.lb;
  m.ub = problem.ub;
  m.kind = problem.kind;

  // |x_j|: x_j itself when its lower bound is nonnegative, else a new y_j.
  std::vector<std::ptrdiff_t> abs_var(problem.num_vars(), -1);
  auto abs_of = [&](std::size_t j) -> std::size_t {
    if (problem.lb[j] >= 0.0) return j;
    if (abs_var[j] < 0) {
      const double cap = std::max(std::abs(problem.lb[j]), std::abs(problem.ub[j]));
      const std::size_t y = m.add_variable(0.0, 0.0, cap, VarKind::Continuous);
      abs_var[j] = static_cast<std::ptrdiff_t>(y);
      m.rows.push_back({{j, y}, {1.0, -1.0}, 0.0});
      m.rows.push_back({{j, y}, {-1.0, -1.0}, 0.0});
    }
    return static_cast<std::size_t>(abs_var[j]);
  };

  for (const auto& r : problem.rows) {
    LinearRow main{r.support, r.a, r.b};
    if (r.uncertain_count() == 0) {
      m.rows.push_back(std::move(main));
      continue;
    }
    const std::size_t s = m.add_variable(0.0, 0.0, kInf, VarKind::Continuous);
    main.support.push_back(s);
    main.coef.push_back(r.gamma);
    std::vector<LinearRow> links;
    for (std::size_t k = 0; k < r.support.size(); ++k) {
      if (!(r.deltas[k] > 0.0)) continue;
      const std::size_t g = m.add_variable(0.0, 0.0, kInf, VarKind::Continuous);
      main.support.push_back(g);
      main.coef.push_back(1.0);
      // -s - g + delta * |x| <= 0
      links.push_back({{s, g, abs_of(r.support[k])}, {-1.0, -1.0, r.deltas[k]}, 0.0});
    }
    m.rows.push_back(std::move(main));
    for (auto& l : links) m.rows.push_back(std::move(l));
  }
  return m;
}

/// Reformulates and solves; x is truncated to the original variables.
inline MilpSolution solve_budget(const BudgetProblem& problem, const SolverConfig& config = {}) {
  auto sol = solve_milp(reformulate(problem), config);
  if (!sol.x.empty()) {
    sol.x.resize(problem.num_vars());
    sol.objective = problem.objective(sol.x);
  }
  return sol;
}

}  // namespace robustcut

#endif  // ROBUSTCUT_BUDGET_HPP
