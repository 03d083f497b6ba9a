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

#ifndef ROBUSTCUT_RELIABILITY_HPP
#define ROBUSTCUT_RELIABILITY_HPP

// First-order second-moment view of an ellipsoidal row: for a linear limit
// state with normally distributed coefficients the reliability index and the
// probability of violation have closed forms.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "robustcut/problem.hpp"

namespace robustcut {

/// a^T x + beta * sqrt(x^T Sigma x), the robust left-hand side.
inline double conic_lhs(const EllipsoidalRow& row, std::span<const double> x) {
  const double nominal = row.nominal_lhs(x);
  if (row.beta == 0.0) return nominal;
  return nominal + row.beta * std::sqrt(row.variance(x));
}

inline bool conic_feasible(const EllipsoidalRow& row, std::span<const double> x, double feas_tol) {
  return conic_lhs(row, x) <= row.b + feas_tol * (1.0 + std::abs(row.b));
}

/// Signed reliability index (b - a^T x) / sqrt(x^T Sigma x). A row with no
/// variance at x is deterministic: +inf if satisfied, -inf otherwise.
inline double reliability_index(const EllipsoidalRow& row, std::span<const double> x) {
  const double margin = row.b - row.nominal_lhs(x);
  const double var = row.variance(x);
  if (var <= 0.0) return margin >= 0.0 ? kInf : -kInf;
  return margin / std::sqrt(var);
}

/// Standard normal CDF.
inline double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

/// Distribution-free violation bound exp(-beta^2 / 2).
inline double probability_bound(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("probability_bound: beta must be >= 0");
  return std::exp(-0.5 * beta * beta);
}

struct ReliabilityEntry {
  std::size_t row = 0;
  double conic_lhs = 0.0;
  double margin = 0.0;     // b - conic_lhs; negative when violated
  double beta_true = 0.0;
  double p_exact = 0.0;    // Phi(-beta_true)
  double p_bound = 1.0;    // exp(-beta_true^2 / 2), 1 when beta_true < 0
  bool feasible = false;
};

using ReliabilityReport = std::vector<ReliabilityEntry>;

inline ReliabilityReport report(const RobustProblem& problem, std::span<const double> x,
                                double feas_tol = SolverConfig{}.feas_tol) {
  if (x.size() != problem.num_vars()) throw std::invalid_argument("report: x has wrong length");
  ReliabilityReport out;
  out.reserve(problem.rows.size());
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    const auto& row = problem.rows[i];
    ReliabilityEntry e;
    e.row = i;
    e.conic_lhs = conic_lhs(row, x);
    e.margin = row.b - e.conic_lhs;
    e.beta_true = reliability_index(row, x);
    if (std::isinf(e.beta_true)) e.p_exact = e.beta_true > 0 ? 0.0 : 1.0;
    else e.p_exact = normal_cdf(-e.beta_true);
    e.p_bound = e.beta_true >= 0.0 ? probability_bound(e.beta_true) : 1.0;
    e.feasible = e.conic_lhs <= row.b + feas_tol * (1.0 + std::abs(row.b));
    out.push_back(e);
  }
  return out;
}

}  // namespace robustcut

#endif  // ROBUSTCUT_RELIABILITY_HPP
