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

#ifndef ROBUSTCUT_CUTTING_PLANE_HPP
#define ROBUSTCUT_CUTTING_PLANE_HPP

// Outer-approximation decomposition for the robust counterpart.
//
// The master problem is a MILP holding the nominal rows plus every tangent
// cut generated so far. Each worst-case subproblem
//     max a~^T x  over  (a~ - a)^T Sigma^{-1} (a~ - a) <= beta^2
// has the closed-form maximizer  a + beta * Sigma x / sqrt(x^T Sigma x),
// whose hyperplane touches the conic constraint at x. The loop stops once
// the master iterate satisfies every conic row, or when iterates stall.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "robustcut/milp.hpp"
#include "robustcut/problem.hpp"
#include "robustcut/reliability.hpp"

namespace robustcut {

/// Tangent hyperplane  a_hat^T x <= rhs  for one row, over the row support.
struct Cut {
  std::size_t row_index = 0;
  std::vector<std::size_t> support;
  std::vector<double> a_hat;
  double rhs = 0.0;
  int created_at_iter = 0;
  std::vector<double> generated_at;  // full iterate

  double lhs(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < support.size(); ++k) s += a_hat[k] * x[support[k]];
    return s;
  }
};

/// Worst-case coefficients of `row` at `x`. When x carries no variance the
/// nominal coefficients are the worst case.
inline Cut worst_case_row(const EllipsoidalRow& row, std::span<const double> x,
                          std::size_t row_index = 0, int iter = 0) {
  Cut cut{row_index, row.support, row.a, row.b, iter, std::vector<double>(x.begin(), x.end())};
  if (row.beta == 0.0) return cut;
  const auto xs = row.gather(x);
  const double var = quad_form(row.cov, xs);
  if (!(var > 0.0)) return cut;
  const auto sx = mat_vec(row.cov, xs);
  const double scale = row.beta / std::sqrt(var);
  for (std::size_t k = 0; k < sx.size(); ++k) cut.a_hat[k] += scale * sx[k];
  return cut;
}

enum class StopDecision { Continue, ConicOptimal, Stalled };

/// `violations` holds the magnitudes of violated conic rows at `x_now`.
inline StopDecision check_stop(std::span<const double> x_now,
                               std::optional<std::span<const double>> x_prev,
                               std::span<const double> violations, const SolverConfig& config) {
  if (violations.empty()) return StopDecision::ConicOptimal;
  if (x_prev && distance(x_now, *x_prev) < config.eps_stall) return StopDecision::Stalled;
  return StopDecision::Continue;
}

enum class SolveStatus { ConicOptimal, Stalled, IterLimit, MasterInfeasible, MasterUnbounded };

inline constexpr std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::ConicOptimal: return "ConicOptimal";
    case SolveStatus::Stalled: return "Stalled";
    case SolveStatus::IterLimit: return "IterLimit";
    case SolveStatus::MasterInfeasible: return "MasterInfeasible";
    case SolveStatus::MasterUnbounded: return "MasterUnbounded";
  }
  return "?";
}

struct RowViolation {
  std::size_t row;
  double amount;  // conic_lhs - b
};

struct IterationRecord {
  int iter = 0;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<RowViolation> violated;
  std::size_t cuts_added = 0;

  double max_violation() const {
    double m = 0.0;
    for (const auto& v : violated) m = std::max(m, v.amount);
    return m;
  }
};

struct SolveReport {
  std::vector<IterationRecord> iterations;
  SolveStatus final_status = SolveStatus::IterLimit;
  std::vector<double> final_x;
  double final_objective = 0.0;
  ReliabilityReport reliability;
  std::vector<Cut> cuts;  // every cut added to the master, in order
  std::size_t milp_nodes = 0;
};

namespace detail {

inline LinearRow nominal_linear_row(const EllipsoidalRow& r) { return {r.support, r.a, r.b}; }

inline bool same_row(const LinearRow& a, const Cut& c) {
  if (a.support != c.support || a.rhs != c.rhs) return false;
  for (std::size_t k = 0; k < a.coef.size(); ++k)
    if (std::abs(a.coef[k] - c.a_hat[k]) > 1e-12) return false;
  return true;
}

}  // namespace detail

/// Runs the decomposition loop on a validated problem.
inline SolveReport solve(const RobustProblem& problem, const SolverConfig& config = {}) {
  SolveReport rep;
  MilpModel master;
  master.sense = problem.sense;
  master.c = problem.c;
  master.lb = problem.lb;
  master.ub = problem.ub;
  master.kind = problem.kind;
  // Master rows generated from each robust row, for duplicate suppression.
  std::vector<std::vector<std::size_t>> rows_of(problem.rows.size());
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    rows_of[i].push_back(master.rows.size());
    master.rows.push_back(detail::nominal_linear_row(problem.rows[i]));
  }

  std::vector<double> x_prev;
  for (int iter = 1; iter <= config.max_iter; ++iter) {
    const auto sol = solve_milp(master, config);
    rep.milp_nodes += sol.node_count;
    if (sol.status != MilpStatus::Optimal) {
      switch (sol.status) {
        case MilpStatus::Infeasible: rep.final_status = SolveStatus::MasterInfeasible; break;
        case MilpStatus::Unbounded: rep.final_status = SolveStatus::MasterUnbounded; break;
        default: rep.final_status = SolveStatus::IterLimit; break;
      }
      return rep;
    }

    IterationRecord rec;
    rec.iter = iter;
    rec.x = sol.x;
    rec.objective = problem.objective(sol.x);
    std::vector<double> amounts;
    for (std::size_t i = 0; i < problem.rows.size(); ++i) {
      const auto& row = problem.rows[i];
      if (!conic_feasible(row, sol.x, config.feas_tol)) {
        rec.violated.push_back({i, conic_lhs(row, sol.x) - row.b});
        amounts.push_back(rec.violated.back().amount);
      }
    }

    const auto decision =
        check_stop(sol.x, x_prev.empty() ? std::nullopt : std::optional<std::span<const double>>(x_prev),
                   amounts, config);
    if (decision != StopDecision::Continue) {
      rep.iterations.push_back(std::move(rec));
      rep.final_status =
          decision == StopDecision::ConicOptimal ? SolveStatus::ConicOptimal : SolveStatus::Stalled;
      rep.final_x = sol.x;
      rep.final_objective = problem.objective(sol.x);
      rep.reliability = report(problem, sol.x, config.feas_tol);
      return rep;
    }

    // Subproblems: one closed-form worst case per selected row.
    std::vector<bool> selected(problem.rows.size(), config.cut_policy == CutPolicy::AllRows);
    for (const auto& v : rec.violated) selected[v.row] = true;
    for (std::size_t i = 0; i < problem.rows.size(); ++i) {
      if (!selected[i]) continue;
      Cut cut = worst_case_row(problem.rows[i], sol.x, i, iter);
      const bool dup = std::any_of(rows_of[i].begin(), rows_of[i].end(), [&](std::size_t r) {
        return detail::same_row(master.rows[r], cut);
      });
      if (dup) continue;
      rows_of[i].push_back(master.rows.size());
      master.rows.push_back(LinearRow{cut.support, cut.a_hat, cut.rhs});
      rep.cuts.push_back(std::move(cut));
      ++rec.cuts_added;
    }
    x_prev = sol.x;
    rep.iterations.push_back(std::move(rec));
  }

  rep.final_status = SolveStatus::IterLimit;
  if (!x_prev.empty()) {
    rep.final_x = x_prev;
    rep.final_objective = problem.objective(x_prev);
    rep.reliability = report(problem, x_prev, config.feas_tol);
  }
  return rep;
}

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Iteration trace as CSV: iter,objective,x,n_violated,max_violation,cuts_added
inline void write_trace_csv(std::ostream& os, const SolveReport& rep) {
  os << "iter,objective,x,n_violated,max_violation,cuts_added\n";
  for (const auto& it : rep.iterations) {
    os << it.iter << ',' << format_double(it.objective) << ',';
    for (std::size_t j = 0; j < it.x.size(); ++j) os << (j ? ";" : "") << format_double(it.x[j]);
    os << ',' << it.violated.size() << ',' << format_double(it.max_violation()) << ','
       << it.cuts_added << '\n';
  }
}

}  // namespace robustcut

#endif  // ROBUSTCUT_CUTTING_PLANE_HPP
