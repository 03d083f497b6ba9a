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

#ifndef ROBUSTCUT_GENERATORS_HPP
#define ROBUSTCUT_GENERATORS_HPP

// Benchmark builders (a two-variable illustrative problem and a replicated
// seven-bar truss) and an exhaustive lattice oracle for small instances.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "robustcut/budget.hpp"
#include "robustcut/problem.hpp"
#include "robustcut/reliability.hpp"

namespace robustcut {

/// Two integer variables in {0..10}, two uncertain rows with beta = 4.5.
inline RobustProblem gen_illustrative() {
  RobustProblem p;
  p.name = "illustrative";
  p.sense = Sense::Maximize;
  p.c = {3.0, 3.0};
  p.lb = {0.0, 0.0};
  p.ub = {10.0, 10.0};
  p.kind = {VarKind::Integer, VarKind::Integer};
  p.rows.push_back({{0, 1}, {1.0, 2.0}, 7.0, 4.5, DenseMatrix{{0.01, 0.016}, {0.016, 0.04}}});
  p.rows.push_back({{0, 1}, {2.0, 1.0}, 7.0, 4.5, DenseMatrix{{0.04, -0.01}, {-0.01, 0.01}}});
  return p;
}

/// Seven-bar truss block replicated n_blocks times. Row (bar i, block k):
///   w_i p + a_i x_ik + beta_i sqrt((w_i sigma_p)^2 + sigma_i^2 x_ik^2) <= 0
/// with areas x_ik drawn from an arithmetic catalogue.
struct TrussSpec {
  static constexpr std::size_t kBars = 7;

  std::size_t n_blocks = 1;
  double p = 100.0;
  double sigma_p = 40.0;
  std::array<double, kBars> yield_means{-100, -100, -200, -200, -200, -200, -200};
  std::array<double, kBars> yield_stds{15, 15, 40, 40, 40, 40, 40};
  std::array<double, kBars> betas{3.09, 3.09, 3.09, 3.09, 3.09, 3.09, 3.09};
  std::array<double, kBars> geometry{
      1.0 / (2.0 * std::numbers::sqrt3), 1.0 / (2.0 * std::numbers::sqrt3),
      1.0 / std::numbers::sqrt3,         1.0 / std::numbers::sqrt3,
      1.0 / std::numbers::sqrt3,         1.0 / std::numbers::sqrt3,
      1.0 / std::numbers::sqrt3};
  Catalogue catalogue{0.5, 0.1, 16};
  std::array<double, kBars> costs{1, 1, 1, 1, 1, 1, 1};

  // Budget variant: interval half-widths (2.5 standard deviations) and budgets.
  double load_deviation = 100.0;
  std::array<double, kBars> strength_deviations{37.5, 37.5, 100, 100, 100, 100, 100};
  std::array<double, kBars> budgets{2.0, 2.0, 1.8, 1.8, 1.8, 1.8, 1.8};

  std::size_t num_bars() const { return kBars * n_blocks; }
  static std::size_t bar_of(std::size_t index) { return index % kBars; }
};

namespace detail {

/// Truss rows for the listed (global) bar indices, in area space: one
/// continuous area per bar plus the pin, before catalogue encoding.
inline RobustProblem truss_area_problem(const TrussSpec& spec, const std::vector<std::size_t>& bars) {
  RobustProblem p;
  p.sense = Sense::Minimize;
  for (std::size_t t = 0; t < bars.size(); ++t) {
    const std::size_t i = TrussSpec::bar_of(bars[t]);
    p.add_variable(spec.costs[i], spec.catalogue.start, spec.catalogue.last(), VarKind::Continuous);
    const double sd = spec.yield_stds[i];
    p.rows.push_back({{t}, {spec.yield_means[i]}, 0.0, spec.betas[i], DenseMatrix{{sd * sd}}});
  }
  std::optional<std::size_t> pin;
  for (std::size_t t = 0; t < bars.size(); ++t) {
    const std::size_t i = TrussSpec::bar_of(bars[t]);
    const double w = spec.geometry[i];
    auto pinned = pin_constant_term(std::move(p), t, w * spec.p, (w * spec.sigma_p) * (w * spec.sigma_p), pin);
    p = std::move(pinned.problem);
    pin = pinned.pin;
  }
  return p;
}

inline std::vector<std::size_t> all_bars(const TrussSpec& spec) {
  if (spec.n_blocks < 1) throw std::invalid_argument("truss: n_blocks must be >= 1");
  std::vector<std::size_t> bars(spec.num_bars());
  for (std::size_t j = 0; j < bars.size(); ++j) bars[j] = j;
  return bars;
}

inline RobustProblem encode_truss(RobustProblem p, const TrussSpec& spec, std::size_t nbars) {
  const std::size_t pin = nbars;
  for (std::size_t t = 0; t < nbars; ++t) p = encode_catalogue(std::move(p), t, spec.catalogue, pin);
  return p;
}

}  // namespace detail

/// Truss in area space (continuous areas, unencoded). Variable 7k + i is bar
/// i of block k; the last variable is the load pin fixed at 1.
inline RobustProblem gen_truss_areas(const TrussSpec& spec) {
  auto p = detail::truss_area_problem(spec, detail::all_bars(spec));
  p.name = "truss_nb" + std::to_string(spec.n_blocks) + "_areas";
  return p;
}

/// Truss with catalogue-index integer variables k (area = start + step k)
/// and the load pin as last variable.
inline RobustProblem gen_truss(const TrussSpec& spec) {
  const auto bars = detail::all_bars(spec);
  auto p = detail::encode_truss(detail::truss_area_problem(spec, bars), spec, bars.size());
  p.name = "truss_nb" + std::to_string(spec.n_blocks);
  return p;
}

/// Single-bar problem (catalogue index, pin) for bar `bar` of one block.
inline RobustProblem gen_truss_bar(const TrussSpec& spec, std::size_t bar) {
  if (bar >= TrussSpec::kBars) throw std::invalid_argument("gen_truss_bar: bar out of range");
  auto p = detail::encode_truss(detail::truss_area_problem(spec, {bar}), spec, 1);
  p.name = "truss_bar" + std::to_string(bar + 1);
  return p;
}

/// Areas from a solution of gen_truss (first num_bars entries are indices).
inline std::vector<double> truss_areas(const TrussSpec& spec, std::span<const double> x) {
  std::vector<double> areas(spec.num_bars());
  for (std::size_t j = 0; j < areas.size(); ++j) areas[j] = spec.catalogue.value(x[j]);
  return areas;
}

/// Budget variant. Variables: areas x (continuous, first num_bars), catalogue
/// indices k (integer, next num_bars), then the pin. Areas are tied to the
/// indices by a pair of certain rows.
inline BudgetProblem gen_truss_budget(const TrussSpec& spec) {
  const std::size_t nb = detail::all_bars(spec).size();
  BudgetProblem p;
  p.name = "truss_nb" + std::to_string(spec.n_blocks) + "_budget";
  p.sense = Sense::Minimize;
  for (std::size_t j = 0; j < nb; ++j)
    p.add_variable(spec.costs[TrussSpec::bar_of(j)], spec.catalogue.start, spec.catalogue.last(),
                   VarKind::Continuous);
  for (std::size_t j = 0; j < nb; ++j)
    p.add_variable(0.0, 0.0, static_cast<double>(spec.catalogue.count - 1), VarKind::Integer);
  const std::size_t pin = p.add_variable(0.0, 1.0, 1.0, VarKind::Continuous);
  for (std::size_t j = 0; j < nb; ++j) {
    const std::size_t i = TrussSpec::bar_of(j);
    const double w = spec.geometry[i];
    p.rows.push_back({{pin, j},
                      {w * spec.p, spec.yield_means[i]},
                      0.0,
                      {w * spec.load_deviation, spec.strength_deviations[i]},
                      spec.budgets[i]});
  }
  for (std::size_t j = 0; j < nb; ++j) {
    const double st = spec.catalogue.step, s0 = spec.catalogue.start;
    p.rows.push_back({{j, nb + j, pin}, {1.0, -st, -s0}, 0.0, {0.0, 0.0, 0.0}, 0.0});
    p.rows.push_back({{j, nb + j, pin}, {-1.0, st, s0}, 0.0, {0.0, 0.0, 0.0}, 0.0});
  }
  return p;
}

class LatticeTooLarge : public std::runtime_error {
 public:
  explicit LatticeTooLarge(double size)
      : std::runtime_error("brute_force: lattice has " + std::to_string(size) + " points"),
        size_(size) {}
  double size() const noexcept { return size_; }

 private:
  double size_;
};

struct BruteForceResult {
  bool feasible = false;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t lattice_size = 0;
};

/// Enumerates every lattice point of an all-integer problem (variables fixed
/// by their bounds are allowed) and keeps the best conic-feasible one; ties
/// go to the lexicographically smallest point.
inline BruteForceResult brute_force(const RobustProblem& problem, double feas_tol = SolverConfig{}.feas_tol,
                                    std::size_t cap = 2'000'000) {
  const std::size_t n = problem.num_vars();
  std::vector<double> lo(n), count(n);
  double size = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (problem.lb[j] == problem.ub[j]) {
      lo[j] = problem.lb[j];
      count[j] = 1.0;
    } else if (problem.kind[j] == VarKind::Integer && std::isfinite(problem.lb[j]) &&
               std::isfinite(problem.ub[j])) {
      lo[j] = std::ceil(problem.lb[j]);
      count[j] = std::max(0.0, std::floor(problem.ub[j]) - lo[j] + 1.0);
    } else {
      throw std::invalid_argument("brute_force: variable " + std::to_string(j) +
                                  " is neither integer-bounded nor fixed");
    }
    size *= count[j];
  }
  if (size > static_cast<double>(cap)) throw LatticeTooLarge(size);

  BruteForceResult out;
  out.lattice_size = static_cast<std::size_t>(size);
  if (out.lattice_size == 0) return out;

  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(lo);
  const bool maximize = problem.sense == Sense::Maximize;
  for (;;) {
    bool ok = true;
    for (const auto& row : problem.rows)
      if (!conic_feasible(row, x, feas_tol)) {
        ok = false;
        break;
      }
    if (ok) {
      const double obj = problem.objective(x);
      if (!out.feasible || (maximize ? obj > out.objective : obj < out.objective)) {
        out.feasible = true;
        out.objective = obj;
        out.x = x;
      }
    }
    // Odometer, last variable fastest: visits points in lexicographic order.
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (static_cast<double>(++idx[j]) < count[j]) {
        x[j] = lo[j] + static_cast<double>(idx[j]);
        break;
      }
      idx[j] = 0;
      x[j] = lo[j];
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace robustcut

#endif  // ROBUSTCUT_GENERATORS_HPP
