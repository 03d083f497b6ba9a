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

#ifndef ROBUSTCUT_PROBLEM_HPP
#define ROBUSTCUT_PROBLEM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "robustcut/linalg.hpp"
#include "robustcut/types.hpp"

namespace robustcut {

/// One uncertain row  a~^T x <= b  with a~ in the ellipsoid
/// { a~ : (a~ - a)^T Sigma^{-1} (a~ - a) <= beta^2 }.
///
/// `a` and `cov` are indexed over `support`; coordinates outside the
/// support have zero nominal coefficient and zero variance.
struct EllipsoidalRow {
  std::vector<std::size_t> support;
  std::vector<double> a;
  double b = 0.0;
  double beta = 0.0;
  DenseMatrix cov;

  /// x restricted to the support.
  std::vector<double> gather(std::span<const double> x) const {
    std::vector<double> xs(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) xs[k] = x[support[k]];
    return xs;
  }

  double nominal_lhs(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < support.size(); ++k) s += a[k] * x[support[k]];
    return s;
  }

  /// x^T Sigma x over the support.
  double variance(std::span<const double> x) const { return quad_form(cov, gather(x)); }

  LowerTriangular chol() const { return cholesky(cov); }
};

/// Variables, objective and a list of rows of some kind.
template <class Row>
struct Problem {
  std::string name;
  Sense sense = Sense::Maximize;
  std::vector<double> c;
  std::vector<double> lb;
  std::vector<double> ub;
  std::vector<VarKind> kind;
  std::vector<Row> rows;

  std::size_t num_vars() const noexcept { return c.size(); }

  double objective(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * x[j];
    return s;
  }

  std::size_t add_variable(double cost, double lower, double upper, VarKind k) {
    c.push_back(cost);
    lb.push_back(lower);
    ub.push_back(upper);
    kind.push_back(k);
    return c.size() - 1;
  }
};

using RobustProblem = Problem<EllipsoidalRow>;

struct Violation {
  enum class Kind { Dimension, Bounds, NonFinite, Asymmetric, NotPsd, NegativeBeta, BadBudget };
  Kind kind;
  std::optional<std::size_t> row;
  std::optional<std::size_t> var;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

inline std::string describe(const Violation& v) {
  std::string s;
  if (v.row) s += "row " + std::to_string(*v.row) + ": ";
  if (v.var) s += "variable " + std::to_string(*v.var) + ": ";
  return s + v.message;
}

namespace detail {

template <class Row>
void validate_variables(const Problem<Row>& p, ValidationReport& out) {
  const std::size_t n = p.c.size();
  if (p.lb.size() != n || p.ub.size() != n || p.kind.size() != n) {
    out.push_back({Violation::Kind::Dimension, {}, {},
                   "c, lb, ub and integer must all have length " + std::to_string(n)});
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(p.c[j]))
      out.push_back({Violation::Kind::NonFinite, {}, j, "objective coefficient is not finite"});
    if (std::isnan(p.lb[j]) || std::isnan(p.ub[j]))
      out.push_back({Violation::Kind::NonFinite, {}, j, "bound is NaN"});
    else if (p.lb[j] > p.ub[j])
      out.push_back({Violation::Kind::Bounds, {}, j,
                     "lower bound " + std::to_string(p.lb[j]) + " exceeds upper bound " +
                         std::to_string(p.ub[j])});
  }
}

/// Support indices in range and unique; coefficient vector matches.
inline bool validate_support(std::span<const std::size_t> support, std::size_t coef_size,
                             std::size_t n, std::size_t row, ValidationReport& out) {
  bool ok = true;
  if (coef_size != support.size()) {
    out.push_back({Violation::Kind::Dimension, row, {},
                   "coefficient vector length differs from support length"});
    ok = false;
  }
  std::vector<std::size_t> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    out.push_back({Violation::Kind::Dimension, row, {}, "support has duplicate indices"});
    ok = false;
  }
  for (std::size_t j : support)
    if (j >= n) {
      out.push_back({Violation::Kind::Dimension, row, j, "support index out of range"});
      ok = false;
    }
  return ok;
}

}  // namespace detail

/// Lists every problem with the model. An empty report means valid.
inline ValidationReport validate(const RobustProblem& p) {
  ValidationReport out;
  detail::validate_variables(p, out);
  const std::size_t n = p.c.size();
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& r = p.rows[i];
    if (!detail::validate_support(r.support, r.a.size(), n, i, out)) continue;
    if (r.cov.size() != r.support.size()) {
      out.push_back({Violation::Kind::Dimension, i, {}, "covariance dimension differs from support"});
      continue;
    }
    if (!std::isfinite(r.b) || !std::isfinite(r.beta) ||
        std::any_of(r.a.begin(), r.a.end(), [](double v) { return !std::isfinite(v); }))
      out.push_back({Violation::Kind::NonFinite, i, {}, "non-finite coefficient, rhs or beta"});
    if (r.beta < 0.0) out.push_back({Violation::Kind::NegativeBeta, i, {}, "beta is negative"});
    if (!r.cov.is_symmetric()) {
      out.push_back({Violation::Kind::Asymmetric, i, {}, "covariance is not symmetric"});
      continue;
    }
    try {
      (void)cholesky(r.cov);
    } catch (const NotPositiveSemidefinite& e) {
      out.push_back({Violation::Kind::NotPsd, i, {},
                     std::string("covariance is not positive semidefinite (") + e.what() + ")"});
    }
  }
  return out;
}

struct PinnedProblem {
  RobustProblem problem;
  std::size_t pin = 0;  // index of the variable fixed at 1
};

/// Installs an uncertain constant term into `row` as a coefficient on an
/// auxiliary variable fixed at 1. A fresh pin variable is appended unless an
/// existing one is passed.
inline PinnedProblem pin_constant_term(RobustProblem problem, std::size_t row, double coefficient,
                                       double variance,
                                       std::optional<std::size_t> existing_pin = std::nullopt) {
  if (!std::isfinite(coefficient)) throw std::invalid_argument("pin_constant_term: coefficient not finite");
  if (!(variance >= 0.0)) throw std::invalid_argument("pin_constant_term: variance must be >= 0");
  if (row >= problem.rows.size()) throw std::invalid_argument("pin_constant_term: row out of range");

  std::size_t pin;
  if (existing_pin) {
    pin = *existing_pin;
    if (pin >= problem.num_vars() || problem.lb[pin] != 1.0 || problem.ub[pin] != 1.0)
      throw std::invalid_argument("pin_constant_term: existing pin must be a variable fixed at 1");
  } else {
    pin = problem.add_variable(0.0, 1.0, 1.0, VarKind::Continuous);
  }

  auto& r = problem.rows[row];
  if (std::find(r.support.begin(), r.support.end(), pin) != r.support.end())
    throw std::invalid_argument("pin_constant_term: row already carries the pin variable");
  const std::size_t k = r.support.size();
  DenseMatrix cov(k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cov(i, j) = r.cov(i, j);
  cov(k, k) = variance;
  r.support.push_back(pin);
  r.a.push_back(coefficient);
  r.cov = std::move(cov);
  return {std::move(problem), pin};
}

/// Arithmetic catalogue {start, start + step, ..., start + (count-1) step}.
struct Catalogue {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 1;

  double value(double index) const { return start + step * index; }
  double last() const { return value(static_cast<double>(count - 1)); }
};

/// Rewrites continuous variable `var` as  start * pin + step * k  with k an
/// integer index in [0, count - 1], reusing slot `var` for k. Rows, row
/// covariances and the objective are transformed so every expression keeps
/// its value at pin = 1.
inline RobustProblem encode_catalogue(RobustProblem problem, std::size_t var,
                                      const Catalogue& cat, std::size_t pin) {
  if (var >= problem.num_vars() || pin >= problem.num_vars() || var == pin)
    throw std::invalid_argument("encode_catalogue: bad variable index");
  if (problem.lb[pin] != 1.0 || problem.ub[pin] != 1.0)
    throw std::invalid_argument("encode_catalogue: pin must be fixed at 1");
  if (!(cat.step > 0.0) || cat.count == 0) throw std::invalid_argument("encode_catalogue: bad catalogue");

  for (auto& r : problem.rows) {
    auto it = std::find(r.support.begin(), r.support.end(), var);
    if (it == r.support.end()) continue;
    const std::size_t pv = static_cast<std::size_t>(it - r.support.begin());
    auto jt = std::find(r.support.begin(), r.support.end(), pin);
    std::size_t pp;
    if (jt == r.support.end()) {
      const std::size_t k = r.support.size();
      DenseMatrix cov(k + 1);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) cov(i, j) = r.cov(i, j);
      r.cov = std::move(cov);
      r.support.push_back(pin);
      r.a.push_back(0.0);
      pp = k;
    } else {
      pp = static_cast<std::size_t>(jt - r.support.begin());
    }
    // y = M z with M = I except y_var = step * z_var + start * z_pin.
    const std::size_t k = r.support.size();
    DenseMatrix M = DenseMatrix::identity(k);
    M(pv, pv) = cat.step;
    M(pv, pp) = cat.start;
    r.a[pp] += cat.start * r.a[pv];
    r.a[pv] *= cat.step;
    DenseMatrix SM(k), out(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < k; ++t) SM(i, j) += r.cov(i, t) * M(t, j);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < k; ++t) out(i, j) += M(t, i) * SM(t, j);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j) out(j, i) = out(i, j);
    r.cov = std::move(out);
  }
  problem.c[pin] += cat.start * problem.c[var];
  problem.c[var] *= cat.step;
  problem.lb[var] = 0.0;
  problem.ub[var] = static_cast<double>(cat.count - 1);
  problem.kind[var] = VarKind::Integer;
  return problem;
}

}  // namespace robustcut

#endif  // ROBUSTCUT_PROBLEM_HPP
