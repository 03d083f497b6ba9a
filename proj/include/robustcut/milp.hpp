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

#ifndef ROBUSTCUT_MILP_HPP
#define ROBUSTCUT_MILP_HPP

// Self-contained MILP engine for master problems.
//
// LP relaxations are solved with a dense-tableau, bounded-variable primal
// simplex (two phases, Dantzig pricing with a Bland fallback). Integrality
// is enforced with best-bound branch and bound on the most fractional
// variable. Before either, variables fixed by their bounds are substituted
// out and the model is split into independent blocks (connected components
// of the variable/row incidence graph), each solved on its own.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "robustcut/types.hpp"

namespace robustcut {

/// sum_k coef[k] * x[support[k]] <= rhs
struct LinearRow {
  std::vector<std::size_t> support;
  std::vector<double> coef;
  double rhs = 0.0;

  double lhs(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < support.size(); ++k) s += coef[k] * x[support[k]];
    return s;
  }
};

struct MilpModel {
  Sense sense = Sense::Maximize;
  std::vector<double> c;
  std::vector<double> lb;
  std::vector<double> ub;
  std::vector<VarKind> kind;
  std::vector<LinearRow> rows;

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

enum class MilpStatus { Optimal, Infeasible, Unbounded, IterLimit };

inline constexpr std::string_view to_string(MilpStatus s) {
  switch (s) {
    case MilpStatus::Optimal: return "Optimal";
    case MilpStatus::Infeasible: return "Infeasible";
    case MilpStatus::Unbounded: return "Unbounded";
    case MilpStatus::IterLimit: return "IterLimit";
  }
  return "?";
}

struct MilpSolution {
  MilpStatus status = MilpStatus::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t node_count = 0;
  std::size_t lp_iterations = 0;
};

/// Row feasibility tolerance used throughout the engine.
inline double row_tolerance(double rhs) { return 1e-7 * (1.0 + std::abs(rhs)); }

/// Appends rows to a copy of `model`; existing rows are left untouched.
inline MilpModel add_rows(MilpModel model, std::span<const LinearRow> new_rows) {
  for (const auto& r : new_rows) {
    if (r.support.size() != r.coef.size())
      throw std::invalid_argument("add_rows: support and coefficient lengths differ");
    for (std::size_t j : r.support)
      if (j >= model.num_vars()) throw std::invalid_argument("add_rows: support index out of range");
    model.rows.push_back(r);
  }
  return model;
}

namespace detail {

/// Dense bounded-variable primal simplex for
///   maximize c^T x  s.t.  A x <= b,  lo <= x <= hi.
class BoundedSimplex {
 public:
  struct Result {
    MilpStatus status = MilpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    std::size_t iterations = 0;
  };

  /// `A` is row-major m x n.
  BoundedSimplex(std::size_t m, std::size_t n, std::span<const double> A, std::span<const double> b,
                 std::span<const double> c, std::span<const double> lo, std::span<const double> hi)
      : m_(m), n_(n), A_(A), b_(b), c_(c), lo_in_(lo), hi_in_(hi) {}

  Result run() {
    setup();
    Result res;
    if (num_art_ > 0) {
      std::vector<double> cost(cols_, 0.0);
      for (std::size_t j = first_art_; j < cols_; ++j) cost[j] = -1.0;
      const MilpStatus st = iterate(cost);
      res.iterations = iterations_;
      if (st == MilpStatus::IterLimit) {
        res.status = st;
        return res;
      }
      double infeas = 0.0;
      for (std::size_t j = first_art_; j < cols_; ++j) infeas += std::max(0.0, x_[j]);
      double bscale = 1.0;
      for (double v : b_) bscale = std::max(bscale, std::abs(v));
      if (infeas > 1e-9 * bscale) {
        res.status = MilpStatus::Infeasible;
        return res;
      }
      for (std::size_t j = first_art_; j < cols_; ++j) {
        hi_[j] = 0.0;
        if (pos_[j] < 0) {
          x_[j] = 0.0;
          state_[j] = AtLower;
        }
      }
      refresh_basics();
    }
    std::vector<double> cost(cols_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = c_[j];
    const MilpStatus st = iterate(cost);
    res.iterations = iterations_;
    res.status = st;
    if (st != MilpStatus::Optimal) return res;
    res.x.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
    // Basic values can drift by round-off past their bounds.
    for (std::size_t j = 0; j < n_; ++j) res.x[j] = std::clamp(res.x[j], lo_[j], hi_[j]);
    res.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) res.objective += c_[j] * res.x[j];
    return res;
  }

 private:
  enum State { Basic, AtLower, AtUpper, FreeZero };

  static constexpr double kPivotTol = 1e-9;
  static constexpr double kCostTol = 1e-9;
  static constexpr std::size_t kDegenerateLimit = 1000;

  double& T(std::size_t i, std::size_t j) { return tab_[i * cols_ + j]; }
  double T(std::size_t i, std::size_t j) const { return tab_[i * cols_ + j]; }

  void setup() {
    // Structurals start at a finite bound (or zero when free).
    std::vector<double> x0(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (std::isfinite(lo_in_[j])) x0[j] = lo_in_[j];
      else if (std::isfinite(hi_in_[j])) x0[j] = hi_in_[j];
      else x0[j] = 0.0;
    }
    std::vector<double> resid(m_);
    num_art_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      double r = b_[i];
      for (std::size_t j = 0; j < n_; ++j) r -= A_[i * n_ + j] * x0[j];
      resid[i] = r;
      if (r < 0.0) ++num_art_;
    }
    first_art_ = n_ + m_;
    cols_ = n_ + m_ + num_art_;
    tab_.assign(m_ * cols_, 0.0);
    rhs_.assign(m_, 0.0);
    lo_.assign(cols_, 0.0);
    hi_.assign(cols_, kInf);
    x_.assign(cols_, 0.0);
    state_.assign(cols_, AtLower);
    pos_.assign(cols_, -1);
    basis_.assign(m_, 0);

    for (std::size_t j = 0; j < n_; ++j) {
      lo_[j] = lo_in_[j];
      hi_[j] = hi_in_[j];
      x_[j] = x0[j];
      if (std::isfinite(lo_[j])) state_[j] = AtLower;
      else if (std::isfinite(hi_[j])) state_[j] = AtUpper;
      else state_[j] = FreeZero;
    }
    std::size_t art = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = resid[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) T(i, j) = sign * A_[i * n_ + j];
      T(i, n_ + i) = sign;
      rhs_[i] = sign * b_[i];
      if (resid[i] < 0.0) {
        T(i, art) = 1.0;
        set_basic(i, art);
        ++art;
      } else {
        set_basic(i, n_ + i);
      }
    }
    refresh_basics();
    iterations_ = 0;
  }

  void set_basic(std::size_t row, std::size_t col) {
    basis_[row] = col;
    pos_[col] = static_cast<std::ptrdiff_t>(row);
    state_[col] = Basic;
  }

  void refresh_basics() {
    for (std::size_t i = 0; i < m_; ++i) {
      double v = rhs_[i];
      for (std::size_t j = 0; j < cols_; ++j)
        if (pos_[j] < 0 && x_[j] != 0.0) v -= T(i, j) * x_[j];
      x_[basis_[i]] = v;
    }
  }

  bool can_increase(std::size_t j) const {
    return (state_[j] == AtLower && hi_[j] > lo_[j]) || state_[j] == FreeZero;
  }
  bool can_decrease(std::size_t j) const {
    return (state_[j] == AtUpper && hi_[j] > lo_[j]) || state_[j] == FreeZero;
  }

  MilpStatus iterate(std::span<const double> cost) {
    const std::size_t cap = 20000 + 50 * (m_ + cols_);
    std::size_t degenerate = 0;
    bool bland = false;
    std::vector<double> d(cols_);
    for (;;) {
      if (iterations_ >= cap) return MilpStatus::IterLimit;
      // Reduced costs.
      for (std::size_t j = 0; j < cols_; ++j) {
        if (pos_[j] >= 0) {
          d[j] = 0.0;
          continue;
        }
        double v = cost[j];
        for (std::size_t i = 0; i < m_; ++i) v -= cost[basis_[i]] * T(i, j);
        d[j] = v;
      }
      // Pricing.
      std::ptrdiff_t enter = -1;
      double dir = 0.0;
      double best = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (pos_[j] >= 0) continue;
        double gain = 0.0;
        double dj = 0.0;
        if (d[j] > kCostTol && can_increase(j)) {
          gain = d[j];
          dj = 1.0;
        } else if (d[j] < -kCostTol && can_decrease(j)) {
          gain = -d[j];
          dj = -1.0;
        } else {
          continue;
        }
        if (bland) {
          enter = static_cast<std::ptrdiff_t>(j);
          dir = dj;
          break;
        }
        if (gain > best) {
          best = gain;
          enter = static_cast<std::ptrdiff_t>(j);
          dir = dj;
        }
      }
      if (enter < 0) return MilpStatus::Optimal;
      const auto q = static_cast<std::size_t>(enter);

      // Ratio test; ties go to the largest pivot (Bland: lowest basic index).
      double best_ratio = kInf;
      std::ptrdiff_t leave = -1;
      bool leave_to_upper = false;
      double leave_alpha = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double alpha = T(i, q) * dir;
        const std::size_t k = basis_[i];
        double ratio;
        bool to_upper;
        if (alpha > kPivotTol && std::isfinite(lo_[k])) {
          ratio = (x_[k] - lo_[k]) / alpha;
          to_upper = false;
        } else if (alpha < -kPivotTol && std::isfinite(hi_[k])) {
          ratio = (hi_[k] - x_[k]) / -alpha;
          to_upper = true;
        } else {
          continue;
        }
        ratio = std::max(ratio, 0.0);
        bool take;
        if (leave < 0 || ratio < best_ratio - 1e-12) {
          take = true;
        } else if (ratio <= best_ratio + 1e-12) {
          take = bland ? k < basis_[static_cast<std::size_t>(leave)]
                       : std::abs(alpha) > std::abs(leave_alpha);
        } else {
          take = false;
        }
        if (take) {
          best_ratio = std::min(best_ratio, ratio);
          leave = static_cast<std::ptrdiff_t>(i);
          leave_to_upper = to_upper;
          leave_alpha = alpha;
        }
      }
      double flip = kInf;
      if (std::isfinite(lo_[q]) && std::isfinite(hi_[q])) flip = hi_[q] - lo_[q];
      if (flip < best_ratio) leave = -1;
      const double theta = leave < 0 ? flip : best_ratio;
      if (!std::isfinite(theta)) return MilpStatus::Unbounded;

      ++iterations_;
      if (theta <= 1e-12) {
        if (++degenerate > kDegenerateLimit) bland = true;
      } else {
        degenerate = 0;
      }

      x_[q] += dir * theta;
      if (leave < 0) {
        // Bound flip.
        state_[q] = dir > 0 ? AtUpper : AtLower;
        x_[q] = dir > 0 ? hi_[q] : lo_[q];
        refresh_basics();
        continue;
      }
      const auto r = static_cast<std::size_t>(leave);
      const std::size_t out = basis_[r];
      pivot(r, q);
      pos_[out] = -1;
      state_[out] = leave_to_upper ? AtUpper : AtLower;
      x_[out] = leave_to_upper ? hi_[out] : lo_[out];
      set_basic(r, q);
      refresh_basics();
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    const double p = T(r, q);
    for (std::size_t j = 0; j < cols_; ++j) T(r, j) /= p;
    rhs_[r] /= p;
    T(r, q) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = T(i, q);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) T(i, j) -= f * T(r, j);
      rhs_[i] -= f * rhs_[r];
      T(i, q) = 0.0;
    }
  }

  std::size_t m_, n_;
  std::span<const double> A_, b_, c_, lo_in_, hi_in_;
  std::size_t cols_ = 0, first_art_ = 0, num_art_ = 0;
  std::vector<double> tab_, rhs_, lo_, hi_, x_;
  std::vector<State> state_;
  std::vector<std::ptrdiff_t> pos_;
  std::vector<std::size_t> basis_;
  std::size_t iterations_ = 0;
};

/// One independent block of the model with fixed variables folded into rhs.
struct Block {
  std::vector<std::size_t> vars;  // global indices, ascending
  std::vector<double> A;          // rows.size() x vars.size(), row-major
  std::vector<double> b;
  std::vector<double> c;          // maximization sense
  std::vector<double> lo, hi;
  std::vector<bool> integer;
};

struct Decomposition {
  std::vector<Block> blocks;
  std::vector<double> fixed_value;  // NaN for non-fixed variables
  bool trivially_infeasible = false;
};

inline Decomposition decompose(const MilpModel& model, double int_tol) {
  const std::size_t n = model.num_vars();
  Decomposition out;
  out.fixed_value.assign(n, std::nan(""));
  for (std::size_t j = 0; j < n; ++j) {
    if (model.lb[j] > model.ub[j]) out.trivially_infeasible = true;
    if (model.lb[j] == model.ub[j]) {
      out.fixed_value[j] = model.lb[j];
      if (model.kind[j] == VarKind::Integer &&
          std::abs(model.lb[j] - std::round(model.lb[j])) > int_tol)
        out.trivially_infeasible = true;
    }
  }
  auto is_fixed = [&](std::size_t j) { return !std::isnan(out.fixed_value[j]); };

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& r : model.rows) {
    std::ptrdiff_t first = -1;
    for (std::size_t k = 0; k < r.support.size(); ++k) {
      const std::size_t j = r.support[k];
      if (is_fixed(j) || r.coef[k] == 0.0) continue;
      if (first < 0) {
        first = static_cast<std::ptrdiff_t>(j);
      } else {
        const auto a = find(static_cast<std::size_t>(first)), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::vector<std::ptrdiff_t> block_of_root(n, -1);
  std::vector<std::size_t> local(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_fixed(j)) continue;
    const auto root = find(j);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<std::ptrdiff_t>(out.blocks.size());
      out.blocks.emplace_back();
    }
    auto& blk = out.blocks[static_cast<std::size_t>(block_of_root[root])];
    local[j] = blk.vars.size();
    blk.vars.push_back(j);
    const double sign = model.sense == Sense::Maximize ? 1.0 : -1.0;
    blk.c.push_back(sign * model.c[j]);
    blk.lo.push_back(model.lb[j]);
    blk.hi.push_back(model.ub[j]);
    blk.integer.push_back(model.kind[j] == VarKind::Integer);
  }

  // Rows are assigned in order; A is assembled after sizes are known.
  std::vector<std::vector<std::size_t>> block_rows(out.blocks.size());
  std::vector<double> folded_rhs(model.rows.size());
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    const auto& r = model.rows[i];
    double rhs = r.rhs;
    std::ptrdiff_t blk = -1;
    for (std::size_t k = 0; k < r.support.size(); ++k) {
      const std::size_t j = r.support[k];
      if (is_fixed(j)) rhs -= r.coef[k] * out.fixed_value[j];
      else if (r.coef[k] != 0.0) blk = block_of_root[find(j)];
    }
    folded_rhs[i] = rhs;
    if (blk < 0) {
      if (rhs < -row_tolerance(r.rhs)) out.trivially_infeasible = true;
    } else {
      block_rows[static_cast<std::size_t>(blk)].push_back(i);
    }
  }
  for (std::size_t bi = 0; bi < out.blocks.size(); ++bi) {
    auto& blk = out.blocks[bi];
    const std::size_t nv = blk.vars.size();
    blk.A.assign(block_rows[bi].size() * nv, 0.0);
    for (std::size_t t = 0; t < block_rows[bi].size(); ++t) {
      const auto& r = model.rows[block_rows[bi][t]];
      for (std::size_t k = 0; k < r.support.size(); ++k) {
        const std::size_t j = r.support[k];
        if (!is_fixed(j)) blk.A[t * nv + local[j]] += r.coef[k];
      }
      blk.b.push_back(folded_rhs[block_rows[bi][t]]);
    }
  }
  return out;
}

struct BlockResult {
  MilpStatus status = MilpStatus::Infeasible;
  std::vector<double> x;
  std::size_t nodes = 0;
  std::size_t lp_iterations = 0;
};

inline BoundedSimplex::Result solve_block_lp(const Block& blk, std::span<const double> lo,
                                             std::span<const double> hi) {
  const std::size_t nv = blk.vars.size();
  BoundedSimplex lp(blk.b.size(), nv, blk.A, blk.b, blk.c, lo, hi);
  return lp.run();
}

inline BlockResult branch_and_bound(const Block& blk, const SolverConfig& cfg) {
  struct Node {
    std::vector<double> lo, hi, x;
    double bound;
    std::size_t id;
  };
  struct Worse {
    bool operator()(const Node& a, const Node& b) const {
      if (a.bound != b.bound) return a.bound < b.bound;
      return a.id > b.id;
    }
  };

  BlockResult out;
  const std::size_t nv = blk.vars.size();
  std::size_t next_id = 0;
  double incumbent = -kInf;
  std::vector<double> best_x;
  bool hit_limit = false;
  bool numeric_trouble = false;

  auto prune_tol = [&] { return 1e-9 * (1.0 + std::abs(incumbent)); };

  // Most fractional integer variable, ties to the lowest index; -1 if integral.
  auto branching_var = [&](const std::vector<double>& x) {
    std::ptrdiff_t pick = -1;
    double best_score = 0.0;
    for (std::size_t j = 0; j < nv; ++j) {
      if (!blk.integer[j]) continue;
      const double f = x[j] - std::floor(x[j]);
      const double score = std::min(f, 1.0 - f);
      if (score > cfg.int_tol && score > best_score) {
        best_score = score;
        pick = static_cast<std::ptrdiff_t>(j);
      }
    }
    return pick;
  };

  auto snap = [&](std::vector<double> x) {
    for (std::size_t j = 0; j < nv; ++j)
      if (blk.integer[j]) x[j] = std::round(x[j]);
    return x;
  };

  std::priority_queue<Node, std::vector<Node>, Worse> open;

  // Solves the LP at a node; returns true if the node should be explored.
  auto evaluate = [&](std::vector<double> lo, std::vector<double> hi, bool root) -> bool {
    ++out.nodes;
    auto res = solve_block_lp(blk, lo, hi);
    out.lp_iterations += res.iterations;
    if (res.status == MilpStatus::Unbounded) {
      if (root) out.status = MilpStatus::Unbounded;
      numeric_trouble = numeric_trouble || !root;
      return false;
    }
    if (res.status == MilpStatus::IterLimit) {
      numeric_trouble = true;
      return false;
    }
    if (res.status != MilpStatus::Optimal) return false;
    if (res.objective <= incumbent + prune_tol()) return false;
    if (branching_var(res.x) < 0) {
      auto x = snap(res.x);
      double val = 0.0;
      for (std::size_t j = 0; j < nv; ++j) val += blk.c[j] * x[j];
      if (val > incumbent) {
        incumbent = val;
        best_x = std::move(x);
      }
      return false;
    }
    open.push(Node{std::move(lo), std::move(hi), std::move(res.x), res.objective, next_id++});
    return true;
  };

  evaluate(blk.lo, blk.hi, true);
  if (out.status == MilpStatus::Unbounded) return out;

  while (!open.empty()) {
    if (open.top().bound <= incumbent + prune_tol()) break;
    if (out.nodes >= cfg.node_limit) {
      hit_limit = true;
      break;
    }
    Node node = open.top();
    open.pop();
    const auto j = static_cast<std::size_t>(branching_var(node.x));
    const double v = node.x[j];
    // Floor child first.
    {
      auto hi = node.hi;
      hi[j] = std::floor(v);
      if (node.lo[j] <= hi[j]) evaluate(node.lo, std::move(hi), false);
    }
    {
      auto lo = node.lo;
      lo[j] = std::ceil(v);
      if (lo[j] <= node.hi[j]) evaluate(std::move(lo), node.hi, false);
    }
  }

  if (!best_x.empty() || (nv == 0 && incumbent > -kInf)) {
    out.status = hit_limit ? MilpStatus::IterLimit : MilpStatus::Optimal;
    out.x = std::move(best_x);
  } else if (hit_limit || numeric_trouble) {
    out.status = MilpStatus::IterLimit;
  } else {
    out.status = MilpStatus::Infeasible;
  }
  return out;
}

inline MilpSolution solve_decomposed(const MilpModel& model, const SolverConfig& cfg,
                                     bool relax) {
  const std::size_t n = model.num_vars();
  if (model.lb.size() != n || model.ub.size() != n || model.kind.size() != n)
    throw std::invalid_argument("milp: c, lb, ub and kind lengths differ");
  for (const auto& r : model.rows) {
    if (r.support.size() != r.coef.size())
      throw std::invalid_argument("milp: row support and coefficient lengths differ");
    for (std::size_t j : r.support)
      if (j >= n) throw std::invalid_argument("milp: row support index out of range");
  }

  MilpSolution sol;
  auto dec = decompose(model, relax ? kInf : cfg.int_tol);
  if (dec.trivially_infeasible) {
    sol.status = MilpStatus::Infeasible;
    return sol;
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    if (!std::isnan(dec.fixed_value[j])) x[j] = dec.fixed_value[j];

  MilpStatus status = MilpStatus::Optimal;
  bool all_have_x = true;
  auto merge = [&](MilpStatus s) {
    // Infeasible dominates, then Unbounded, then IterLimit.
    auto rank = [](MilpStatus t) {
      switch (t) {
        case MilpStatus::Infeasible: return 3;
        case MilpStatus::Unbounded: return 2;
        case MilpStatus::IterLimit: return 1;
        default: return 0;
      }
    };
    if (rank(s) > rank(status)) status = s;
  };

  for (auto& blk : dec.blocks) {
    if (relax) std::fill(blk.integer.begin(), blk.integer.end(), false);
    BlockResult br;
    if (relax) {
      auto res = solve_block_lp(blk, blk.lo, blk.hi);
      br.status = res.status;
      br.x = std::move(res.x);
      br.lp_iterations = res.iterations;
      br.nodes = 1;
    } else {
      br = branch_and_bound(blk, cfg);
    }
    sol.node_count += br.nodes;
    sol.lp_iterations += br.lp_iterations;
    merge(br.status);
    if (br.x.empty()) all_have_x = false;
    else
      for (std::size_t t = 0; t < blk.vars.size(); ++t) x[blk.vars[t]] = br.x[t];
    if (status == MilpStatus::Infeasible) break;
  }
  sol.status = status;
  if (status == MilpStatus::Optimal || (status == MilpStatus::IterLimit && all_have_x)) {
    sol.x = std::move(x);
    sol.objective = model.objective(sol.x);
  }
  return sol;
}

}  // namespace detail

/// LP relaxation: integrality flags are ignored.
inline MilpSolution solve_lp(const MilpModel& model) {
  return detail::solve_decomposed(model, SolverConfig{}, /*relax=*/true);
}

/// Exact mixed-integer optimum by best-bound branch and bound. Integer
/// variables must have finite bounds.
inline MilpSolution solve_milp(const MilpModel& model, const SolverConfig& config = {}) {
  for (std::size_t j = 0; j < model.num_vars(); ++j)
    if (model.kind[j] == VarKind::Integer &&
        (!std::isfinite(model.lb[j]) || !std::isfinite(model.ub[j])))
      throw std::invalid_argument("solve_milp: integer variable " + std::to_string(j) +
                                  " needs finite bounds");
  return detail::solve_decomposed(model, config, /*relax=*/false);
}

}  // namespace robustcut

#endif  // ROBUSTCUT_MILP_HPP
