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

#ifndef ROBUSTCUT_TYPES_HPP
#define ROBUSTCUT_TYPES_HPP

#include <cstddef>
#include <limits>
#include <string_view>

namespace robustcut {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { Maximize, Minimize };
enum class VarKind { Continuous, Integer };

/// Which rows receive a tangent cut after an infeasible master iterate.
enum class CutPolicy {
  AllRows,       // one cut per row per iteration
  ViolatedOnly,  // only rows whose conic constraint is violated
};

/// Tolerances and limits shared by the cut loop and the MILP engine.
struct SolverConfig {
  double eps_stall = 1e-8;  // stop when ||x_k - x_{k-1}|| < eps_stall
  double feas_tol = 1e-6;   // conic feasibility, relative to 1 + |b|
  int max_iter = 100;
  CutPolicy cut_policy = CutPolicy::AllRows;
  double int_tol = 1e-6;
  std::size_t node_limit = 1'000'000;
};

inline constexpr std::string_view to_string(Sense s) {
  return s == Sense::Maximize ? "max" : "min";
}

inline constexpr std::string_view to_string(CutPolicy p) {
  return p == CutPolicy::AllRows ? "all" : "violated";
}

}  // namespace robustcut

#endif  // ROBUSTCUT_TYPES_HPP
