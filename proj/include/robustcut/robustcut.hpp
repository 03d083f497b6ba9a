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

#ifndef ROBUSTCUT_ROBUSTCUT_HPP
#define ROBUSTCUT_ROBUSTCUT_HPP

#include "robustcut/budget.hpp"
#include "robustcut/cutting_plane.hpp"
#include "robustcut/generators.hpp"
#include "robustcut/io.hpp"
#include "robustcut/linalg.hpp"
#include "robustcut/milp.hpp"
#include "robustcut/problem.hpp"
#include "robustcut/reliability.hpp"
#include "robustcut/types.hpp"

#endif  // ROBUSTCUT_ROBUSTCUT_HPP
