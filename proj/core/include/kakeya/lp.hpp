// Copyright 2026 The Kakeya Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "kakeya/vec.hpp"

namespace kakeya {

/// maximize <objective, x>  subject to  <normals[i], x> <= offsets[i],
/// x free.  Dimensions: m constraints over n variables.
struct LpProblem {
  std::vector<Vector> normals;
  Vector offsets;
  Vector objective;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Vector point;   // a vertex solution when optimal
  double value = 0.0;
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule.  Free
/// variables are split into positive parts internally, so the returned point
/// is a vertex of the constraint polyhedron.  Deterministic: identical input
/// bits give identical output bits.
///
/// Throws InvalidParameter on malformed/non-finite data and NumericalFailure
/// when the pivot budget is exhausted.
LpSolution solve_lp(const LpProblem& p);

}  // namespace kakeya
