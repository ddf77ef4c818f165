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

namespace kakeya {

/// One knob for the whole inequality suite.  Checks that compare measured
/// quantities against analytic values use `abs` for absolute comparisons and
/// `rel` for relative ones.
struct Tolerances {
  double abs = 1e-9;
  double rel = 1e-12;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

// Internal geometric epsilons.  These are structural constants of the
// algorithms, not user-facing comparison tolerances.

/// A vertex is dropped when the triangle spanned with its neighbours has area
/// below this fraction of the bounding-box area.
inline constexpr double kCollinearAreaRel = 1e-12;

/// Two edges whose outward-normal angles differ by less than this merge into
/// a single edge during the Minkowski edge merge (radians).
inline constexpr double kParallelAngleTol = 1e-12;

/// An edge normal must match a regular mu-gon normal within this angle to be
/// accepted by phi (radians).
inline constexpr double kMuNormalAngleTol = 1e-9;

/// Edge-length vectors must close up to this fraction of the total length.
inline constexpr double kClosureRel = 1e-9;

/// Simplex pivoting / feasibility threshold.
inline constexpr double kLpEps = 1e-9;

/// A placement counts as a fit when its margin is above -kFitMarginTol.
inline constexpr double kFitMarginTol = 1e-9;

/// Signed-slack allowance in exact containment checks (floating-point noise
/// only, far below any quantity the tests compare).
inline constexpr double kContainsTol = 1e-12;

}  // namespace kakeya
