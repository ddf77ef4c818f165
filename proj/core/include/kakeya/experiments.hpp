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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kakeya/polygon.hpp"
#include "kakeya/polytope3.hpp"
#include "kakeya/rng.hpp"
#include "kakeya/shape.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

struct TrialRecord {
  std::uint64_t trial = 0;
  std::string digest;  // 16-hex FNV-1a over the trial inputs
  bool failed = false;
  std::vector<std::pair<std::string, double>> quantities;
};

/// Outcome of a randomized or scripted verification suite.  failures counts
/// the trials whose violation exceeded the stated tolerance; reports with
/// failures = 0 are bit-for-bit reproducible from (name, seed, tolerances).
struct ExperimentReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_violation = 0.0;
  std::vector<TrialRecord> details;
};

/// Hull of n points drawn uniformly in the unit disk.  Retries up to 16
/// times on a degenerate hull, then throws DegenerateShape.
ConvexPolygon random_convex_polygon(int n, std::uint64_t seed);

/// Hull of n points drawn uniformly on the unit sphere, n >= 4.
VPolytope3 random_convex_polytope3(int n, std::uint64_t seed);

/// Reuleaux triangle of the given width as three sampled circular arcs
/// (counter-clockwise, inscribed in the true body).
ConvexPolygon reuleaux_triangle(double width, int points_per_arc = 256);

/// Containment of the Minkowski interpolation: random P0, P1 inside a
/// random Q stay inside along the whole lambda grid, and the rotated
/// variant with the averaged witness translation stays inside too.
ExperimentReport check_interpolation_fit(
    int trials, std::uint64_t seed,
    const Tolerances& tol = default_tolerances());

/// Midpoint measure gain: for bodies rescaled to equal measure, the
/// half-way Minkowski combination has at least the common measure, with
/// equality on homothets and strict gain on rotated non-homothet pairs.
/// (w, d) picks the measure: (0,2) area, (0,3) volume, (1,3) surface.
ExperimentReport check_halfway_gain(int trials, std::uint64_t seed, int w,
                                    int d,
                                    const Tolerances& tol = default_tolerances());

/// Concavity of the rooted measure along the 11-point lambda grid
/// (midpoint concavity on consecutive triples); homothet pairs must be
/// linear within 1e-7.
ExperimentReport check_bm_concavity(int trials, std::uint64_t seed, int w,
                                    int d,
                                    const Tolerances& tol = default_tolerances());

/// Perimeter additivity of planar Minkowski sums at 1e-12 relative.
ExperimentReport check_perimeter_additivity(
    int trials, std::uint64_t seed,
    const Tolerances& tol = default_tolerances());

/// Edge-length vector algebra: additivity under sums, homogeneity under
/// scaling, cyclic shift under rotation by 2*pi/mu, averaging, and the
/// perimeter preservation of the polygon-level average.
ExperimentReport check_phi_algebra(int trials, std::uint64_t seed,
                                   const Tolerances& tol = default_tolerances());

/// If P fits at the mu grid orientations, its mu-average fits at the
/// identity orientation.
ExperimentReport check_mu_average_fit(int trials, std::uint64_t seed,
                                      const Tolerances& tol = default_tolerances());

/// Named candidates against the inscribed ball of Q: candidates must pass
/// the sweep (precondition), then measure at most the ball's (strictly less
/// area for non-balls, perimeter at most the ball's with equality allowed).
ExperimentReport check_main_theorem(const Shape& q,
                                    const std::vector<Shape>& candidates,
                                    int n,
                                    const Tolerances& tol = default_tolerances());

/// Randomized variant: members of K(unit square) manufactured by shrinking
/// random polygons to 0.999 times their max scale.
ExperimentReport check_main_theorem_random(
    int trials, std::uint64_t seed, int n,
    const Tolerances& tol = default_tolerances());

/// Scenario output: the report plus the shapes a figure should show.
struct ScenarioResult {
  ExperimentReport report;
  std::vector<std::pair<std::string, Shape>> figures;
};

/// Runs a named end-to-end scenario: square-reuleaux, triangle-width,
/// square-rotor-scale, or mu-average-demo.  Throws UnknownScenario.
ScenarioResult reproduce(const std::string& scenario,
                         const Tolerances& tol = default_tolerances());

/// Registered scenario names, in documentation order.
const std::vector<std::string>& scenario_names();

}  // namespace kakeya
