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

#include "kakeya/hpolytope.hpp"
#include "kakeya/rng.hpp"
#include "kakeya/rotation.hpp"
#include "kakeya/shape.hpp"

namespace kakeya {

/// Verdict of a fixed-orientation translation fit.  The margin is the
/// Chebyshev radius of the erosion Q (-) rho(P): the radius of the largest
/// ball of translations around the witness, negative (a depth) when no
/// translation works.  fits <=> margin >= -1e-9.
struct FitReport {
  bool fits;
  double margin;
  Vector translation;  // witness (Chebyshev center of the erosion)
};

/// Does some translate of rho(P) lie inside Q?  The witness translation is
/// the Chebyshev center of the erosion, which maximizes the reported margin.
FitReport fits_translated(const Shape& p, const HPolytope& q,
                          const Rotation& rho);

struct SweepReport {
  int samples = 0;
  bool all_fit = false;      // every sampled orientation fits
  double worst_margin = 0.0;
  double worst_angle = 0.0;  // rotation angle of the worst sample (radians)
  int worst_index = 0;
  bool certified = false;    // rigorous membership in K(Q); 2D only
  double lipschitz_bound = 0.0;
};

/// Samples n orientations (uniform angle grid in 2D, seeded uniform
/// quaternions in 3D) and fits each one.  With certify = true (2D only) the
/// per-sample margins are compared against L * (grid spacing)/2, where L is
/// the circumradius of P about its Chebyshev center (0 for an exact ball,
/// which is rotation-invariant): support functions move at most L per
/// radian, so passing the comparison proves fit at every intermediate
/// orientation.  3D sweeps are statistical evidence only and never certify.
SweepReport sweep_fit(const Shape& p, const HPolytope& q, int n, bool certify,
                      std::uint64_t seed = kDefaultQuatSeed);

/// Largest alpha such that alpha * P passes the n-sample sweep, by binary
/// search (48 iterations) from the axis-width upper bound.  Returns 0 when P
/// never fits.
double max_scale(const Shape& p, const HPolytope& q, int n,
                 std::uint64_t seed = kDefaultQuatSeed);

}  // namespace kakeya
