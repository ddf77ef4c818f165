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

#include "kakeya/polygon.hpp"
#include "kakeya/vec.hpp"

namespace kakeya {

/// Edge-length vector of a mu-polygon: a convex polygon all of whose edge
/// normals belong to the regular mu-gon normal set.
///
/// Normal indexing convention (fixed and used consistently everywhere):
/// entry k corresponds to the outward unit normal at angle 2*pi*k/mu,
/// k = 0..mu-1, so mu = 4 gives the axis normals in order +x, +y, -x, -y.
/// Edges of zero length are first-class entries: every convex polygon whose
/// normals lie in the mu-gon set has a total edge-length vector.
///
/// The vector determines the polygon up to translation.  It adds under
/// Minkowski sums, scales under homothety, and rotation by 2*pi/mu acts as
/// the cyclic right shift.  The entries sum to the perimeter, and closure
/// requires the length-weighted edge directions to cancel.
struct MuVector {
  int mu = 4;                   // even, >= 4
  std::vector<double> lengths;  // mu nonnegative entries

  MuVector(int mu_, std::vector<double> lengths_);
};

/// Outward unit normal of edge slot k.
Vec2 mu_normal(int mu, int k);

/// Unit edge direction of slot k (the normal turned a quarter left, so the
/// walk is counter-clockwise).
Vec2 mu_direction(int mu, int k);

/// Reads off the edge-length vector.  Every edge normal of p must match a
/// mu-gon normal within 1e-9 rad; otherwise NotAMuPolygon.
MuVector phi(const ConvexPolygon& p, int mu);

/// Rebuilds the polygon: walk the edges in normal order from the origin,
/// dropping zero-length entries.  Throws NotClosed when the weighted edge
/// directions do not cancel.  phi(polygon_from_phi(v), mu) == v, zeros
/// included.
ConvexPolygon polygon_from_phi(const MuVector& v);

/// Action of the rotation by 2*pi/mu: cyclic right shift by one.
MuVector mu_rotate(const MuVector& v);

/// Edge-length vector of the mu-average: the constant vector with entry
/// perimeter/mu.
MuVector mu_average(const MuVector& v);

/// The mu-average (1/mu) sum of the mu rotated copies of p, computed by
/// iterated exact Minkowski sums, so it applies to polygons that are not
/// mu-polygons.  The perimeter is preserved.  The rotation step defaults to
/// 2*pi/mu and can be overridden.
ConvexPolygon mu_average(const ConvexPolygon& p, int mu);
ConvexPolygon mu_average(const ConvexPolygon& p, int mu, double step_angle);

/// Inscribed mu-polygon approximation: circumscribe p by the mu-gon normal
/// fan at p's support values, then binary-search (40 iterations) the largest
/// scaled copy about p's Chebyshev center that is verifiably contained in p.
/// The perimeter deficit vanishes as mu grows.
ConvexPolygon inner_mu_polygon(const ConvexPolygon& p, int mu);

}  // namespace kakeya
