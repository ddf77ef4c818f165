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

#include "kakeya/ball.hpp"
#include "kakeya/hpolytope.hpp"
#include "kakeya/shape.hpp"

namespace kakeya {

/// Chebyshev LP output.  The radius is signed: negative values are the depth
/// of the least-infeasible point of an empty constraint set, which is what
/// the fit oracle uses as its margin.
struct ChebyshevResult {
  Vector center;
  double radius;
};

/// maximize r s.t. <a_i, c> + r |a_i| <= b_i.  Always feasible; throws
/// Unbounded when Q is unbounded in the inradius sense.
ChebyshevResult chebyshev_lp(const HPolytope& q);

/// Largest inscribed ball.  Throws DegenerateShape when Q has empty
/// interior.  Centers need not be unique (a rectangle has a segment of
/// them); the simplex vertex reached deterministically is returned.
Ball chebyshev_center(const HPolytope& q);

/// Dispatch over carriers: polygons and 3D polytopes convert to halfspace
/// form first, a ball is its own inball.
Ball chebyshev_center(const Shape& q);

/// Interior reference point for centering: the Chebyshev center where one
/// exists, the vertex average for degenerate polygons (segment midpoint,
/// the point itself).
Vector centering_point(const Shape& s);

/// Erosion Q (-) P: the exact set of translations t with P + t inside Q.
/// Same normals as Q, offsets reduced by the support of P.  The result may
/// be empty.
HPolytope erosion(const HPolytope& q, const Shape& p);

struct MinWidthResult {
  double width;
  Vector direction;  // unit direction achieving the minimum width
};

/// Smallest width.  d = 2: exact rotating calipers (the minimum is attained
/// at an edge normal).  d = 3: exact enumeration over facet normals and
/// pairwise edge cross products, which covers the facet/edge-edge
/// antipodality cases; `approximate` switches to a sampled-sphere search
/// with local refinement for large inputs.
MinWidthResult min_width(const Shape& q, bool approximate = false);

}  // namespace kakeya
