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
#include "kakeya/rotation.hpp"
#include "kakeya/vec.hpp"

namespace kakeya {

/// Halfspace intersection {x : <normals[i], x> <= offsets[i] for all i} in
/// dimension d >= 2.  Checked construction verifies boundedness by solving
/// one LP per +/- coordinate direction (an empty set passes: emptiness is a
/// valid state, produced for instance by erosion).
class HPolytope {
 public:
  HPolytope(std::vector<Vector> normals, Vector offsets);

  /// Skips the boundedness LPs.  For internal construction sites that have a
  /// boundedness argument of their own (erosion of a bounded body, exact
  /// conversions from bounded polytopes).
  static HPolytope unchecked(std::vector<Vector> normals, Vector offsets);

  int dim() const { return dim_; }
  std::size_t num_constraints() const { return normals_.size(); }
  const std::vector<Vector>& normals() const { return normals_; }
  const Vector& offsets() const { return offsets_; }

 private:
  HPolytope() = default;

  std::vector<Vector> normals_;
  Vector offsets_;
  int dim_ = 0;
};

/// Support via LP.  Throws DegenerateShape when the polytope is empty.
double support(const HPolytope& q, const Vector& u);

/// True when the constraint set has no feasible point.
bool is_empty(const HPolytope& q);

HPolytope rotated(const HPolytope& q, const Rotation& rho);
HPolytope translated(const HPolytope& q, const Vector& t);
HPolytope scaled(const HPolytope& q, double factor);

/// Exact conversion: one unit outward edge normal per polygon edge.
/// Throws DegenerateShape for points and segments.
HPolytope to_hpolytope(const ConvexPolygon& p);

/// Vertex representation of a planar polytope via halfplane clipping.
/// Throws DegenerateShape when empty and DimensionMismatch when d != 2.
ConvexPolygon to_polygon(const HPolytope& q);

}  // namespace kakeya
