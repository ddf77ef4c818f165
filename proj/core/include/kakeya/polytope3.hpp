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

#include <cstddef>
#include <vector>

#include "kakeya/hpolytope.hpp"
#include "kakeya/rotation.hpp"
#include "kakeya/vec.hpp"

namespace kakeya {

/// 3D convex body: hull vertex set plus a derived triangulated facet list
/// with outward unit normals.  Always full-dimensional; hull() throws
/// DegenerateShape on coplanar input.
class VPolytope3 {
 public:
  struct Facet {
    int a, b, c;      // vertex indices, counter-clockwise from outside
    Vec3 normal;      // outward unit normal
  };

  /// Incremental convex hull.  Needs at least four affinely independent
  /// points; interior and on-boundary points are dropped from the vertex
  /// set where the insertion order permits.
  static VPolytope3 hull(const std::vector<Vec3>& points);

  const std::vector<Vec3>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }

 private:
  VPolytope3() = default;

  std::vector<Vec3> verts_;
  std::vector<Facet> facets_;

  friend VPolytope3 rotated(const VPolytope3&, const Rotation&);
  friend VPolytope3 translated(const VPolytope3&, const Vector&);
  friend VPolytope3 scaled(const VPolytope3&, double);
};

/// Divergence-theorem volume over the facet triangulation.
double volume(const VPolytope3& k);

/// Facet-area sum.
double surface_area(const VPolytope3& k);

double support(const VPolytope3& k, Vec3 u);

VPolytope3 rotated(const VPolytope3& k, const Rotation& rho);
VPolytope3 translated(const VPolytope3& k, const Vector& t);
VPolytope3 scaled(const VPolytope3& k, double factor);

/// Facet planes with coplanar duplicates merged.
HPolytope to_hpolytope(const VPolytope3& k);

}  // namespace kakeya
