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

#include "kakeya/rotation.hpp"
#include "kakeya/vec.hpp"

namespace kakeya {

/// Planar convex body given as a counter-clockwise vertex cycle.
///
/// Construction cleans the input: duplicate vertices and collinear triples
/// (triangle area below 1e-12 times the bounding-box area) are dropped, and
/// the remaining cycle must be strictly convex and counter-clockwise with
/// total turning 2*pi.  One- and two-vertex bodies (points, segments) are
/// representable and flagged degenerate; measures reject them, support and
/// rotation accept them.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  const Vec2& operator[](std::size_t i) const { return verts_[i]; }

  /// Fewer than three vertices survived cleaning.
  bool degenerate() const { return verts_.size() < 3; }

 private:
  std::vector<Vec2> verts_;
};

/// Shoelace area.  Throws DegenerateShape for points and segments.
double area(const ConvexPolygon& p);

/// Sum of edge lengths.  Throws DegenerateShape for points and segments.
double perimeter(const ConvexPolygon& p);

/// Support function h_P(u) = max_{p in P} <p, u>.  Throws InvalidDirection
/// for u = 0.  Defined for degenerate bodies as well.
double support(const ConvexPolygon& p, Vec2 u);

/// h_P(u) + h_P(-u), the extent of P in direction u.
double width_in(const ConvexPolygon& p, Vec2 u);

ConvexPolygon rotated(const ConvexPolygon& p, const Rotation& rho);
ConvexPolygon translated(const ConvexPolygon& p, Vec2 t);

/// Scaling about the origin, factor > 0.
ConvexPolygon scaled(const ConvexPolygon& p, double factor);

/// Convex hull of a point set (monotone chain).  The result may be
/// degenerate when the input is collinear.
ConvexPolygon convex_hull(std::vector<Vec2> points);

/// Regular n-gon with the given circumradius, vertex k at angle
/// phase + 2*pi*k/n.
ConvexPolygon regular_polygon(int n, double circumradius, double phase = 0.0);

/// Chebyshev-center-free interior reference point: the vertex average.
/// Valid for degenerate bodies too (midpoint of a segment, the point
/// itself).
Vec2 vertex_centroid(const ConvexPolygon& p);

}  // namespace kakeya
