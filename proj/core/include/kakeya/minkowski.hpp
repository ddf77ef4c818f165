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
#include "kakeya/polygon.hpp"
#include "kakeya/polytope3.hpp"
#include "kakeya/shape.hpp"

namespace kakeya {

/// Planar Minkowski sum by the O(n+m) normal-angle edge merge: edges of both
/// summands sorted by outward-normal angle, parallel edges (angle difference
/// below 1e-12 rad) concatenated into one.  Accepts degenerate summands
/// (points translate, segments contribute two antiparallel edges); the
/// result has at most |P| + |R| vertices.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& r);

/// 3D Minkowski sum: hull of all pairwise vertex sums.
VPolytope3 minkowski_sum(const VPolytope3& p, const VPolytope3& r);

/// Balls add exactly: centers add, radii add.
Ball minkowski_sum(const Ball& p, const Ball& r);

/// (1-lambda) P0 + lambda P1 for lambda in [0, 1]; the endpoints return the
/// input bodies unchanged.
ConvexPolygon interpolate(const ConvexPolygon& p0, const ConvexPolygon& p1,
                          double lambda);
VPolytope3 interpolate(const VPolytope3& p0, const VPolytope3& p1,
                       double lambda);
Ball interpolate(const Ball& p0, const Ball& p1, double lambda);

/// Same-carrier interpolation at the shape level.
Shape interpolate(const Shape& p0, const Shape& p1, double lambda);

/// Coefficients of vol(K + r B) = v + s r + m r^2 + b r^3.  In
/// quermassintegral terms v = W_0, s = 3 W_1, m = 3 W_2, b = W_3 = 4 pi / 3.
struct SteinerCoeffs3 {
  double v;  // volume
  double s;  // surface term
  double m;  // mean-width term: sum of edge length x exterior dihedral / 2
  double b;  // ball term, always 4 pi / 3
};

SteinerCoeffs3 steiner_coefficients(const VPolytope3& k);

/// Quermassintegral W_m(K) for d = 2 (polygons, disks) and d = 3 (vertex
/// polytopes, balls); m must lie in {0, ..., d}.
double quermassintegral(const ConvexPolygon& k, int m);
double quermassintegral(const VPolytope3& k, int m);
double quermassintegral(const Ball& k, int m);
double quermassintegral(const Shape& k, int m);

}  // namespace kakeya
