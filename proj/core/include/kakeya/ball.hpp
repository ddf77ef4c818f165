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

#include <cmath>
#include <numbers>

#include "kakeya/error.hpp"
#include "kakeya/rotation.hpp"
#include "kakeya/vec.hpp"

namespace kakeya {

/// Exact Euclidean ball in dimension d >= 1 (disk for d = 2).
struct Ball {
  Vector center;
  double radius = 0.0;

  Ball(Vector c, double r) : center(std::move(c)), radius(r) {
    if (center.empty()) throw InvalidParameter("ball center must have d >= 1");
    if (!(radius >= 0.0)) throw InvalidParameter("ball radius must be >= 0");
    for (double x : center)
      if (!std::isfinite(x)) throw InvalidParameter("ball center must be finite");
  }

  int dim() const { return static_cast<int>(center.size()); }
};

inline double support(const Ball& b, const Vector& u) {
  if (static_cast<int>(u.size()) != b.dim())
    throw DimensionMismatch("support direction dimension mismatch");
  double n = norm(u);
  if (n == 0.0) throw InvalidDirection("support direction must be nonzero");
  return dot(b.center, u) + b.radius * n;
}

inline Ball rotated(const Ball& b, const Rotation& rho) {
  if (rho.dim() != b.dim())
    throw DimensionMismatch("ball under a rotation of different dimension");
  if (b.dim() == 2) {
    Vec2 c = rho.apply(to_vec2(b.center));
    return Ball(to_vector(c), b.radius);
  }
  Vec3 c = rho.apply(to_vec3(b.center));
  return Ball(to_vector(c), b.radius);
}

inline Ball translated(const Ball& b, const Vector& t) {
  if (t.size() != b.center.size())
    throw DimensionMismatch("translation dimension mismatch");
  Vector c = b.center;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += t[i];
  return Ball(std::move(c), b.radius);
}

inline Ball scaled(const Ball& b, double factor) {
  if (!(factor > 0.0)) throw InvalidParameter("scale factor must be positive");
  Vector c = b.center;
  for (double& x : c) x *= factor;
  return Ball(std::move(c), b.radius * factor);
}

inline double area(const Ball& b) {
  if (b.dim() != 2) throw DimensionMismatch("area of a non-planar ball");
  return std::numbers::pi * b.radius * b.radius;
}

inline double perimeter(const Ball& b) {
  if (b.dim() != 2) throw DimensionMismatch("perimeter of a non-planar ball");
  return 2.0 * std::numbers::pi * b.radius;
}

inline double volume(const Ball& b) {
  if (b.dim() != 3) throw DimensionMismatch("volume of a non-3D ball");
  return 4.0 / 3.0 * std::numbers::pi * b.radius * b.radius * b.radius;
}

inline double surface_area(const Ball& b) {
  if (b.dim() != 3) throw DimensionMismatch("surface area of a non-3D ball");
  return 4.0 * std::numbers::pi * b.radius * b.radius;
}

}  // namespace kakeya
