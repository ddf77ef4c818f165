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
#include <cstddef>
#include <vector>

#include "kakeya/error.hpp"

namespace kakeya {

/// General d-dimensional coordinate vector.  The 2D/3D carriers below are
/// used wherever the dimension is fixed; this alias feeds the LP machinery.
using Vector = std::vector<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr double norm_sq(Vec2 a) { return a.x * a.x + a.y * a.y; }

/// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 normalized(Vec2 a) {
  double n = norm(a);
  if (n == 0.0) throw InvalidDirection("cannot normalize the zero vector");
  return {a.x / n, a.y / n};
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, Vec3 v) { return v * s; }

constexpr double dot(Vec3 a, Vec3 b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
constexpr double norm_sq(Vec3 a) { return dot(a, a); }
inline double norm(Vec3 a) { return std::sqrt(norm_sq(a)); }

inline Vec3 normalized(Vec3 a) {
  double n = norm(a);
  if (n == 0.0) throw InvalidDirection("cannot normalize the zero vector");
  return {a.x / n, a.y / n, a.z / n};
}

// Vector helpers.

inline double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot: vectors of different dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vector& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

inline bool is_zero(const Vector& a) {
  for (double v : a)
    if (v != 0.0) return false;
  return true;
}

inline Vec2 to_vec2(const Vector& a) {
  if (a.size() != 2) throw DimensionMismatch("expected a 2D vector");
  return {a[0], a[1]};
}

inline Vec3 to_vec3(const Vector& a) {
  if (a.size() != 3) throw DimensionMismatch("expected a 3D vector");
  return {a[0], a[1], a[2]};
}

inline Vector to_vector(Vec2 a) { return {a.x, a.y}; }
inline Vector to_vector(Vec3 a) { return {a.x, a.y, a.z}; }

}  // namespace kakeya
