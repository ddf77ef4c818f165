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

#include <array>
#include <cmath>

#include "kakeya/error.hpp"
#include "kakeya/vec.hpp"

namespace kakeya {

/// Orientation element: a plane angle in d = 2, a unit quaternion in d = 3.
/// Rotations act about the origin.
class Rotation {
 public:
  static Rotation planar(double angle) { return Rotation(angle); }

  /// Quaternion (w, x, y, z).  The input must already be a unit quaternion
  /// up to 1e-6; it is renormalized exactly on construction.
  static Rotation quaternion(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(std::abs(n - 1.0) <= 1e-6))
      throw InvalidParameter("quaternion is not normalized");
    return Rotation(std::array<double, 4>{w / n, x / n, y / n, z / n});
  }

  static Rotation identity(int dim) {
    if (dim == 2) return planar(0.0);
    if (dim == 3) return Rotation(std::array<double, 4>{1.0, 0.0, 0.0, 0.0});
    throw InvalidParameter("rotations exist only in d = 2, 3");
  }

  int dim() const { return dim_; }

  double angle() const {
    if (dim_ != 2) throw DimensionMismatch("angle() is 2D-only");
    return angle_;
  }

  const std::array<double, 4>& quat() const {
    if (dim_ != 3) throw DimensionMismatch("quat() is 3D-only");
    return q_;
  }

  /// Rotation angle in radians (about the quaternion axis for d = 3).
  double rotation_angle() const {
    if (dim_ == 2) return angle_;
    double w = std::min(1.0, std::abs(q_[0]));
    return 2.0 * std::acos(w);
  }

  Vec2 apply(Vec2 v) const {
    if (dim_ != 2) throw DimensionMismatch("2D point under a 3D rotation");
    double c = std::cos(angle_), s = std::sin(angle_);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }

  Vec3 apply(Vec3 v) const {
    if (dim_ != 3) throw DimensionMismatch("3D point under a 2D rotation");
    // v' = v + 2 u x (u x v + w v), u = quaternion vector part.
    Vec3 u{q_[1], q_[2], q_[3]};
    Vec3 t = cross(u, v) * 2.0;
    return v + t * q_[0] + cross(u, t);
  }

  Rotation inverse() const {
    if (dim_ == 2) return planar(-angle_);
    return Rotation(std::array<double, 4>{q_[0], -q_[1], -q_[2], -q_[3]});
  }

 private:
  explicit Rotation(double angle) : dim_(2), angle_(angle) {}
  explicit Rotation(std::array<double, 4> q) : dim_(3), q_(q) {}

  int dim_;
  double angle_ = 0.0;
  std::array<double, 4> q_{1.0, 0.0, 0.0, 0.0};
};

}  // namespace kakeya
