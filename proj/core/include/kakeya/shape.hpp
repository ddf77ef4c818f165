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

#include <variant>

#include "kakeya/ball.hpp"
#include "kakeya/hpolytope.hpp"
#include "kakeya/polygon.hpp"
#include "kakeya/polytope3.hpp"

namespace kakeya {

/// Convex body in any of the four carrier representations.
using Shape = std::variant<ConvexPolygon, Ball, HPolytope, VPolytope3>;

int dimension(const Shape& s);

double support(const Shape& s, const Vector& u);

/// h(u) + h(-u), the extent in direction u.
double width_in(const Shape& s, const Vector& u);

Shape rotated(const Shape& s, const Rotation& rho);
Shape translated(const Shape& s, const Vector& t);
Shape scaled(const Shape& s, double factor);

/// Signed containment verdict.  The margin is the minimum slack in distance
/// units over all constraints of the outer body and all extreme points (or
/// the inflated-ball constraint) of the inner body; negative means
/// violation.
struct Containment {
  bool contained;
  double margin;
};

Containment contains(const Shape& outer, const Shape& inner);

}  // namespace kakeya
