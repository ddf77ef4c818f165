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

#include "kakeya/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kakeya/error.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

namespace {

// Extreme points of the inner body for vertex-based containment tests.
std::vector<Vector> extreme_points(const Shape& s) {
  if (const auto* p = std::get_if<ConvexPolygon>(&s)) {
    std::vector<Vector> out;
    out.reserve(p->size());
    for (const Vec2& v : p->vertices()) out.push_back(to_vector(v));
    return out;
  }
  if (const auto* k = std::get_if<VPolytope3>(&s)) {
    std::vector<Vector> out;
    out.reserve(k->vertices().size());
    for (const Vec3& v : k->vertices()) out.push_back(to_vector(v));
    return out;
  }
  if (const auto* h = std::get_if<HPolytope>(&s)) {
    if (h->dim() != 2)
      throw InvalidParameter(
          "containment of an hpolytope inner body is planar-only");
    return extreme_points(Shape{to_polygon(*h)});
  }
  throw InvalidParameter("no extreme points for this shape");
}

}  // namespace

int dimension(const Shape& s) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>)
          return 2;
        else if constexpr (std::is_same_v<T, Ball>)
          return v.dim();
        else if constexpr (std::is_same_v<T, HPolytope>)
          return v.dim();
        else
          return 3;
      },
      s);
}

double support(const Shape& s, const Vector& u) {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>)
          return support(v, to_vec2(u));
        else if constexpr (std::is_same_v<T, VPolytope3>)
          return support(v, to_vec3(u));
        else
          return support(v, u);
      },
      s);
}

double width_in(const Shape& s, const Vector& u) {
  Vector neg = u;
  for (double& x : neg) x = -x;
  return support(s, u) + support(s, neg);
}

Shape rotated(const Shape& s, const Rotation& rho) {
  return std::visit([&](const auto& v) -> Shape { return rotated(v, rho); }, s);
}

Shape translated(const Shape& s, const Vector& t) {
  return std::visit(
      [&](const auto& v) -> Shape {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>)
          return translated(v, to_vec2(t));
        else
          return translated(v, t);
      },
      s);
}

Shape scaled(const Shape& s, double factor) {
  return std::visit([&](const auto& v) -> Shape { return scaled(v, factor); },
                    s);
}

Containment contains(const Shape& outer, const Shape& inner) {
  if (dimension(outer) != dimension(inner))
    throw DimensionMismatch("containment check across dimensions");

  double margin = std::numeric_limits<double>::infinity();

  if (const auto* ball_q = std::get_if<Ball>(&outer)) {
    if (const auto* ball_p = std::get_if<Ball>(&inner)) {
      Vector diff = ball_p->center;
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= ball_q->center[i];
      margin = ball_q->radius - ball_p->radius - norm(diff);
    } else {
      for (const Vector& v : extreme_points(inner)) {
        Vector diff = v;
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= ball_q->center[i];
        margin = std::min(margin, ball_q->radius - norm(diff));
      }
    }
    return {margin >= -kContainsTol, margin};
  }

  // Reduce the outer body to halfspaces.
  const HPolytope h = [&]() -> HPolytope {
    if (const auto* p = std::get_if<ConvexPolygon>(&outer)) return to_hpolytope(*p);
    if (const auto* k = std::get_if<VPolytope3>(&outer)) return to_hpolytope(*k);
    return std::get<HPolytope>(outer);
  }();

  if (const auto* ball_p = std::get_if<Ball>(&inner)) {
    // Exact inflated-constraint test: <a, c> + r |a| <= b.
    for (std::size_t i = 0; i < h.num_constraints(); ++i) {
      const Vector& a = h.normals()[i];
      double na = norm(a);
      double slack =
          (h.offsets()[i] - dot(a, ball_p->center) - ball_p->radius * na) / na;
      margin = std::min(margin, slack);
    }
  } else {
    const std::vector<Vector> pts = extreme_points(inner);
    for (std::size_t i = 0; i < h.num_constraints(); ++i) {
      const Vector& a = h.normals()[i];
      double na = norm(a);
      double b = h.offsets()[i];
      for (const Vector& v : pts)
        margin = std::min(margin, (b - dot(a, v)) / na);
    }
  }
  return {margin >= -kContainsTol, margin};
}

}  // namespace kakeya
