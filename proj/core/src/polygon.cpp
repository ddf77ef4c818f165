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

#include "kakeya/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kakeya/error.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

namespace {

struct Bbox {
  double min_x, min_y, max_x, max_y;
  double area() const { return (max_x - min_x) * (max_y - min_y); }
  double diag() const { return std::hypot(max_x - min_x, max_y - min_y); }
};

Bbox bounding_box(const std::vector<Vec2>& pts) {
  Bbox b{std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity()};
  for (const Vec2& p : pts) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

// Drops consecutive duplicates, then collinear vertices, iterating until
// stable.  May collapse the cycle to a segment or a point.
std::vector<Vec2> clean_cycle(std::vector<Vec2> v) {
  Bbox box = bounding_box(v);
  const double dup_tol = 1e-14 * std::max(1.0, box.diag());
  const double area_tol = kCollinearAreaRel * box.area();

  // Duplicate elimination over the cycle.
  std::vector<Vec2> out;
  out.reserve(v.size());
  for (const Vec2& p : v) {
    if (out.empty() || norm(p - out.back()) > dup_tol) out.push_back(p);
  }
  while (out.size() > 1 && norm(out.front() - out.back()) <= dup_tol)
    out.pop_back();

  // Collinear elimination.
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < out.size() && out.size() >= 3;) {
      std::size_t n = out.size();
      const Vec2& a = out[(i + n - 1) % n];
      const Vec2& b = out[i];
      const Vec2& c = out[(i + 1) % n];
      double tri_area = std::abs(cross(b - a, c - b)) * 0.5;
      if (tri_area <= area_tol) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return out;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) {
  if (vertices.empty())
    throw InvalidParameter("a polygon needs at least one vertex");
  for (const Vec2& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw InvalidParameter("polygon vertices must be finite");
  }
  verts_ = clean_cycle(std::move(vertices));
  if (verts_.size() < 3) return;  // degenerate, but representable

  // Strict convexity: every consecutive edge pair turns left, and the edge
  // directions advance by one full turn in total (rules out self-winding).
  const std::size_t n = verts_.size();
  double total_turn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 e0 = verts_[(i + 1) % n] - verts_[i];
    Vec2 e1 = verts_[(i + 2) % n] - verts_[(i + 1) % n];
    double cr = cross(e0, e1);
    if (cr <= 0.0)
      throw InvalidParameter(
          "vertices are not in strictly convex counter-clockwise order");
    total_turn += std::atan2(cr, dot(e0, e1));
  }
  if (std::abs(total_turn - 2.0 * std::numbers::pi) > 1e-6)
    throw InvalidParameter("vertex cycle winds more than once");
}

double area(const ConvexPolygon& p) {
  if (p.degenerate())
    throw DegenerateShape("area requires a polygon with interior");
  const auto& v = p.vertices();
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    twice += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * twice;
}

double perimeter(const ConvexPolygon& p) {
  if (p.degenerate())
    throw DegenerateShape("perimeter requires a polygon with interior");
  const auto& v = p.vertices();
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    sum += norm(v[(i + 1) % v.size()] - v[i]);
  return sum;
}

double support(const ConvexPolygon& p, Vec2 u) {
  if (u.x == 0.0 && u.y == 0.0)
    throw InvalidDirection("support direction must be nonzero");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : p.vertices()) best = std::max(best, dot(v, u));
  return best;
}

double width_in(const ConvexPolygon& p, Vec2 u) {
  return support(p, u) + support(p, -u);
}

ConvexPolygon rotated(const ConvexPolygon& p, const Rotation& rho) {
  if (rho.dim() != 2)
    throw DimensionMismatch("planar polygon under a non-planar rotation");
  std::vector<Vec2> v;
  v.reserve(p.size());
  for (const Vec2& q : p.vertices()) v.push_back(rho.apply(q));
  return ConvexPolygon(std::move(v));
}

ConvexPolygon translated(const ConvexPolygon& p, Vec2 t) {
  std::vector<Vec2> v;
  v.reserve(p.size());
  for (const Vec2& q : p.vertices()) v.push_back(q + t);
  return ConvexPolygon(std::move(v));
}

ConvexPolygon scaled(const ConvexPolygon& p, double factor) {
  if (!(factor > 0.0)) throw InvalidParameter("scale factor must be positive");
  std::vector<Vec2> v;
  v.reserve(p.size());
  for (const Vec2& q : p.vertices()) v.push_back(q * factor);
  return ConvexPolygon(std::move(v));
}

ConvexPolygon convex_hull(std::vector<Vec2> points) {
  if (points.empty())
    throw InvalidParameter("hull of an empty point set");
  std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return ConvexPolygon(std::move(points));

  auto build = [&](auto begin, auto end) {
    std::vector<Vec2> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross(chain[chain.size() - 1] - chain[chain.size() - 2],
                   *it - chain[chain.size() - 1]) <= 0.0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };

  std::vector<Vec2> lower = build(points.begin(), points.end());
  std::vector<Vec2> upper = build(points.rbegin(), points.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return ConvexPolygon(std::move(lower));
}

ConvexPolygon regular_polygon(int n, double circumradius, double phase) {
  if (n < 3) throw InvalidParameter("a regular polygon needs n >= 3");
  if (!(circumradius > 0.0))
    throw InvalidParameter("circumradius must be positive");
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double a = phase + 2.0 * std::numbers::pi * k / n;
    v.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return ConvexPolygon(std::move(v));
}

Vec2 vertex_centroid(const ConvexPolygon& p) {
  Vec2 c{0.0, 0.0};
  for (const Vec2& v : p.vertices()) c = c + v;
  return c * (1.0 / static_cast<double>(p.size()));
}

}  // namespace kakeya
