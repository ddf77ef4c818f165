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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kakeya/kakeya.hpp"

namespace testutil {

using namespace kakeya;

// Brute-force Minkowski sum oracle: hull of all pairwise vertex sums.
// Independent of the edge-merge path in the library.
inline ConvexPolygon oracle_minkowski_sum(const ConvexPolygon& p,
                                          const ConvexPolygon& r) {
  std::vector<Vec2> sums;
  sums.reserve(p.size() * r.size());
  for (const Vec2& a : p.vertices())
    for (const Vec2& b : r.vertices()) sums.push_back(a + b);
  return convex_hull(std::move(sums));
}

// Vertex sets equal up to cyclic order.
inline double cyclic_vertex_distance(const ConvexPolygon& a,
                                     const ConvexPolygon& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const std::size_t n = a.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t off = 0; off < n; ++off) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst, norm(a[i] - b[(i + off) % n]));
    best = std::min(best, worst);
  }
  return best;
}

// Equality up to translation (vertex-average alignment) and cyclic order.
inline double congruence_distance(const ConvexPolygon& a,
                                  const ConvexPolygon& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  Vec2 ca = vertex_centroid(a), cb = vertex_centroid(b);
  std::vector<Vec2> va, vb;
  for (const Vec2& v : a.vertices()) va.push_back(v - ca);
  for (const Vec2& v : b.vertices()) vb.push_back(v - cb);
  return cyclic_vertex_distance(ConvexPolygon(va), ConvexPolygon(vb));
}

// Monte Carlo area of a polygon by point counting in its bounding box.
inline double mc_area(const ConvexPolygon& p, int samples,
                      std::uint64_t seed) {
  double lx = 1e300, ly = 1e300, hx = -1e300, hy = -1e300;
  for (const Vec2& v : p.vertices()) {
    lx = std::min(lx, v.x);
    ly = std::min(ly, v.y);
    hx = std::max(hx, v.x);
    hy = std::max(hy, v.y);
  }
  const HPolytope h = to_hpolytope(p);
  Rng rng(seed);
  int inside = 0;
  for (int s = 0; s < samples; ++s) {
    Vector pt{rng.uniform(lx, hx), rng.uniform(ly, hy)};
    bool in = true;
    for (std::size_t i = 0; i < h.num_constraints() && in; ++i)
      in = dot(h.normals()[i], pt) <= h.offsets()[i];
    inside += in;
  }
  return (hx - lx) * (hy - ly) * inside / samples;
}

// Inscribed triangulated sphere: icosahedron subdivided `level` times with
// vertices projected back onto the unit sphere.
inline VPolytope3 icosphere(int level) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pts = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (Vec3& p : pts) p = normalized(p);
  VPolytope3 sphere = VPolytope3::hull(pts);
  for (int l = 0; l < level; ++l) {
    std::vector<Vec3> next = sphere.vertices();
    for (const auto& f : sphere.facets()) {
      const Vec3& a = sphere.vertices()[static_cast<std::size_t>(f.a)];
      const Vec3& b = sphere.vertices()[static_cast<std::size_t>(f.b)];
      const Vec3& c = sphere.vertices()[static_cast<std::size_t>(f.c)];
      next.push_back(normalized(a + b));
      next.push_back(normalized(b + c));
      next.push_back(normalized(c + a));
    }
    sphere = VPolytope3::hull(next);
  }
  return sphere;
}

// Distance from a point to the unit cube [0,1]^3 (for the Monte Carlo
// Steiner oracle).
inline double dist_to_unit_cube(Vec3 p) {
  auto axis = [](double x) {
    if (x < 0.0) return -x;
    if (x > 1.0) return x - 1.0;
    return 0.0;
  };
  Vec3 d{axis(p.x), axis(p.y), axis(p.z)};
  return norm(d);
}

inline ConvexPolygon unit_square() {
  return ConvexPolygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}});
}

inline ConvexPolygon equilateral_triangle() {
  return ConvexPolygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{0.5, std::sqrt(3.0) / 2.0}});
}

inline VPolytope3 unit_cube() {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i)
    pts.push_back({static_cast<double>(i & 1), static_cast<double>((i >> 1) & 1),
                   static_cast<double>((i >> 2) & 1)});
  return VPolytope3::hull(pts);
}

}  // namespace testutil
