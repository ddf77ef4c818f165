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

#include "kakeya/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "kakeya/error.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

namespace {

// Edge vectors in counter-clockwise order starting at the bottom-most (then
// left-most) vertex, together with that starting vertex.  From this vertex
// the outward-normal angles are strictly increasing, so two such sequences
// merge like sorted lists.
struct EdgeFan {
  Vec2 start;
  std::vector<Vec2> edges;
  std::vector<double> angles;  // unwrapped, increasing, first in [0, pi]
};

EdgeFan edge_fan(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  std::size_t lo = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[lo].y || (v[i].y == v[lo].y && v[i].x < v[lo].x)) lo = i;
  }
  EdgeFan fan;
  fan.start = v[lo];
  const std::size_t n = v.size();
  double prev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    Vec2 e = v[(lo + k + 1) % n] - v[(lo + k) % n];
    double a = std::atan2(e.y, e.x);
    if (a < 0.0 && k == 0) a += 2.0 * std::numbers::pi;
    while (a < prev - kParallelAngleTol) a += 2.0 * std::numbers::pi;
    fan.edges.push_back(e);
    fan.angles.push_back(a);
    prev = a;
  }
  return fan;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& r) {
  if (p.size() == 1) return translated(r, p[0]);
  if (r.size() == 1) return translated(p, r[0]);

  EdgeFan fp = edge_fan(p);
  EdgeFan fr = edge_fan(r);

  std::vector<Vec2> verts;
  verts.reserve(fp.edges.size() + fr.edges.size());
  Vec2 cur = fp.start + fr.start;
  std::size_t i = 0, j = 0;
  while (i < fp.edges.size() || j < fr.edges.size()) {
    verts.push_back(cur);
    Vec2 step;
    if (j >= fr.edges.size() ||
        (i < fp.edges.size() && fp.angles[i] < fr.angles[j] - kParallelAngleTol)) {
      step = fp.edges[i++];
    } else if (i >= fp.edges.size() || fr.angles[j] < fp.angles[i] - kParallelAngleTol) {
      step = fr.edges[j++];
    } else {
      step = fp.edges[i++] + fr.edges[j++];  // parallel edges concatenate
    }
    cur = cur + step;
  }
  return ConvexPolygon(std::move(verts));
}

VPolytope3 minkowski_sum(const VPolytope3& p, const VPolytope3& r) {
  std::vector<Vec3> sums;
  sums.reserve(p.vertices().size() * r.vertices().size());
  for (const Vec3& a : p.vertices())
    for (const Vec3& b : r.vertices()) sums.push_back(a + b);
  return VPolytope3::hull(sums);
}

Ball minkowski_sum(const Ball& p, const Ball& r) {
  if (p.dim() != r.dim())
    throw DimensionMismatch("minkowski sum across dimensions");
  Vector c = p.center;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += r.center[i];
  return Ball(std::move(c), p.radius + r.radius);
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InvalidParameter("interpolation parameter must lie in [0, 1]");
}

}  // namespace

ConvexPolygon interpolate(const ConvexPolygon& p0, const ConvexPolygon& p1,
                          double lambda) {
  check_lambda(lambda);
  if (lambda == 0.0) return p0;
  if (lambda == 1.0) return p1;
  return minkowski_sum(scaled(p0, 1.0 - lambda), scaled(p1, lambda));
}

VPolytope3 interpolate(const VPolytope3& p0, const VPolytope3& p1,
                       double lambda) {
  check_lambda(lambda);
  if (lambda == 0.0) return p0;
  if (lambda == 1.0) return p1;
  return minkowski_sum(scaled(p0, 1.0 - lambda), scaled(p1, lambda));
}

Ball interpolate(const Ball& p0, const Ball& p1, double lambda) {
  check_lambda(lambda);
  if (lambda == 0.0) return p0;
  if (lambda == 1.0) return p1;
  return minkowski_sum(scaled(p0, 1.0 - lambda), scaled(p1, lambda));
}

Shape interpolate(const Shape& p0, const Shape& p1, double lambda) {
  if (dimension(p0) != dimension(p1))
    throw DimensionMismatch("interpolation across dimensions");
  if (const auto* a = std::get_if<ConvexPolygon>(&p0)) {
    if (const auto* b = std::get_if<ConvexPolygon>(&p1))
      return interpolate(*a, *b, lambda);
  }
  if (const auto* a = std::get_if<VPolytope3>(&p0)) {
    if (const auto* b = std::get_if<VPolytope3>(&p1))
      return interpolate(*a, *b, lambda);
  }
  if (const auto* a = std::get_if<Ball>(&p0)) {
    if (const auto* b = std::get_if<Ball>(&p1))
      return interpolate(*a, *b, lambda);
  }
  throw InvalidParameter("interpolation requires same-carrier operands");
}

SteinerCoeffs3 steiner_coefficients(const VPolytope3& k) {
  SteinerCoeffs3 c{};
  c.v = volume(k);
  c.s = surface_area(k);
  c.b = 4.0 / 3.0 * std::numbers::pi;

  // Exterior dihedral angle per undirected edge = angle between the outward
  // unit normals of the two incident facets; coplanar neighbours contribute
  // zero, so the facet triangulation does not bias the sum.
  std::map<std::pair<int, int>, std::pair<int, int>> edge_faces;
  const auto& facets = k.facets();
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const int vv[3] = {facets[fi].a, facets[fi].b, facets[fi].c};
    for (int e = 0; e < 3; ++e) {
      int u = vv[e], w = vv[(e + 1) % 3];
      auto key = std::minmax(u, w);
      auto [it, inserted] = edge_faces.emplace(key, std::pair<int, int>{static_cast<int>(fi), -1});
      if (!inserted) it->second.second = static_cast<int>(fi);
    }
  }
  double m_sum = 0.0;
  for (const auto& [key, ff] : edge_faces) {
    if (ff.second < 0)
      throw NumericalFailure("open edge in facet list");
    const Vec3& n1 = facets[static_cast<std::size_t>(ff.first)].normal;
    const Vec3& n2 = facets[static_cast<std::size_t>(ff.second)].normal;
    double theta = std::atan2(norm(cross(n1, n2)), dot(n1, n2));
    double len = norm(k.vertices()[static_cast<std::size_t>(key.second)] -
                      k.vertices()[static_cast<std::size_t>(key.first)]);
    m_sum += len * theta;
  }
  c.m = 0.5 * m_sum;
  return c;
}

double quermassintegral(const ConvexPolygon& k, int m) {
  switch (m) {
    case 0:
      return area(k);
    case 1:
      return 0.5 * perimeter(k);
    case 2:
      return std::numbers::pi;
    default:
      throw InvalidParameter("quermassintegral index must lie in {0,...,d}");
  }
}

double quermassintegral(const VPolytope3& k, int m) {
  if (m < 0 || m > 3)
    throw InvalidParameter("quermassintegral index must lie in {0,...,d}");
  if (m == 0) return volume(k);
  if (m == 3) return 4.0 / 3.0 * std::numbers::pi;
  SteinerCoeffs3 c = steiner_coefficients(k);
  return m == 1 ? c.s / 3.0 : c.m / 3.0;
}

double quermassintegral(const Ball& k, int m) {
  int d = k.dim();
  if (d != 2 && d != 3)
    throw InvalidParameter("quermassintegrals are implemented for d = 2, 3");
  if (m < 0 || m > d)
    throw InvalidParameter("quermassintegral index must lie in {0,...,d}");
  double unit_ball = d == 2 ? std::numbers::pi : 4.0 / 3.0 * std::numbers::pi;
  return unit_ball * std::pow(k.radius, static_cast<double>(d - m));
}

double quermassintegral(const Shape& k, int m) {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HPolytope>) {
          if (v.dim() == 2) return quermassintegral(to_polygon(v), m);
          throw InvalidParameter(
              "quermassintegrals of 3D hpolytopes are not supported");
        } else {
          return quermassintegral(v, m);
        }
      },
      k);
}

}  // namespace kakeya
