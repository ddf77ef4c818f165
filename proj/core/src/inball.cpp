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

#include "kakeya/inball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "kakeya/error.hpp"
#include "kakeya/lp.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

ChebyshevResult chebyshev_lp(const HPolytope& q) {
  const std::size_t d = static_cast<std::size_t>(q.dim());
  LpProblem lp;
  lp.normals.reserve(q.num_constraints());
  for (std::size_t i = 0; i < q.num_constraints(); ++i) {
    Vector row = q.normals()[i];
    row.push_back(norm(q.normals()[i]));
    lp.normals.push_back(std::move(row));
  }
  lp.offsets = q.offsets();
  lp.objective.assign(d + 1, 0.0);
  lp.objective[d] = 1.0;

  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::unbounded)
    throw Unbounded("inscribed ball radius is unbounded");
  if (sol.status == LpStatus::infeasible)
    throw NumericalFailure("chebyshev LP reported infeasible");
  ChebyshevResult res;
  res.center.assign(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(d));
  res.radius = sol.point[d];
  return res;
}

Ball chebyshev_center(const HPolytope& q) {
  ChebyshevResult r = chebyshev_lp(q);
  if (!(r.radius > 0.0))
    throw DegenerateShape("polytope has empty interior");
  return Ball(std::move(r.center), r.radius);
}

Ball chebyshev_center(const Shape& q) {
  if (const auto* b = std::get_if<Ball>(&q)) return *b;
  if (const auto* p = std::get_if<ConvexPolygon>(&q))
    return chebyshev_center(to_hpolytope(*p));
  if (const auto* k = std::get_if<VPolytope3>(&q))
    return chebyshev_center(to_hpolytope(*k));
  return chebyshev_center(std::get<HPolytope>(q));
}

Vector centering_point(const Shape& s) {
  if (const auto* p = std::get_if<ConvexPolygon>(&s)) {
    if (p->degenerate()) return to_vector(vertex_centroid(*p));
  }
  return chebyshev_center(s).center;
}

HPolytope erosion(const HPolytope& q, const Shape& p) {
  if (dimension(p) != q.dim())
    throw DimensionMismatch("erosion operands live in different dimensions");
  Vector offsets = q.offsets();
  for (std::size_t i = 0; i < offsets.size(); ++i)
    offsets[i] -= support(p, q.normals()[i]);
  return HPolytope::unchecked(q.normals(), std::move(offsets));
}

namespace {

MinWidthResult min_width_polygon(const ConvexPolygon& q) {
  if (q.degenerate())
    throw DegenerateShape("min width requires a body with interior");
  const auto& v = q.vertices();
  const std::size_t n = v.size();

  // Rotating calipers: for each edge track the antipodal vertex; the
  // farthest-vertex index only advances as the edge advances.
  auto dist_num = [&](std::size_t i, std::size_t j) {
    return cross(v[(i + 1) % n] - v[i], v[j] - v[i]);
  };
  std::size_t j = 0;
  double best_num = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = dist_num(0, k);
    if (d > best_num) {
      best_num = d;
      j = k;
    }
  }

  double best_width = std::numeric_limits<double>::infinity();
  Vec2 best_dir{1.0, 0.0};
  std::size_t advances = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (dist_num(i, (j + 1) % n) > dist_num(i, j)) {
      j = (j + 1) % n;
      if (++advances > 2 * n + 4)
        throw NumericalFailure("caliper advance failed to terminate");
    }
    Vec2 e = v[(i + 1) % n] - v[i];
    double w = dist_num(i, j) / norm(e);
    if (w < best_width) {
      best_width = w;
      best_dir = normalized(Vec2{e.y, -e.x});
    }
  }
  return {best_width, to_vector(best_dir)};
}

MinWidthResult min_width_vpolytope(const VPolytope3& q, bool approximate) {
  auto eval = [&](Vec3 u) { return support(q, u) + support(q, -u); };

  if (approximate) {
    // Fibonacci-sphere scan plus shrinking local refinement.  Approximate by
    // construction; used for inputs too large for the exact enumeration.
    const int n = 1024;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    Vec3 best_u{0, 0, 1};
    double best_w = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      double z = 1.0 - 2.0 * (k + 0.5) / n;
      double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = golden * k;
      Vec3 u{rho * std::cos(phi), rho * std::sin(phi), z};
      double w = eval(u);
      if (w < best_w) {
        best_w = w;
        best_u = u;
      }
    }
    double step = 0.2;
    for (int round = 0; round < 48; ++round) {
      Vec3 t1 = norm(cross(best_u, Vec3{0, 0, 1})) > 1e-6
                    ? normalized(cross(best_u, Vec3{0, 0, 1}))
                    : Vec3{1, 0, 0};
      Vec3 t2 = normalized(cross(best_u, t1));
      bool improved = false;
      for (int s = 0; s < 8; ++s) {
        double a = 2.0 * std::numbers::pi * s / 8.0;
        Vec3 u = normalized(best_u + (t1 * std::cos(a) + t2 * std::sin(a)) * step);
        double w = eval(u);
        if (w < best_w) {
          best_w = w;
          best_u = u;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    return {best_w, to_vector(best_u)};
  }

  // Exact candidate set: facet normals plus cross products of all edge
  // direction pairs (covers vertex-facet and edge-edge antipodal pairs).
  std::vector<Vec3> candidates;
  for (const auto& f : q.facets()) candidates.push_back(f.normal);

  std::set<std::pair<int, int>> edge_set;
  for (const auto& f : q.facets()) {
    const int vv[3] = {f.a, f.b, f.c};
    for (int e = 0; e < 3; ++e)
      edge_set.insert(std::minmax(vv[e], vv[(e + 1) % 3]));
  }
  std::vector<Vec3> edge_dirs;
  edge_dirs.reserve(edge_set.size());
  for (auto [a, b] : edge_set)
    edge_dirs.push_back(q.vertices()[static_cast<std::size_t>(b)] -
                        q.vertices()[static_cast<std::size_t>(a)]);
  for (std::size_t i = 0; i < edge_dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < edge_dirs.size(); ++j) {
      Vec3 c = cross(edge_dirs[i], edge_dirs[j]);
      double len = norm(c);
      if (len > 1e-12) candidates.push_back(c * (1.0 / len));
    }
  }

  double best_w = std::numeric_limits<double>::infinity();
  Vec3 best_u{0, 0, 1};
  for (const Vec3& u : candidates) {
    double w = eval(u);
    if (w < best_w) {
      best_w = w;
      best_u = u;
    }
  }
  return {best_w, to_vector(best_u)};
}

}  // namespace

MinWidthResult min_width(const Shape& q, bool approximate) {
  if (const auto* p = std::get_if<ConvexPolygon>(&q)) return min_width_polygon(*p);
  if (const auto* b = std::get_if<Ball>(&q)) {
    Vector dir(static_cast<std::size_t>(b->dim()), 0.0);
    dir[0] = 1.0;
    return {2.0 * b->radius, std::move(dir)};
  }
  if (const auto* k = std::get_if<VPolytope3>(&q))
    return min_width_vpolytope(*k, approximate);
  const auto& h = std::get<HPolytope>(q);
  if (h.dim() != 2)
    throw InvalidParameter("min width of a 3D hpolytope is not supported");
  return min_width_polygon(to_polygon(h));
}

}  // namespace kakeya
