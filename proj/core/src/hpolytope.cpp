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

#include "kakeya/hpolytope.hpp"

#include <cmath>
#include <utility>

#include "kakeya/error.hpp"
#include "kakeya/lp.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

namespace {

void validate_rows(const std::vector<Vector>& normals, const Vector& offsets) {
  if (normals.empty()) throw InvalidParameter("hpolytope needs constraints");
  if (normals.size() != offsets.size())
    throw InvalidParameter("hpolytope: normals/offsets size mismatch");
  std::size_t d = normals.front().size();
  if (d < 2) throw InvalidParameter("hpolytope dimension must be >= 2");
  for (const Vector& a : normals) {
    if (a.size() != d)
      throw DimensionMismatch("hpolytope: inconsistent constraint dimensions");
    if (is_zero(a)) throw InvalidParameter("hpolytope: zero constraint normal");
    for (double v : a)
      if (!std::isfinite(v)) throw InvalidParameter("hpolytope: non-finite data");
  }
  for (double v : offsets)
    if (!std::isfinite(v)) throw InvalidParameter("hpolytope: non-finite data");
}

}  // namespace

HPolytope::HPolytope(std::vector<Vector> normals, Vector offsets) {
  validate_rows(normals, offsets);
  dim_ = static_cast<int>(normals.front().size());
  normals_ = std::move(normals);
  offsets_ = std::move(offsets);

  for (int j = 0; j < dim_; ++j) {
    for (double sign : {1.0, -1.0}) {
      LpProblem lp;
      lp.normals = normals_;
      lp.offsets = offsets_;
      lp.objective.assign(static_cast<std::size_t>(dim_), 0.0);
      lp.objective[static_cast<std::size_t>(j)] = sign;
      LpSolution sol = solve_lp(lp);
      if (sol.status == LpStatus::unbounded)
        throw Unbounded("hpolytope is unbounded in a coordinate direction");
      if (sol.status == LpStatus::infeasible) return;  // empty set is fine
    }
  }
}

HPolytope HPolytope::unchecked(std::vector<Vector> normals, Vector offsets) {
  validate_rows(normals, offsets);
  HPolytope q;
  q.dim_ = static_cast<int>(normals.front().size());
  q.normals_ = std::move(normals);
  q.offsets_ = std::move(offsets);
  return q;
}

double support(const HPolytope& q, const Vector& u) {
  if (static_cast<int>(u.size()) != q.dim())
    throw DimensionMismatch("support direction dimension mismatch");
  if (is_zero(u)) throw InvalidDirection("support direction must be nonzero");
  LpProblem lp{q.normals(), q.offsets(), u};
  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::unbounded)
    throw Unbounded("support of an unbounded polytope");
  if (sol.status == LpStatus::infeasible)
    throw DegenerateShape("support of an empty polytope");
  return sol.value;
}

bool is_empty(const HPolytope& q) {
  LpProblem lp;
  lp.normals = q.normals();
  lp.offsets = q.offsets();
  lp.objective.assign(static_cast<std::size_t>(q.dim()), 0.0);
  lp.objective[0] = 1.0;
  LpSolution sol = solve_lp(lp);
  return sol.status == LpStatus::infeasible;
}

HPolytope rotated(const HPolytope& q, const Rotation& rho) {
  if (rho.dim() != q.dim())
    throw DimensionMismatch("polytope under a rotation of different dimension");
  std::vector<Vector> normals;
  normals.reserve(q.num_constraints());
  for (const Vector& a : q.normals()) {
    if (q.dim() == 2)
      normals.push_back(to_vector(rho.apply(to_vec2(a))));
    else
      normals.push_back(to_vector(rho.apply(to_vec3(a))));
  }
  return HPolytope::unchecked(std::move(normals), q.offsets());
}

HPolytope translated(const HPolytope& q, const Vector& t) {
  if (static_cast<int>(t.size()) != q.dim())
    throw DimensionMismatch("translation dimension mismatch");
  Vector offsets = q.offsets();
  for (std::size_t i = 0; i < offsets.size(); ++i)
    offsets[i] += dot(q.normals()[i], t);
  return HPolytope::unchecked(q.normals(), std::move(offsets));
}

HPolytope scaled(const HPolytope& q, double factor) {
  if (!(factor > 0.0)) throw InvalidParameter("scale factor must be positive");
  Vector offsets = q.offsets();
  for (double& b : offsets) b *= factor;
  return HPolytope::unchecked(q.normals(), std::move(offsets));
}

HPolytope to_hpolytope(const ConvexPolygon& p) {
  if (p.degenerate())
    throw DegenerateShape("halfspace form requires a polygon with interior");
  const auto& v = p.vertices();
  std::vector<Vector> normals;
  Vector offsets;
  normals.reserve(v.size());
  offsets.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 e = v[(i + 1) % v.size()] - v[i];
    Vec2 n = normalized(Vec2{e.y, -e.x});  // outward for CCW order
    normals.push_back(to_vector(n));
    offsets.push_back(dot(n, v[i]));
  }
  return HPolytope::unchecked(std::move(normals), std::move(offsets));
}

ConvexPolygon to_polygon(const HPolytope& q) {
  if (q.dim() != 2)
    throw DimensionMismatch("vertex enumeration is implemented for d = 2");

  // Seed box from the four axis supports, then clip by every halfplane.
  double hx = support(q, Vector{1.0, 0.0});
  double lx = -support(q, Vector{-1.0, 0.0});
  double hy = support(q, Vector{0.0, 1.0});
  double ly = -support(q, Vector{0.0, -1.0});
  double pad = 1.0 + 0.125 * (std::abs(hx - lx) + std::abs(hy - ly));
  std::vector<Vec2> poly{{lx - pad, ly - pad},
                         {hx + pad, ly - pad},
                         {hx + pad, hy + pad},
                         {lx - pad, hy + pad}};

  for (std::size_t i = 0; i < q.num_constraints(); ++i) {
    Vec2 a = to_vec2(q.normals()[i]);
    double b = q.offsets()[i];
    std::vector<Vec2> next;
    next.reserve(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      Vec2 p0 = poly[j];
      Vec2 p1 = poly[(j + 1) % poly.size()];
      double d0 = b - dot(a, p0);
      double d1 = b - dot(a, p1);
      if (d0 >= 0.0) next.push_back(p0);
      if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) {
        double t = d0 / (d0 - d1);
        next.push_back(p0 + (p1 - p0) * t);
      }
    }
    poly = std::move(next);
    if (poly.empty()) throw DegenerateShape("empty polytope");
  }
  return ConvexPolygon(std::move(poly));
}

}  // namespace kakeya
