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

#include "kakeya/mu_polygon.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "kakeya/error.hpp"
#include "kakeya/inball.hpp"
#include "kakeya/minkowski.hpp"
#include "kakeya/shape.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

namespace {

void check_mu(int mu) {
  if (mu < 4 || mu % 2 != 0)
    throw InvalidParameter("mu must be an even integer >= 4");
}

double closure_defect(const MuVector& v) {
  Vec2 drift{0.0, 0.0};
  for (int k = 0; k < v.mu; ++k)
    drift = drift + v.lengths[static_cast<std::size_t>(k)] * mu_direction(v.mu, k);
  return norm(drift);
}

double total_length(const MuVector& v) {
  double s = 0.0;
  for (double a : v.lengths) s += a;
  return s;
}

}  // namespace

MuVector::MuVector(int mu_, std::vector<double> lengths_)
    : mu(mu_), lengths(std::move(lengths_)) {
  check_mu(mu);
  if (lengths.size() != static_cast<std::size_t>(mu))
    throw InvalidParameter("edge-length vector must have mu entries");
  for (double a : lengths) {
    if (!(a >= 0.0) || !std::isfinite(a))
      throw InvalidParameter("edge lengths must be finite and nonnegative");
  }
}

Vec2 mu_normal(int mu, int k) {
  check_mu(mu);
  double a = 2.0 * std::numbers::pi * k / mu;
  return {std::cos(a), std::sin(a)};
}

Vec2 mu_direction(int mu, int k) { return perp(mu_normal(mu, k)); }

MuVector phi(const ConvexPolygon& p, int mu) {
  check_mu(mu);
  if (p.degenerate())
    throw DegenerateShape("phi requires a polygon with interior");

  const double slot = 2.0 * std::numbers::pi / mu;
  const auto& v = p.vertices();
  std::vector<double> lengths(static_cast<std::size_t>(mu), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 e = v[(i + 1) % v.size()] - v[i];
    double angle = std::atan2(-e.x, e.y);  // outward normal angle
    long k = std::lround(angle / slot);
    double diff = angle - static_cast<double>(k) * slot;
    if (std::abs(diff) > kMuNormalAngleTol)
      throw NotAMuPolygon("edge normal matches no regular mu-gon normal");
    long idx = ((k % mu) + mu) % mu;
    lengths[static_cast<std::size_t>(idx)] += norm(e);
  }
  return MuVector(mu, std::move(lengths));
}

ConvexPolygon polygon_from_phi(const MuVector& v) {
  double total = total_length(v);
  if (total <= 0.0)
    throw DegenerateShape("edge-length vector is identically zero");
  if (closure_defect(v) > kClosureRel * total)
    throw NotClosed("edge-length vector does not close up");

  std::vector<Vec2> verts;
  Vec2 cur{0.0, 0.0};
  for (int k = 0; k < v.mu; ++k) {
    double a = v.lengths[static_cast<std::size_t>(k)];
    if (a == 0.0) continue;
    verts.push_back(cur);
    cur = cur + a * mu_direction(v.mu, k);
  }
  return ConvexPolygon(std::move(verts));
}

MuVector mu_rotate(const MuVector& v) {
  std::vector<double> out(v.lengths.size());
  out[0] = v.lengths.back();
  for (std::size_t k = 1; k < v.lengths.size(); ++k) out[k] = v.lengths[k - 1];
  return MuVector(v.mu, std::move(out));
}

MuVector mu_average(const MuVector& v) {
  double r = total_length(v) / static_cast<double>(v.mu);
  return MuVector(v.mu, std::vector<double>(static_cast<std::size_t>(v.mu), r));
}

ConvexPolygon mu_average(const ConvexPolygon& p, int mu) {
  check_mu(mu);
  return mu_average(p, mu, 2.0 * std::numbers::pi / mu);
}

ConvexPolygon mu_average(const ConvexPolygon& p, int mu, double step_angle) {
  check_mu(mu);
  ConvexPolygon acc = p;
  for (int k = 1; k < mu; ++k) {
    // Rotations are taken at the exact multiple k*step to avoid compounding
    // the angle error over the fan.
    acc = minkowski_sum(acc, rotated(p, Rotation::planar(k * step_angle)));
  }
  return scaled(acc, 1.0 / static_cast<double>(mu));
}

ConvexPolygon inner_mu_polygon(const ConvexPolygon& p, int mu) {
  check_mu(mu);
  if (p.degenerate())
    throw DegenerateShape("inner approximation requires an interior");
  const HPolytope hp = to_hpolytope(p);
  const Ball inc = chebyshev_center(hp);  // DegenerateShape when radius 0
  const Vec2 center = to_vec2(inc.center);

  // Circumscribed mu-polygon: support halfplanes along the mu-gon normals.
  std::vector<Vector> normals;
  Vector offsets;
  normals.reserve(static_cast<std::size_t>(mu));
  for (int k = 0; k < mu; ++k) {
    Vec2 u = mu_normal(mu, k);
    normals.push_back(to_vector(u));
    offsets.push_back(support(p, u));
  }
  ConvexPolygon circ = to_polygon(HPolytope::unchecked(std::move(normals), std::move(offsets)));

  auto shrunk = [&](double t) {
    std::vector<Vec2> verts;
    verts.reserve(circ.size());
    for (const Vec2& q : circ.vertices()) verts.push_back(center + (q - center) * t);
    return ConvexPolygon(std::move(verts));
  };
  auto fits = [&](const ConvexPolygon& cand) {
    return contains(Shape{p}, Shape{cand}).margin >= 0.0;
  };

  if (fits(circ)) return circ;  // p is itself a mu-polygon
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 40; ++it) {
    double mid = 0.5 * (lo + hi);
    if (fits(shrunk(mid)))
      lo = mid;
    else
      hi = mid;
  }
  return shrunk(lo);
}

}  // namespace kakeya
