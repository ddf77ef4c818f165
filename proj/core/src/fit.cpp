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

#include "kakeya/fit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "kakeya/error.hpp"
#include "kakeya/inball.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

namespace {

// Orientation samples: the uniform angle grid in the plane, seeded uniform
// quaternions in space.  A ball is rotation-invariant, so a single sample
// carries the full sweep.
std::vector<Rotation> orientation_samples(const Shape& p, int n,
                                          std::uint64_t seed) {
  std::vector<Rotation> out;
  const int d = dimension(p);
  if (std::holds_alternative<Ball>(p)) {
    out.push_back(Rotation::identity(d));
    return out;
  }
  out.reserve(static_cast<std::size_t>(n));
  if (d == 2) {
    for (int k = 0; k < n; ++k)
      out.push_back(Rotation::planar(2.0 * std::numbers::pi * k / n));
  } else {
    Rng rng(seed);
    for (int k = 0; k < n; ++k) out.push_back(rng.unit_quaternion());
  }
  return out;
}

Vector negated(Vector v) {
  for (double& x : v) x = -x;
  return v;
}

// Circumradius of the centered body about the origin; the Lipschitz constant
// of its support functions in the rotation angle.
double rotation_lipschitz(const Shape& centered) {
  if (std::holds_alternative<Ball>(centered)) return 0.0;
  if (const auto* poly = std::get_if<ConvexPolygon>(&centered)) {
    double r = 0.0;
    for (const Vec2& v : poly->vertices()) r = std::max(r, norm(v));
    return r;
  }
  if (const auto* k = std::get_if<VPolytope3>(&centered)) {
    double r = 0.0;
    for (const Vec3& v : k->vertices()) r = std::max(r, norm(v));
    return r;
  }
  throw InvalidParameter("no rotation bound for this carrier");
}

// Planar halfspace bodies get a vertex carrier up front: supports become
// vertex maxima and the rotation bound is computable.
Shape vertex_carrier(const Shape& p) {
  if (const auto* h = std::get_if<HPolytope>(&p)) {
    if (h->dim() == 2) return Shape{to_polygon(*h)};
  }
  return p;
}

Shape center_at_reference(const Shape& p) {
  return translated(p, negated(centering_point(p)));
}

}  // namespace

FitReport fits_translated(const Shape& p, const HPolytope& q,
                          const Rotation& rho) {
  if (dimension(p) != q.dim() || rho.dim() != q.dim())
    throw DimensionMismatch("fit operands live in different dimensions");
  ChebyshevResult c = chebyshev_lp(erosion(q, rotated(p, rho)));
  return FitReport{c.radius >= -kFitMarginTol, c.radius, std::move(c.center)};
}

SweepReport sweep_fit(const Shape& p, const HPolytope& q, int n, bool certify,
                      std::uint64_t seed) {
  if (n < 8) throw InvalidParameter("sweep needs at least 8 samples");
  const int d = dimension(p);
  if (d != q.dim())
    throw DimensionMismatch("sweep operands live in different dimensions");
  if (certify && d != 2)
    throw UnsupportedCertification(
        "rigorous sweep certification exists only in the plane");

  // Center P so the rotation bound is taken about its Chebyshev center;
  // margins are translation-invariant, so this changes nothing else.
  Shape pc = center_at_reference(vertex_carrier(p));
  std::vector<Rotation> rots = orientation_samples(pc, n, seed);

  SweepReport rep;
  rep.samples = n;
  rep.all_fit = true;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < rots.size(); ++k) {
    FitReport fr = fits_translated(pc, q, rots[k]);
    rep.all_fit = rep.all_fit && fr.fits;
    if (fr.margin < rep.worst_margin) {
      rep.worst_margin = fr.margin;
      rep.worst_index = static_cast<int>(k);
      rep.worst_angle = rots[k].rotation_angle();
    }
  }

  if (certify) {
    rep.lipschitz_bound = rotation_lipschitz(pc);
    double half_gap = std::numbers::pi / n;
    rep.certified =
        rep.all_fit &&
        rep.worst_margin >= rep.lipschitz_bound * half_gap - kFitMarginTol;
  }
  return rep;
}

double max_scale(const Shape& p, const HPolytope& q, int n,
                 std::uint64_t seed) {
  if (n < 8) throw InvalidParameter("sweep needs at least 8 samples");
  const int d = dimension(p);
  if (d != q.dim())
    throw DimensionMismatch("operands live in different dimensions");

  const Shape pv = vertex_carrier(p);

  // Axis-width bracket: fitting at the identity orientation already forces
  // alpha * width(P, e_j) <= width(Q, e_j).
  double alpha_ub = std::numeric_limits<double>::infinity();
  for (int j = 0; j < d; ++j) {
    Vector axis(static_cast<std::size_t>(d), 0.0);
    axis[static_cast<std::size_t>(j)] = 1.0;
    double wp = width_in(pv, axis);
    if (wp <= 0.0) continue;
    alpha_ub = std::min(alpha_ub, width_in(Shape{q}, axis) / wp);
  }
  if (!std::isfinite(alpha_ub))
    throw DegenerateShape("max scale of a single point is unbounded");

  Shape pc = center_at_reference(pv);
  std::vector<Rotation> rots = orientation_samples(pc, n, seed);

  // Support table: h_{alpha P}(a) = alpha h_P(a) about the centering point,
  // so each candidate alpha costs one offset update plus one tiny LP per
  // orientation.
  std::vector<std::vector<double>> sup(rots.size());
  for (std::size_t k = 0; k < rots.size(); ++k) {
    Shape rp = rotated(pc, rots[k]);
    sup[k].reserve(q.num_constraints());
    for (const Vector& a : q.normals()) sup[k].push_back(support(rp, a));
  }

  auto passes = [&](double alpha) {
    for (std::size_t k = 0; k < rots.size(); ++k) {
      Vector offsets = q.offsets();
      for (std::size_t i = 0; i < offsets.size(); ++i)
        offsets[i] -= alpha * sup[k][i];
      ChebyshevResult c =
          chebyshev_lp(HPolytope::unchecked(q.normals(), std::move(offsets)));
      if (c.radius < -kFitMarginTol) return false;
    }
    return true;
  };

  if (passes(alpha_ub)) return alpha_ub;
  double lo = 0.0, hi = alpha_ub;
  for (int it = 0; it < 48; ++it) {
    double mid = 0.5 * (lo + hi);
    if (passes(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace kakeya
