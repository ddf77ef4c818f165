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

#include "kakeya/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "kakeya/error.hpp"
#include "kakeya/fit.hpp"
#include "kakeya/inball.hpp"
#include "kakeya/lp.hpp"
#include "kakeya/minkowski.hpp"
#include "kakeya/mu_polygon.hpp"

namespace kakeya {

namespace {

constexpr double kPi = std::numbers::pi;

class Digest {
 public:
  void add(double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h_ ^= (bits >> (8 * i)) & 0xFF;
      h_ *= 0x100000001B3ULL;
    }
  }
  void add(Vec2 v) {
    add(v.x);
    add(v.y);
  }
  void add(Vec3 v) {
    add(v.x);
    add(v.y);
    add(v.z);
  }
  void add(const ConvexPolygon& p) {
    for (const Vec2& v : p.vertices()) add(v);
  }
  void add(const VPolytope3& k) {
    for (const Vec3& v : k.vertices()) add(v);
  }

  std::string str() const {
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h_ >> (4 * i)) & 0xF);
    return os.str();
  }

 private:
  std::uint64_t h_ = 0xCBF29CE484222325ULL;
};

// A violation of 0 means the trial satisfied its bound with slack.
void finish_trial(ExperimentReport& rep, TrialRecord rec, double violation,
                  double allowed) {
  rec.failed = violation > allowed;
  rec.quantities.emplace_back("violation", violation);
  rep.trials += 1;
  if (rec.failed) rep.failures += 1;
  rep.worst_violation = std::max(rep.worst_violation, violation);
  rep.details.push_back(std::move(rec));
}

ConvexPolygon centered_scaled_to(const ConvexPolygon& raw, Vec2 target_center,
                                 double target_circumradius) {
  Vec2 c = to_vec2(centering_point(Shape{raw}));
  double circ = 0.0;
  for (const Vec2& v : raw.vertices()) circ = std::max(circ, norm(v - c));
  double f = target_circumradius / circ;
  std::vector<Vec2> verts;
  verts.reserve(raw.size());
  for (const Vec2& v : raw.vertices())
    verts.push_back(target_center + (v - c) * f);
  return ConvexPolygon(std::move(verts));
}

double measure_psi(const ConvexPolygon& p, int w) {
  if (w != 0) throw InvalidParameter("planar boundary measure needs d >= 3");
  return area(p);
}

double measure_psi(const VPolytope3& p, int w) {
  return w == 0 ? volume(p) : surface_area(p);
}

}  // namespace

ConvexPolygon random_convex_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidParameter("need at least 3 points");
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(rng.in_unit_disk());
    ConvexPolygon hull = convex_hull(std::move(pts));
    if (!hull.degenerate()) return hull;
  }
  throw DegenerateShape("random point sets kept collapsing");
}

VPolytope3 random_convex_polytope3(int n, std::uint64_t seed) {
  if (n < 4) throw InvalidParameter("need at least 4 points");
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(rng.on_unit_sphere());
    try {
      return VPolytope3::hull(pts);
    } catch (const DegenerateShape&) {
      continue;
    }
  }
  throw DegenerateShape("random point sets kept collapsing");
}

ConvexPolygon reuleaux_triangle(double width, int points_per_arc) {
  if (!(width > 0.0)) throw InvalidParameter("width must be positive");
  if (points_per_arc < 2) throw InvalidParameter("need at least 2 points per arc");
  const double w = width;
  const Vec2 corners[3] = {{0.0, 0.0}, {w, 0.0}, {w / 2.0, w * std::sqrt(3.0) / 2.0}};
  const double arc_start[3] = {0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0};
  std::vector<Vec2> pts;
  pts.reserve(3 * static_cast<std::size_t>(points_per_arc));
  for (int arc = 0; arc < 3; ++arc) {
    for (int k = 0; k < points_per_arc; ++k) {
      double a = arc_start[arc] + (kPi / 3.0) * k / points_per_arc;
      pts.push_back(corners[arc] + Vec2{w * std::cos(a), w * std::sin(a)});
    }
  }
  return ConvexPolygon(std::move(pts));
}

ExperimentReport check_interpolation_fit(int trials, std::uint64_t seed,
                                         const Tolerances& tol) {
  ExperimentReport rep;
  rep.name = "interpolation-fit";
  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    ConvexPolygon q = scaled(
        random_convex_polygon(rng.uniform_int(8, 24), rng.next_u64()), 2.0);
    Ball inq = chebyshev_center(Shape{q});
    Vec2 qc = to_vec2(inq.center);

    ConvexPolygon p0 = centered_scaled_to(
        random_convex_polygon(rng.uniform_int(5, 15), rng.next_u64()), qc,
        rng.uniform(0.3, 0.95) * inq.radius);
    ConvexPolygon p1 = centered_scaled_to(
        random_convex_polygon(rng.uniform_int(5, 15), rng.next_u64()), qc,
        rng.uniform(0.3, 0.95) * inq.radius);

    TrialRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    Digest dig;
    dig.add(q);
    dig.add(p0);
    dig.add(p1);
    rec.digest = dig.str();

    const HPolytope hq = to_hpolytope(q);
    const Rotation rho = Rotation::planar(rng.uniform(0.0, 2.0 * kPi));
    FitReport f0 = fits_translated(Shape{p0}, hq, rho);
    FitReport f1 = fits_translated(Shape{p1}, hq, rho);

    double worst = std::numeric_limits<double>::infinity();
    double worst_rotated = worst;
    for (int g = 0; g <= 10; ++g) {
      double lambda = g / 10.0;
      ConvexPolygon mid = interpolate(p0, p1, lambda);
      worst = std::min(worst, contains(Shape{q}, Shape{mid}).margin);

      // The averaged witness from the proof of the closure lemma.
      Vector tr{(1.0 - lambda) * f0.translation[0] + lambda * f1.translation[0],
                (1.0 - lambda) * f0.translation[1] + lambda * f1.translation[1]};
      Shape placed = translated(Shape{rotated(mid, rho)}, tr);
      worst_rotated = std::min(worst_rotated, contains(Shape{q}, placed).margin);
    }

    rec.quantities.emplace_back("worst_margin", worst);
    rec.quantities.emplace_back("worst_margin_rotated", worst_rotated);
    double violation = std::max(0.0, -std::min(worst, worst_rotated));
    finish_trial(rep, std::move(rec), violation, tol.abs);
  }
  return rep;
}

namespace {

template <typename Body, typename MidFn, typename ScaleFn>
void halfway_gain_trial(ExperimentReport& rep, int t, const Body& p0_raw,
                        const Body& p1_raw, int w, int subcase, MidFn midpoint,
                        ScaleFn scale_body, const Tolerances& tol) {
  // Rescale P1 to the common measure, then compare the midpoint.
  double m0 = measure_psi(p0_raw, w);
  double m1 = measure_psi(p1_raw, w);
  Body p1 = scale_body(p1_raw, m0 / m1);
  Body mid = midpoint(p0_raw, p1);
  double gain = measure_psi(mid, w) - m0;

  TrialRecord rec;
  rec.trial = static_cast<std::uint64_t>(t);
  Digest dig;
  dig.add(p0_raw);
  dig.add(p1_raw);
  rec.digest = dig.str();
  rec.quantities.emplace_back("common_measure", m0);
  rec.quantities.emplace_back("midpoint_gain", gain);
  rec.quantities.emplace_back("subcase", static_cast<double>(subcase));

  double violation = std::max(0.0, -gain);  // gain must be nonnegative
  if (subcase == 0) {
    violation = std::abs(gain);  // homothets: equality
  } else if (subcase == 1) {
    // Rotated copies of an asymmetric body are not homothets: strict gain.
    violation = std::max(violation, 1e-6 - gain);
  }
  finish_trial(rep, std::move(rec), violation, tol.abs);
}

}  // namespace

ExperimentReport check_halfway_gain(int trials, std::uint64_t seed, int w,
                                    int d, const Tolerances& tol) {
  if (!((w == 0 && d == 2) || (w == 0 && d == 3) || (w == 1 && d == 3)))
    throw InvalidParameter("midpoint gain needs d >= 2 + w with d in {2, 3}");

  ExperimentReport rep;
  rep.name = "halfway-gain-w" + std::to_string(w) + "d" + std::to_string(d);
  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    const int subcase = t % 3;  // 0 homothets, 1 rotated copy, 2 independent

    if (d == 2) {
      ConvexPolygon p0 = random_convex_polygon(rng.uniform_int(5, 20), rng.next_u64());
      ConvexPolygon p1 =
          subcase == 0
              ? translated(scaled(p0, rng.uniform(0.5, 2.0)),
                           {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)})
          : subcase == 1
              ? rotated(p0, Rotation::planar(rng.uniform(0.3, kPi - 0.3)))
              : random_convex_polygon(rng.uniform_int(5, 20), rng.next_u64());
      halfway_gain_trial(
          rep, t, p0, p1, w, subcase,
          [](const ConvexPolygon& a, const ConvexPolygon& b) {
            return interpolate(a, b, 0.5);
          },
          [w](const ConvexPolygon& a, double ratio) {
            return scaled(a, std::pow(ratio, 1.0 / (2.0 - w)));
          },
          tol);
    } else {
      VPolytope3 p0 = random_convex_polytope3(rng.uniform_int(8, 16), rng.next_u64());
      VPolytope3 p1 =
          subcase == 0
              ? translated(scaled(p0, rng.uniform(0.5, 2.0)),
                           Vector{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                  rng.uniform(-1.0, 1.0)})
          : subcase == 1 ? rotated(p0, rng.unit_quaternion())
                         : random_convex_polytope3(rng.uniform_int(8, 16),
                                                   rng.next_u64());
      halfway_gain_trial(
          rep, t, p0, p1, w, subcase,
          [](const VPolytope3& a, const VPolytope3& b) {
            return interpolate(a, b, 0.5);
          },
          [w](const VPolytope3& a, double ratio) {
            return scaled(a, std::pow(ratio, 1.0 / (3.0 - w)));
          },
          tol);
    }
  }
  return rep;
}

ExperimentReport check_bm_concavity(int trials, std::uint64_t seed, int w,
                                    int d, const Tolerances& tol) {
  if (!((w == 0 && d == 2) || (w == 0 && d == 3) || (w == 1 && d == 3)))
    throw InvalidParameter("concavity suite needs d >= 2 + w with d in {2, 3}");

  ExperimentReport rep;
  rep.name = "bm-concavity-w" + std::to_string(w) + "d" + std::to_string(d);
  const double root = (w == 0) ? 1.0 / d : 0.5;  // W_1^(1/2) for the surface

  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    const bool homothets = t % 3 == 0;

    // f(lambda) on the 11-point grid.
    double f[11];
    TrialRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    Digest dig;
    if (d == 2) {
      ConvexPolygon k0 = random_convex_polygon(rng.uniform_int(5, 20), rng.next_u64());
      ConvexPolygon k1 =
          homothets ? translated(scaled(k0, rng.uniform(0.4, 2.5)),
                                 {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)})
                    : random_convex_polygon(rng.uniform_int(5, 20), rng.next_u64());
      dig.add(k0);
      dig.add(k1);
      for (int g = 0; g <= 10; ++g)
        f[g] = std::pow(area(interpolate(k0, k1, g / 10.0)), root);
    } else {
      VPolytope3 k0 = random_convex_polytope3(rng.uniform_int(8, 14), rng.next_u64());
      VPolytope3 k1 =
          homothets
              ? translated(scaled(k0, rng.uniform(0.4, 2.5)),
                           Vector{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                  rng.uniform(-1.0, 1.0)})
              : random_convex_polytope3(rng.uniform_int(8, 14), rng.next_u64());
      dig.add(k0);
      dig.add(k1);
      for (int g = 0; g <= 10; ++g) {
        VPolytope3 mid = interpolate(k0, k1, g / 10.0);
        double q = (w == 0) ? volume(mid) : surface_area(mid) / 3.0;  // W_1
        f[g] = std::pow(q, root);
      }
    }
    rec.digest = dig.str();

    double violation = 0.0;
    for (int g = 1; g <= 9; ++g)
      violation = std::max(violation, 0.5 * (f[g - 1] + f[g + 1]) - f[g]);
    if (homothets) {
      for (int g = 0; g <= 10; ++g) {
        double lin = f[0] + (f[10] - f[0]) * (g / 10.0);
        double dev = std::abs(f[g] - lin);
        if (dev > 1e-7) violation = std::max(violation, dev);
      }
    }
    rec.quantities.emplace_back("f0", f[0]);
    rec.quantities.emplace_back("f10", f[10]);
    rec.quantities.emplace_back("homothets", homothets ? 1.0 : 0.0);
    finish_trial(rep, std::move(rec), violation, tol.abs);
  }
  return rep;
}

ExperimentReport check_perimeter_additivity(int trials, std::uint64_t seed,
                                            const Tolerances& tol) {
  ExperimentReport rep;
  rep.name = "perimeter-additivity";
  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    ConvexPolygon p = random_convex_polygon(rng.uniform_int(3, 40), rng.next_u64());
    ConvexPolygon r = random_convex_polygon(rng.uniform_int(3, 40), rng.next_u64());
    ConvexPolygon sum = minkowski_sum(p, r);
    double lhs = perimeter(sum);
    double rel = std::abs(lhs - perimeter(p) - perimeter(r)) / lhs;

    TrialRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    Digest dig;
    dig.add(p);
    dig.add(r);
    rec.digest = dig.str();
    rec.quantities.emplace_back("relative_defect", rel);
    finish_trial(rep, std::move(rec), rel > tol.rel ? rel : 0.0, 0.0);
  }
  return rep;
}

namespace {

// Random valid edge-length vector: unit lengths plus noise projected onto
// the closure subspace.  The mu-gon directions satisfy sum(d_k d_k^T) =
// (mu/2) I, so the projection is delta - (2/mu) D^T (D delta).
MuVector random_mu_vector(int mu, Rng& rng) {
  std::vector<double> delta(static_cast<std::size_t>(mu));
  for (double& x : delta) x = rng.uniform(-0.3, 0.3);
  Vec2 drift{0.0, 0.0};
  for (int k = 0; k < mu; ++k)
    drift = drift + delta[static_cast<std::size_t>(k)] * mu_direction(mu, k);
  std::vector<double> lengths(static_cast<std::size_t>(mu));
  for (int k = 0; k < mu; ++k) {
    double corr = (2.0 / mu) * dot(drift, mu_direction(mu, k));
    lengths[static_cast<std::size_t>(k)] =
        1.0 + delta[static_cast<std::size_t>(k)] - corr;
  }
  return MuVector(mu, std::move(lengths));
}

}  // namespace

ExperimentReport check_phi_algebra(int trials, std::uint64_t seed,
                                   const Tolerances& tol) {
  (void)tol;  // the vector algebra is held to fixed exactness bounds
  ExperimentReport rep;
  rep.name = "phi-algebra";
  const int mus[4] = {4, 8, 16, 64};
  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    const int mu = mus[t % 4];
    MuVector va = random_mu_vector(mu, rng);
    MuVector vb = random_mu_vector(mu, rng);
    ConvexPolygon pa = polygon_from_phi(va);
    ConvexPolygon pb = polygon_from_phi(vb);

    TrialRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    Digest dig;
    dig.add(pa);
    dig.add(pb);
    rec.digest = dig.str();

    double err = 0.0;
    // Round trip.
    MuVector ra = phi(pa, mu);
    for (int k = 0; k < mu; ++k)
      err = std::max(err, std::abs(ra.lengths[static_cast<std::size_t>(k)] -
                                   va.lengths[static_cast<std::size_t>(k)]));
    // Additivity under Minkowski sums.
    MuVector sum = phi(minkowski_sum(pa, pb), mu);
    for (int k = 0; k < mu; ++k)
      err = std::max(err, std::abs(sum.lengths[static_cast<std::size_t>(k)] -
                                   va.lengths[static_cast<std::size_t>(k)] -
                                   vb.lengths[static_cast<std::size_t>(k)]));
    // Homogeneity.
    double alpha = rng.uniform(0.25, 3.0);
    MuVector sc = phi(scaled(pa, alpha), mu);
    for (int k = 0; k < mu; ++k)
      err = std::max(err, std::abs(sc.lengths[static_cast<std::size_t>(k)] -
                                   alpha * va.lengths[static_cast<std::size_t>(k)]));
    // Rotation by 2*pi/mu is the cyclic right shift.
    MuVector rot = phi(rotated(pa, Rotation::planar(2.0 * kPi / mu)), mu);
    MuVector shifted = mu_rotate(va);
    for (int k = 0; k < mu; ++k)
      err = std::max(err, std::abs(rot.lengths[static_cast<std::size_t>(k)] -
                                   shifted.lengths[static_cast<std::size_t>(k)]));
    // Averaging: constant vector preserving the total length.
    MuVector avg = mu_average(va);
    double total = 0.0;
    for (double a : va.lengths) total += a;
    double r_expected = total / mu;
    for (int k = 0; k < mu; ++k)
      err = std::max(err, std::abs(avg.lengths[static_cast<std::size_t>(k)] -
                                   r_expected));
    // Polygon-level average preserves the perimeter.
    double peri = perimeter(pa);
    double peri_avg = perimeter(mu_average(pa, mu));
    double rel = std::abs(peri_avg - peri) / peri;

    rec.quantities.emplace_back("max_vector_error", err);
    rec.quantities.emplace_back("perimeter_rel_defect", rel);
    double violation = 0.0;
    if (err > 1e-12) violation = std::max(violation, err);
    if (rel > 1e-9) violation = std::max(violation, rel);
    finish_trial(rep, std::move(rec), violation, 0.0);
  }
  return rep;
}

ExperimentReport check_mu_average_fit(int trials, std::uint64_t seed,
                                      const Tolerances& tol) {
  ExperimentReport rep;
  rep.name = "mu-average-fit";
  const int mus[3] = {4, 8, 16};
  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    const int mu = mus[t % 3];
    ConvexPolygon q = scaled(
        random_convex_polygon(rng.uniform_int(6, 16), rng.next_u64()), 1.5);
    const HPolytope hq = to_hpolytope(q);
    ConvexPolygon p_raw =
        random_convex_polygon(rng.uniform_int(4, 12), rng.next_u64());
    ConvexPolygon p0 =
        translated(p_raw, -to_vec2(centering_point(Shape{p_raw})));

    // Largest fixed-orientation scale per grid orientation, each one LP:
    // maximize alpha s.t. A t + h_{rot P}(a_i) alpha <= b.
    double alpha = std::numeric_limits<double>::infinity();
    for (int k = 0; k < mu; ++k) {
      ConvexPolygon rp = rotated(p0, Rotation::planar(2.0 * kPi * k / mu));
      LpProblem lp;
      lp.offsets = hq.offsets();
      for (const Vector& a : hq.normals()) {
        Vector row = a;
        row.push_back(support(rp, to_vec2(a)));
        lp.normals.push_back(std::move(row));
      }
      lp.objective = {0.0, 0.0, 1.0};
      LpSolution sol = solve_lp(lp);
      if (sol.status != LpStatus::optimal || sol.value <= 0.0) {
        alpha = 0.0;
        break;
      }
      alpha = std::min(alpha, sol.value);
    }

    TrialRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    Digest dig;
    dig.add(q);
    dig.add(p0);
    rec.digest = dig.str();

    if (alpha <= 0.0) {
      rec.quantities.emplace_back("precondition_failed", 1.0);
      finish_trial(rep, std::move(rec), 0.0, tol.abs);
      continue;
    }

    ConvexPolygon p = scaled(p0, 0.98 * alpha);
    double pre_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < mu; ++k) {
      FitReport fr =
          fits_translated(Shape{p}, hq, Rotation::planar(2.0 * kPi * k / mu));
      pre_margin = std::min(pre_margin, fr.margin);
    }
    ConvexPolygon avg = mu_average(p, mu);
    FitReport fit_avg = fits_translated(Shape{avg}, hq, Rotation::planar(0.0));

    rec.quantities.emplace_back("mu", static_cast<double>(mu));
    rec.quantities.emplace_back("grid_margin", pre_margin);
    rec.quantities.emplace_back("average_margin", fit_avg.margin);
    double violation = 0.0;
    if (pre_margin < 0.0)
      violation = -pre_margin;  // generator failed its own precondition
    else if (!fit_avg.fits)
      violation = -fit_avg.margin;
    finish_trial(rep, std::move(rec), violation, tol.abs);
  }
  return rep;
}

namespace {

double shape_area(const Shape& s) {
  if (const auto* p = std::get_if<ConvexPolygon>(&s)) return area(*p);
  if (const auto* b = std::get_if<Ball>(&s)) return area(*b);
  if (const auto* h = std::get_if<HPolytope>(&s)) return area(to_polygon(*h));
  throw InvalidParameter("area of a 3D body");
}

double shape_perimeter(const Shape& s) {
  if (const auto* p = std::get_if<ConvexPolygon>(&s)) return perimeter(*p);
  if (const auto* b = std::get_if<Ball>(&s)) return perimeter(*b);
  if (const auto* h = std::get_if<HPolytope>(&s))
    return perimeter(to_polygon(*h));
  throw InvalidParameter("perimeter of a 3D body");
}

}  // namespace

ExperimentReport check_main_theorem(const Shape& q,
                                    const std::vector<Shape>& candidates,
                                    int n, const Tolerances& tol) {
  ExperimentReport rep;
  rep.name = "main-theorem";
  const int d = dimension(q);
  const HPolytope hq = [&]() -> HPolytope {
    if (const auto* p = std::get_if<ConvexPolygon>(&q)) return to_hpolytope(*p);
    if (const auto* k = std::get_if<VPolytope3>(&q)) return to_hpolytope(*k);
    return std::get<HPolytope>(q);
  }();
  const Ball inball = chebyshev_center(Shape{q});

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const Shape& cand = candidates[ci];
    TrialRecord rec;
    rec.trial = ci;
    Digest dig;
    dig.add(inball.radius);
    rec.digest = dig.str();

    SweepReport sweep = sweep_fit(cand, hq, n, false);
    rec.quantities.emplace_back("sweep_margin", sweep.worst_margin);
    if (!sweep.all_fit) {
      // Precondition failure, not a theorem violation.
      rec.quantities.emplace_back("precondition_failed", 1.0);
      finish_trial(rep, std::move(rec), 0.0, tol.abs);
      continue;
    }

    const bool is_ball = std::holds_alternative<Ball>(cand);
    double violation = 0.0;
    if (d == 2) {
      double a = shape_area(cand);
      double peri = shape_perimeter(cand);
      double a_ball = kPi * inball.radius * inball.radius;
      double p_ball = 2.0 * kPi * inball.radius;
      rec.quantities.emplace_back("area", a);
      rec.quantities.emplace_back("perimeter", peri);
      rec.quantities.emplace_back("inball_area", a_ball);
      rec.quantities.emplace_back("inball_perimeter", p_ball);
      violation = std::max(violation, a - a_ball - (is_ball ? tol.abs : 0.0));
      violation = std::max(violation, peri - p_ball);
    } else {
      const auto* k = std::get_if<VPolytope3>(&cand);
      double vol = k ? volume(*k) : volume(std::get<Ball>(cand));
      double surf = k ? surface_area(*k) : surface_area(std::get<Ball>(cand));
      double r = inball.radius;
      rec.quantities.emplace_back("volume", vol);
      rec.quantities.emplace_back("surface", surf);
      violation = std::max(violation, vol - 4.0 / 3.0 * kPi * r * r * r -
                                          (is_ball ? tol.abs : 0.0));
      violation = std::max(violation,
                           surf - 4.0 * kPi * r * r - (is_ball ? tol.abs : 0.0));
    }
    finish_trial(rep, std::move(rec), std::max(0.0, violation), 1e-6);
  }
  return rep;
}

ExperimentReport check_main_theorem_random(int trials, std::uint64_t seed,
                                           int n, const Tolerances& tol) {
  ExperimentReport rep;
  rep.name = "main-theorem-random";
  const ConvexPolygon square(
      {Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}});
  const HPolytope hq = to_hpolytope(square);
  const double a_ball = kPi * 0.25 * 0.25 * 4.0;  // pi/4
  const double p_ball = kPi;

  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    ConvexPolygon p =
        random_convex_polygon(rng.uniform_int(4, 10), rng.next_u64());
    double alpha = max_scale(Shape{p}, hq, n);
    ConvexPolygon member = scaled(p, 0.999 * alpha);

    TrialRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    Digest dig;
    dig.add(p);
    rec.digest = dig.str();

    double a = area(member);
    double peri = perimeter(member);
    rec.quantities.emplace_back("alpha", alpha);
    rec.quantities.emplace_back("area", a);
    rec.quantities.emplace_back("perimeter", peri);
    double violation = std::max({0.0, a - a_ball, peri - p_ball});
    finish_trial(rep, std::move(rec), violation, 1e-6);
  }
  return rep;
}

namespace {

TrialRecord named_check(const std::string& name, double violation) {
  TrialRecord rec;
  rec.digest = name;
  rec.quantities.emplace_back("check", violation);
  return rec;
}

ScenarioResult scenario_square_reuleaux(const Tolerances& tol) {
  (void)tol;  // this scenario pins its own tolerances
  ScenarioResult out;
  out.report.name = "square-reuleaux";
  ConvexPolygon square({Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}});
  const HPolytope hq = to_hpolytope(square);
  Ball disk(Vector{0.5, 0.5}, 0.5);
  ConvexPolygon reuleaux = reuleaux_triangle(1.0, 256);

  double peri_r = perimeter(reuleaux);
  double peri_d = perimeter(disk);
  double area_r = area(reuleaux);
  double area_d = area(disk);
  const double expected_gap = kPi / 4.0 - (kPi - std::sqrt(3.0)) / 2.0;

  auto push = [&](const std::string& name, double violation, double allowed) {
    finish_trial(out.report, named_check(name, violation), violation, allowed);
  };
  push("reuleaux_perimeter_vs_pi", std::abs(peri_r - kPi), 1e-3);
  push("disk_perimeter_vs_pi", std::abs(peri_d - kPi), 1e-6);
  push("area_gap", std::abs((area_d - area_r) - expected_gap), 1e-3);
  push("disk_area_strictly_larger", area_r < area_d ? 0.0 : 1.0, 0.5);

  SweepReport sw_d = sweep_fit(Shape{disk}, hq, 720, true);
  SweepReport sw_r = sweep_fit(Shape{reuleaux}, hq, 720, true);
  push("disk_sweep_margin", std::max(0.0, -(sw_d.worst_margin + 1e-6)), 0.0);
  out.report.details.back().quantities.emplace_back("margin", sw_d.worst_margin);
  out.report.details.back().quantities.emplace_back("certified",
                                                    sw_d.certified ? 1.0 : 0.0);
  push("reuleaux_sweep_margin", std::max(0.0, -(sw_r.worst_margin + 1e-6)), 0.0);
  out.report.details.back().quantities.emplace_back("margin", sw_r.worst_margin);

  // Place the Reuleaux triangle at its identity-orientation witness for the
  // figure.
  FitReport fr = fits_translated(Shape{reuleaux}, hq, Rotation::planar(0.0));
  out.figures.emplace_back("Q", Shape{square});
  out.figures.emplace_back("disk", Shape{disk});
  out.figures.emplace_back(
      "reuleaux", translated(Shape{reuleaux}, fr.translation));
  out.figures.emplace_back("inball", Shape{chebyshev_center(Shape{square})});
  return out;
}

ScenarioResult scenario_triangle_width(const Tolerances& tol) {
  ScenarioResult out;
  out.report.name = "triangle-width";
  ConvexPolygon tri(
      {Vec2{0, 0}, Vec2{1, 0}, Vec2{0.5, std::sqrt(3.0) / 2.0}});
  MinWidthResult w = min_width(Shape{tri});
  Ball inball = chebyshev_center(Shape{tri});
  double ratio = w.width / (2.0 * inball.radius);

  auto push = [&](const std::string& name, double violation, double allowed) {
    finish_trial(out.report, named_check(name, violation), violation, allowed);
  };
  push("width_over_inball_diameter_is_1p5", std::abs(ratio - 1.5), tol.abs);
  push("width_exceeds_inball_diameter",
       w.width > 2.0 * inball.radius ? 0.0 : 1.0, 0.5);
  out.report.details.front().quantities.emplace_back("width", w.width);
  out.report.details.front().quantities.emplace_back("inradius", inball.radius);

  out.figures.emplace_back("Q", Shape{tri});
  out.figures.emplace_back("inball", Shape{inball});
  return out;
}

ScenarioResult scenario_square_rotor_scale(const Tolerances& tol) {
  (void)tol;  // this scenario pins its own tolerances
  ScenarioResult out;
  out.report.name = "square-rotor-scale";
  ConvexPolygon square({Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}});
  const HPolytope hq = to_hpolytope(square);
  double alpha = max_scale(Shape{square}, hq, 720);
  double expected = 1.0 / std::sqrt(2.0);

  finish_trial(out.report, named_check("square_rotor_max_scale",
                                        std::abs(alpha - expected)),
               std::abs(alpha - expected), 1e-3);
  out.report.details.back().quantities.emplace_back("max_scale", alpha);

  Shape rotor = scaled(Shape{translated(square, {-0.5, -0.5})}, alpha);
  FitReport fr = fits_translated(rotor, hq, Rotation::planar(kPi / 4.0));
  out.figures.emplace_back("Q", Shape{square});
  out.figures.emplace_back("rotor",
                           translated(rotated(rotor, Rotation::planar(kPi / 4.0)),
                                      fr.translation));
  out.figures.emplace_back("inball", Shape{chebyshev_center(Shape{square})});
  return out;
}

ScenarioResult scenario_mu_average_demo(const Tolerances& tol) {
  ScenarioResult out;
  out.report.name = "mu-average-demo";
  ConvexPolygon rect({Vec2{0, 0}, Vec2{2, 0}, Vec2{2, 1}, Vec2{0, 1}});
  ConvexPolygon avg_poly = mu_average(rect, 4);
  MuVector avg_vec = mu_average(phi(rect, 4));
  ConvexPolygon avg_from_vec = polygon_from_phi(avg_vec);

  auto push = [&](const std::string& name, double violation, double allowed) {
    finish_trial(out.report, named_check(name, violation), violation, allowed);
  };
  push("perimeter_preserved",
       std::abs(perimeter(avg_poly) - perimeter(rect)) / perimeter(rect), 1e-9);
  // Both routes must produce the same mu-polygon up to translation.
  MuVector via_poly = phi(avg_poly, 4);
  double vec_err = 0.0;
  for (int k = 0; k < 4; ++k)
    vec_err = std::max(vec_err,
                       std::abs(via_poly.lengths[static_cast<std::size_t>(k)] -
                                avg_vec.lengths[static_cast<std::size_t>(k)]));
  push("vector_route_matches_sum_route", vec_err, 1e-9);
  push("average_is_square_side_1p5",
       std::abs(avg_vec.lengths[0] - 1.5), tol.abs);

  out.figures.emplace_back("P", Shape{rect});
  out.figures.emplace_back("average", Shape{avg_from_vec});
  return out;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "square-reuleaux", "triangle-width", "square-rotor-scale",
      "mu-average-demo"};
  return names;
}

ScenarioResult reproduce(const std::string& scenario, const Tolerances& tol) {
  if (scenario == "square-reuleaux") return scenario_square_reuleaux(tol);
  if (scenario == "triangle-width") return scenario_triangle_width(tol);
  if (scenario == "square-rotor-scale") return scenario_square_rotor_scale(tol);
  if (scenario == "mu-average-demo") return scenario_mu_average_demo(tol);
  throw UnknownScenario("unknown scenario: " + scenario);
}

}  // namespace kakeya
