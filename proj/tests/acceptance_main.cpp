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

// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit code 0 only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace kakeya;
using namespace testutil;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("[%s] C%d %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return std::string(buf);
}

// --- C1: Chebyshev centers at analytic values, under 10 ms each. ---------
void criterion_1() {
  Timer t_sq;
  Ball sq = chebyshev_center(Shape{unit_square()});
  double dt_sq = t_sq.seconds();
  bool pass = std::abs(sq.radius - 0.5) <= 1e-9 &&
              std::abs(sq.center[0] - 0.5) <= 1e-9 &&
              std::abs(sq.center[1] - 0.5) <= 1e-9;

  Timer t_eq;
  Ball eq = chebyshev_center(Shape{equilateral_triangle()});
  double dt_eq = t_eq.seconds();
  const double r_eq = 1.0 / (2.0 * std::sqrt(3.0));
  pass = pass && std::abs(eq.radius - r_eq) <= 1e-9;
  pass = pass && dt_sq < 0.010 && dt_eq < 0.010;

  report(1, "chebyshev centers (square, equilateral triangle)", pass,
         fmt("r_sq=%.12f r_eq=%.12f times %.2fms, %.2fms", sq.radius, eq.radius,
             dt_sq * 1e3, dt_eq * 1e3));
}

// --- C2: square-reuleaux scenario. ----------------------------------------
void criterion_2() {
  Timer timer;
  const HPolytope hq = to_hpolytope(unit_square());
  Ball disk(Vector{0.5, 0.5}, 0.5);
  ConvexPolygon reuleaux = reuleaux_triangle(1.0, 256);

  double peri_r = perimeter(reuleaux);
  double peri_d = perimeter(disk);
  double gap = area(disk) - area(reuleaux);
  const double expected_gap = kPi / 4.0 - (kPi - std::sqrt(3.0)) / 2.0;

  SweepReport sw_d = sweep_fit(Shape{disk}, hq, 720, true);
  SweepReport sw_r = sweep_fit(Shape{reuleaux}, hq, 720, true);
  double dt = timer.seconds();

  bool pass = std::abs(peri_r - kPi) <= 1e-3 &&
              std::abs(peri_d - kPi) <= 1e-6 &&
              std::abs(gap - expected_gap) <= 1e-3 &&
              sw_d.all_fit && sw_d.worst_margin >= -1e-6 &&
              sw_r.all_fit && sw_r.worst_margin >= -1e-6 && dt < 5.0;
  report(2, "square-reuleaux perimeter tie and certified-mode sweeps", pass,
         fmt("|peri_R-pi|=%.2e |peri_D-pi|=%.2e gap_err=%.2e margins %.1e/%.1e "
             "%.2fs",
             std::abs(peri_r - kPi), std::abs(peri_d - kPi),
             std::abs(gap - expected_gap), sw_d.worst_margin, sw_r.worst_margin,
             dt));
}

// --- C3: width to inball-diameter ratio of the equilateral triangle. ------
void criterion_3() {
  MinWidthResult w = min_width(Shape{equilateral_triangle()});
  Ball inc = chebyshev_center(Shape{equilateral_triangle()});
  double ratio = w.width / (2.0 * inc.radius);
  bool pass = std::abs(ratio - 1.5) <= 1e-9;
  report(3, "min width / inball diameter = 1.5 for the equilateral triangle",
         pass, fmt("ratio=%.12f", ratio));
}

// --- C4: perimeter additivity over 1000 seeded pairs. ----------------------
void criterion_4() {
  Timer timer;
  ExperimentReport rep = check_perimeter_additivity(1000, 42);
  double dt = timer.seconds();
  bool pass = rep.failures == 0 && dt < 5.0;
  report(4, "perimeter additivity, 1000 pairs at 1e-12 relative", pass,
         fmt("failures=%d worst=%.2e %.2fs", rep.failures, rep.worst_violation,
             dt));
}

// --- C5: Brunn-Minkowski concavity suites. ---------------------------------
void criterion_5() {
  Timer timer;
  ExperimentReport area2 = check_bm_concavity(500, 42, 0, 2);
  ExperimentReport vol3 = check_bm_concavity(500, 42, 0, 3);
  ExperimentReport surf3 = check_bm_concavity(500, 42, 1, 3);
  double dt = timer.seconds();
  bool pass = area2.failures == 0 && vol3.failures == 0 &&
              surf3.failures == 0 && dt < 120.0;
  report(5, "Brunn-Minkowski concavity (area 2D, volume 3D, sqrt W1 3D)", pass,
         fmt("failures=%d/%d/%d worst=%.2e/%.2e/%.2e %.2fs", area2.failures,
             vol3.failures, surf3.failures, area2.worst_violation,
             vol3.worst_violation, surf3.worst_violation, dt));
}

// --- C6: phi-algebra exactness on 1000 mu-polygons. -------------------------
void criterion_6() {
  ExperimentReport rep = check_phi_algebra(1000, 42);
  bool pass = rep.failures == 0;
  report(6, "phi algebra exact to 1e-12 over mu in {4,8,16,64}", pass,
         fmt("failures=%d worst=%.2e", rep.failures, rep.worst_violation));
}

// --- C7: mu-average fit on 100 seeded pairs. --------------------------------
void criterion_7() {
  ExperimentReport rep = check_mu_average_fit(100, 42);
  bool pass = rep.failures == 0;
  report(7, "mu-average of grid-fitting bodies fits at the identity", pass,
         fmt("failures=%d worst=%.2e", rep.failures, rep.worst_violation));
}

// --- C8: main-theorem bounds on 1000 members plus the square rotor. ---------
void criterion_8() {
  ExperimentReport rep = check_main_theorem_random(1000, 42, 180);
  double rotor = max_scale(Shape{unit_square()},
                           to_hpolytope(unit_square()), 720);
  bool pass = rep.failures == 0 &&
              std::abs(rotor - 1.0 / std::sqrt(2.0)) <= 1e-3;
  report(8, "K(unit square) members below the inball area/perimeter", pass,
         fmt("failures=%d worst=%.2e rotor=%.6f", rep.failures,
             rep.worst_violation, rotor));
}

// --- C9: Steiner coefficients of the cube plus the Monte Carlo fit. ---------
void criterion_9() {
  Timer timer;
  SteinerCoeffs3 c = steiner_coefficients(unit_cube());
  bool pass = std::abs(c.v - 1.0) <= 1e-12 && std::abs(c.s - 6.0) <= 1e-12 &&
              std::abs(c.m - 3.0 * kPi) <= 1e-9 &&
              std::abs(c.b - 4.0 / 3.0 * kPi) <= 1e-12;

  // Monte Carlo vol(cube + rB) via the exact distance to the unit cube.
  double mc_err[2] = {0.0, 0.0};
  const double radii[2] = {0.1, 0.5};
  for (int i = 0; i < 2; ++i) {
    double r = radii[i];
    double steiner = c.v + c.s * r + c.m * r * r + c.b * r * r * r;
    Rng rng(0xC0FFEE + static_cast<std::uint64_t>(i));
    const int n = 10000000;
    long long inside = 0;
    for (int s = 0; s < n; ++s) {
      Vec3 p{rng.uniform(-r, 1.0 + r), rng.uniform(-r, 1.0 + r),
             rng.uniform(-r, 1.0 + r)};
      if (dist_to_unit_cube(p) <= r) ++inside;
    }
    double box = (1.0 + 2.0 * r);
    double mc = box * box * box * static_cast<double>(inside) / n;
    mc_err[i] = std::abs(mc - steiner) / steiner;
    pass = pass && mc_err[i] <= 0.005;
  }
  double dt = timer.seconds();
  pass = pass && dt < 30.0;
  report(9, "cube Steiner coefficients (1, 6, 3pi, 4pi/3) + Monte Carlo", pass,
         fmt("m_err=%.2e mc_err=%.2e/%.2e %.2fs", std::abs(c.m - 3.0 * kPi),
             mc_err[0], mc_err[1], dt));
}

// --- C10: dual-route oracles. ------------------------------------------------
void criterion_10() {
  // Edge merge against the pairwise-sum hull on 500 random pairs.
  double worst_pair = 0.0;
  bool pass = true;
  for (int t = 0; t < 500; ++t) {
    Rng rng(880000 + t);
    ConvexPolygon p = random_convex_polygon(rng.uniform_int(3, 24), 881000 + t);
    ConvexPolygon r = random_convex_polygon(rng.uniform_int(3, 24), 882000 + t);
    double d = cyclic_vertex_distance(minkowski_sum(p, r),
                                      oracle_minkowski_sum(p, r));
    worst_pair = std::max(worst_pair, d);
    if (!(d <= 1e-9)) pass = false;
  }

  // Erosion membership against direct containment on 10^4 translations.
  ConvexPolygon q = scaled(random_convex_polygon(12, 883000), 2.0);
  ConvexPolygon p = random_convex_polygon(7, 883001);
  const HPolytope hq = to_hpolytope(q);
  HPolytope ero = erosion(hq, Shape{p});
  Rng rng(883002);
  double worst_gap = 0.0;
  for (int s = 0; s < 10000; ++s) {
    Vector tr{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    double slack = 1e300;
    for (std::size_t i = 0; i < ero.num_constraints(); ++i)
      slack = std::min(slack, (ero.offsets()[i] - dot(ero.normals()[i], tr)) /
                                  norm(ero.normals()[i]));
    double direct = contains(Shape{q}, translated(Shape{p}, tr)).margin;
    worst_gap = std::max(worst_gap, std::abs(slack - direct));
    if ((slack >= 0.0) != (direct >= 0.0) && std::abs(slack) > 1e-9)
      pass = false;
  }
  pass = pass && worst_gap <= 1e-9;
  report(10, "edge merge vs pairwise-sum hull; erosion vs containment", pass,
         fmt("worst_vertex_dist=%.2e worst_margin_gap=%.2e", worst_pair,
             worst_gap));
}

}  // namespace

int main() {
  Timer total;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d/10 criteria passed in %.1fs\n", 10 - g_failures,
              total.seconds());
  return g_failures == 0 ? 0 : 1;
}
