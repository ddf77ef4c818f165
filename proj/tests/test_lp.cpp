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

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstring>
#include <numbers>

#include "helpers.hpp"

using namespace kakeya;
using namespace testutil;

namespace {

LpProblem box_lp() {
  LpProblem p;
  p.normals = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  p.offsets = {1.0, 1.0, 0.0, 0.0};
  p.objective = {1.0, 1.0};
  return p;
}

}  // namespace

TEST_CASE("simplex solves, detects infeasible and unbounded") {
  LpSolution sol = solve_lp(box_lp());
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sol.point[0] == doctest::Approx(1.0));
  CHECK(sol.point[1] == doctest::Approx(1.0));

  LpProblem infeas;
  infeas.normals = {{1.0}, {-1.0}};
  infeas.offsets = {1.0, -2.0};  // x <= 1 and x >= 2
  infeas.objective = {1.0};
  CHECK(solve_lp(infeas).status == LpStatus::infeasible);

  LpProblem unb;
  unb.normals = {{0.0, 1.0}, {0.0, -1.0}};
  unb.offsets = {1.0, 1.0};
  unb.objective = {1.0, 0.0};
  CHECK(solve_lp(unb).status == LpStatus::unbounded);
}

TEST_CASE("simplex is deterministic bit for bit") {
  LpProblem p;
  Rng rng(123);
  for (int i = 0; i < 40; ++i) {
    p.normals.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                         rng.uniform(-1.0, 1.0)});
    p.offsets.push_back(rng.uniform(0.2, 2.0));
  }
  p.objective = {0.3, -0.7, 1.1};
  LpSolution a = solve_lp(p);
  LpSolution b = solve_lp(p);
  REQUIRE(a.status == b.status);
  CHECK(std::memcmp(a.point.data(), b.point.data(),
                    a.point.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
}

TEST_CASE("LP solutions satisfy all constraints") {
  Rng rng(321);
  for (int t = 0; t < 30; ++t) {
    LpProblem p;
    for (int i = 0; i < 12; ++i) {
      p.normals.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
      p.offsets.push_back(rng.uniform(0.5, 2.0));
    }
    p.objective = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    LpSolution sol = solve_lp(p);
    if (sol.status != LpStatus::optimal) continue;
    for (std::size_t i = 0; i < p.normals.size(); ++i)
      CHECK(dot(p.normals[i], sol.point) <= p.offsets[i] + 1e-9);
  }
}

TEST_CASE("simplex agrees with brute-force vertex enumeration in 2D") {
  // Oracle: intersect every constraint pair, keep feasible points, take the
  // best objective value; equals the LP optimum whenever one exists.
  Rng rng(246810);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    LpProblem p;
    int m = rng.uniform_int(3, 10);
    for (int i = 0; i < m; ++i) {
      double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
      p.normals.push_back({std::cos(a), std::sin(a)});
      p.offsets.push_back(rng.uniform(-0.2, 1.5));
    }
    p.objective = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    double best = -1e300;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        double det = p.normals[i][0] * p.normals[j][1] -
                     p.normals[i][1] * p.normals[j][0];
        if (std::abs(det) < 1e-9) continue;
        Vector x{(p.offsets[i] * p.normals[j][1] -
                  p.offsets[j] * p.normals[i][1]) / det,
                 (p.normals[i][0] * p.offsets[j] -
                  p.normals[j][0] * p.offsets[i]) / det};
        bool feasible = true;
        for (int k = 0; k < m && feasible; ++k)
          feasible = dot(p.normals[k], x) <= p.offsets[k] + 1e-9;
        if (feasible) best = std::max(best, dot(p.objective, x));
      }
    }

    LpSolution sol = solve_lp(p);
    if (sol.status == LpStatus::optimal && best > -1e300) {
      CHECK(sol.value == doctest::Approx(best).epsilon(1e-7));
      ++checked;
    } else if (sol.status == LpStatus::infeasible) {
      // The oracle found no feasible vertex either (or the region needs a
      // vertex at infinity, impossible for a bounded optimum).
      CHECK(best == -1e300);
    }
  }
  CHECK(checked > 50);  // the generator must actually exercise the solver
}

TEST_CASE("chebyshev center on reference bodies") {
  Ball sq = chebyshev_center(Shape{unit_square()});
  CHECK(sq.radius == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sq.center[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sq.center[1] == doctest::Approx(0.5).epsilon(1e-12));

  // Right isoceles triangle: inradius (2 - sqrt 2)/2 at (r, r).
  Ball tri = chebyshev_center(
      Shape{ConvexPolygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}})});
  const double r_iso = 0.2928932188134524;
  CHECK(std::abs(tri.radius - r_iso) < 1e-9);
  CHECK(std::abs(tri.center[0] - r_iso) < 1e-9);
  CHECK(std::abs(tri.center[1] - r_iso) < 1e-9);

  // Equilateral triangle, side 1: inradius 1/(2 sqrt 3).
  Ball eq = chebyshev_center(Shape{equilateral_triangle()});
  CHECK(std::abs(eq.radius - 0.2886751345948129) < 1e-9);
}

TEST_CASE("chebyshev center is optimal against random interior points") {
  ConvexPolygon q = scaled(random_convex_polygon(14, 5), 2.0);
  const HPolytope h = to_hpolytope(q);
  ChebyshevResult best = chebyshev_lp(h);
  Rng rng(6);
  for (int t = 0; t < 1000; ++t) {
    Vector c{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    double r = 1e300;
    for (std::size_t i = 0; i < h.num_constraints(); ++i)
      r = std::min(r, (h.offsets()[i] - dot(h.normals()[i], c)) /
                          norm(h.normals()[i]));
    CHECK(r <= best.radius + 1e-9);
  }
}

TEST_CASE("chebyshev center scales equivariantly") {
  ConvexPolygon q = random_convex_polygon(9, 17);
  Ball b1 = chebyshev_center(Shape{q});
  Ball b2 = chebyshev_center(Shape{scaled(q, 3.0)});
  CHECK(b2.radius == doctest::Approx(3.0 * b1.radius).epsilon(1e-9));
  CHECK(b2.center[0] == doctest::Approx(3.0 * b1.center[0]).epsilon(1e-9));
  CHECK(b2.center[1] == doctest::Approx(3.0 * b1.center[1]).epsilon(1e-9));
}

TEST_CASE("hpolytope construction checks boundedness, allows emptiness") {
  CHECK_THROWS_AS(HPolytope({{0.0, 1.0}, {0.0, -1.0}}, {1.0, 1.0}), Unbounded);
  HPolytope empty({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}},
                  {-1.0, -1.0, 1.0, 1.0});
  CHECK(is_empty(empty));
  CHECK_THROWS_AS((void)chebyshev_center(empty), DegenerateShape);
}

TEST_CASE("support of halfspace bodies goes through the LP") {
  const HPolytope sq = to_hpolytope(unit_square());
  CHECK(support(sq, Vector{1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(support(sq, Vector{-1.0, 0.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS((void)support(sq, Vector{0.0, 0.0}), InvalidDirection);
}

TEST_CASE("non-unique centers: the radius is pinned, the center is not") {
  // A 2 x 1 rectangle has a segment of inball centers; the deterministic
  // simplex vertex is reported as "a" center.
  ConvexPolygon rect({Vec2{0, 0}, Vec2{2, 0}, Vec2{2, 1}, Vec2{0, 1}});
  Ball b = chebyshev_center(Shape{rect});
  CHECK(b.radius == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.center[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(b.center[0] >= 0.5 - 1e-9);
  CHECK(b.center[0] <= 1.5 + 1e-9);
}

TEST_CASE("the chebyshev LP is dimension-generic") {
  // 4D hypercube [0,1]^4: inradius 1/2 at the center.
  std::vector<Vector> normals;
  Vector offsets;
  for (int j = 0; j < 4; ++j) {
    Vector pos(4, 0.0), neg(4, 0.0);
    pos[static_cast<std::size_t>(j)] = 1.0;
    neg[static_cast<std::size_t>(j)] = -1.0;
    normals.push_back(pos);
    offsets.push_back(1.0);
    normals.push_back(neg);
    offsets.push_back(0.0);
  }
  Ball b = chebyshev_center(HPolytope(std::move(normals), std::move(offsets)));
  CHECK(b.radius == doctest::Approx(0.5).epsilon(1e-12));
  for (int j = 0; j < 4; ++j)
    CHECK(b.center[static_cast<std::size_t>(j)] ==
          doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("chebyshev center of a 1024-gon disk stays fast and exact") {
  // Inradius of the regular n-gon with circumradius 1 is cos(pi/n).
  ConvexPolygon disk = regular_polygon(1024, 1.0);
  auto t0 = std::chrono::steady_clock::now();
  Ball b = chebyshev_center(Shape{disk});
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  CHECK(std::abs(b.radius - std::cos(std::numbers::pi / 1024.0)) < 1e-9);
  CHECK(norm(Vec2{b.center[0], b.center[1]}) < 1e-9);
  CHECK(dt < 2.0);
}

TEST_CASE("erosion matches offset arithmetic and containment") {
  const HPolytope sq = to_hpolytope(unit_square());
  ConvexPolygon small({Vec2{0, 0}, Vec2{0.25, 0}, Vec2{0.25, 0.25},
                       Vec2{0, 0.25}});
  HPolytope ero = erosion(sq, Shape{small});
  ConvexPolygon ero_poly = to_polygon(ero);
  ConvexPolygon expected({Vec2{0, 0}, Vec2{0.75, 0}, Vec2{0.75, 0.75},
                          Vec2{0, 0.75}});
  CHECK(cyclic_vertex_distance(ero_poly, expected) < 1e-12);

  // Eroding by Q itself leaves exactly the zero translation.
  ChebyshevResult self = chebyshev_lp(erosion(sq, Shape{unit_square()}));
  CHECK(std::abs(self.radius) < 1e-12);

  // Too large: empty.
  CHECK(is_empty(erosion(sq, Shape{scaled(unit_square(), 1.5)})));
}

TEST_CASE("erosion membership equals direct containment on samples") {
  ConvexPolygon q = scaled(random_convex_polygon(12, 8), 2.0);
  ConvexPolygon p = random_convex_polygon(7, 9);
  const HPolytope hq = to_hpolytope(q);
  HPolytope ero = erosion(hq, Shape{p});
  Rng rng(10);
  for (int t = 0; t < 2000; ++t) {
    Vector tr{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    double slack = 1e300;
    for (std::size_t i = 0; i < ero.num_constraints(); ++i)
      slack = std::min(slack, (ero.offsets()[i] - dot(ero.normals()[i], tr)) /
                                  norm(ero.normals()[i]));
    double direct = contains(Shape{q}, translated(Shape{p}, tr)).margin;
    CHECK(std::abs(slack - direct) < 1e-9);
  }
}

TEST_CASE("min width on reference bodies") {
  MinWidthResult eq = min_width(Shape{equilateral_triangle()});
  CHECK(std::abs(eq.width - 0.8660254037844386) < 1e-12);
  Ball inc = chebyshev_center(Shape{equilateral_triangle()});
  CHECK(eq.width > 2.0 * inc.radius);  // strictly wider than the inball

  CHECK(min_width(Shape{unit_square()}).width == doctest::Approx(1.0));

  ConvexPolygon rect({Vec2{0, 0}, Vec2{2, 0}, Vec2{2, 1}, Vec2{0, 1}});
  MinWidthResult rw = min_width(Shape{rect});
  CHECK(rw.width == doctest::Approx(1.0));
  CHECK(std::abs(std::abs(rw.direction[1]) - 1.0) < 1e-12);

  CHECK(min_width(Shape{Ball(Vector{0.0, 0.0}, 0.7)}).width ==
        doctest::Approx(1.4));
  CHECK_THROWS_AS((void)min_width(Shape{ConvexPolygon({Vec2{0, 0}, Vec2{1, 1}})}),
                  DegenerateShape);
}

TEST_CASE("min width agrees with the support formula over edge normals") {
  for (int t = 0; t < 25; ++t) {
    ConvexPolygon q = random_convex_polygon(5 + t % 20, 900 + t);
    double direct = 1e300;
    const auto& v = q.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      Vec2 e = v[(i + 1) % v.size()] - v[i];
      Vec2 n = normalized(Vec2{e.y, -e.x});
      direct = std::min(direct, width_in(q, n));
    }
    CHECK(min_width(Shape{q}).width == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("min width in 3D: cube and flattened box") {
  VPolytope3 cube = unit_cube();
  CHECK(min_width(Shape{cube}).width == doctest::Approx(1.0));
  VPolytope3 slab = scaled(cube, 2.0);
  CHECK(min_width(Shape{slab}).width == doctest::Approx(2.0));

  // width >= inball diameter, both exact and approximate paths.
  Ball inc = chebyshev_center(Shape{cube});
  CHECK(min_width(Shape{cube}).width >= 2.0 * inc.radius - 1e-9);
  CHECK(min_width(Shape{cube}, true).width >= 1.0 - 1e-6);
}

TEST_CASE("width is at least the inball diameter on random bodies") {
  for (int t = 0; t < 25; ++t) {
    ConvexPolygon q = random_convex_polygon(6 + t % 12, 12000 + t);
    Ball inball = chebyshev_center(Shape{q});
    CHECK(min_width(Shape{q}).width >= 2.0 * inball.radius - 1e-9);
  }
}
