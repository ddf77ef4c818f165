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

#include <cmath>
#include <numbers>

#include "helpers.hpp"

using namespace kakeya;
using namespace testutil;

TEST_CASE("hull drops interior points and reproduces the cube") {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i)
    pts.push_back({static_cast<double>(i & 1), static_cast<double>((i >> 1) & 1),
                   static_cast<double>((i >> 2) & 1)});
  pts.push_back({0.5, 0.5, 0.5});
  VPolytope3 cube = VPolytope3::hull(pts);
  CHECK(cube.vertices().size() == 8);
  CHECK(volume(cube) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(surface_area(cube) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("tetrahedron volume and homogeneity") {
  VPolytope3 tet = VPolytope3::hull(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(tet.vertices().size() == 4);
  CHECK(volume(tet) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  VPolytope3 big = scaled(unit_cube(), 2.0);
  CHECK(volume(big) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(surface_area(big) == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("hull rejects degenerate input") {
  CHECK_THROWS_AS(VPolytope3::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
                  DegenerateShape);
  CHECK_THROWS_AS(VPolytope3::hull({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}),
                  DegenerateShape);  // collinear
  CHECK_THROWS_AS(
      VPolytope3::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0.3, 0.4, 0}}),
      DegenerateShape);  // coplanar
}

TEST_CASE("hull swallows on-boundary points") {
  // Cube corners plus face centers and edge midpoints; the derived measures
  // must be the cube's even if some boundary points linger as vertices.
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i)
    pts.push_back({static_cast<double>(i & 1), static_cast<double>((i >> 1) & 1),
                   static_cast<double>((i >> 2) & 1)});
  pts.push_back({0.5, 0.5, 0.0});
  pts.push_back({0.5, 0.0, 0.5});
  pts.push_back({0.5, 0.0, 0.0});
  pts.push_back({1.0, 0.5, 0.5});
  VPolytope3 cube = VPolytope3::hull(pts);
  CHECK(volume(cube) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(surface_area(cube) == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("random ball hulls stay inside the ball, contain their input") {
  Rng rng(424242);
  std::vector<Vec3> pts;
  for (int i = 0; i < 100; ++i) {
    Vec3 p = rng.on_unit_sphere();
    pts.push_back(p * std::cbrt(rng.uniform()));
  }
  VPolytope3 hull = VPolytope3::hull(pts);
  CHECK(volume(hull) < 4.0 / 3.0 * std::numbers::pi);
  // Containment oracle: every input point satisfies every facet plane.
  HPolytope h = to_hpolytope(hull);
  for (const Vec3& p : pts) {
    for (std::size_t i = 0; i < h.num_constraints(); ++i)
      CHECK(dot(h.normals()[i], to_vector(p)) <= h.offsets()[i] + 1e-9);
  }
}

TEST_CASE("hull volume is monotone under adding points") {
  Rng rng(777);
  std::vector<Vec3> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(rng.on_unit_sphere() * rng.uniform());
  VPolytope3 small = VPolytope3::hull(pts);
  double v_small = volume(small);
  for (int i = 0; i < 20; ++i) pts.push_back(rng.on_unit_sphere() * rng.uniform());
  VPolytope3 big = VPolytope3::hull(pts);
  CHECK(volume(big) >= v_small - 1e-12);
}

TEST_CASE("support and rotation of 3D bodies") {
  VPolytope3 cube = unit_cube();
  CHECK(support(cube, Vec3{1, 0, 0}) == doctest::Approx(1.0));
  CHECK(support(cube, Vec3{1, 1, 1}) == doctest::Approx(3.0));
  CHECK_THROWS_AS((void)support(cube, Vec3{0, 0, 0}), InvalidDirection);

  Rng rng(3131);
  Rotation q = rng.unit_quaternion();
  VPolytope3 rot = rotated(cube, q);
  CHECK(volume(rot) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(surface_area(rot) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("hull volume agrees with Monte Carlo membership counting") {
  for (int t = 0; t < 4; ++t) {
    VPolytope3 k = random_convex_polytope3(14, 13000 + t);
    HPolytope h = to_hpolytope(k);
    Rng rng(14000 + t);
    const int n = 400000;
    int inside = 0;
    for (int s = 0; s < n; ++s) {
      Vector p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
               rng.uniform(-1.0, 1.0)};
      bool in = true;
      for (std::size_t i = 0; i < h.num_constraints() && in; ++i)
        in = dot(h.normals()[i], p) <= h.offsets()[i];
      inside += in;
    }
    double mc = 8.0 * inside / n;
    CHECK(std::abs(mc - volume(k)) < 0.05 * volume(k) + 0.01);
  }
}

TEST_CASE("exact and sampled width agree on random polytopes") {
  for (int t = 0; t < 4; ++t) {
    VPolytope3 k = random_convex_polytope3(12, 15000 + t);
    double exact = min_width(Shape{k}).width;
    double approx = min_width(Shape{k}, true).width;
    CHECK(approx >= exact - 1e-9);   // the sampled search cannot beat exact
    CHECK(approx <= exact * 1.05);   // and lands close after refinement
  }
}

TEST_CASE("icosphere helper approximates the unit ball") {
  VPolytope3 s = icosphere(2);
  CHECK(volume(s) < 4.0 / 3.0 * std::numbers::pi);
  CHECK(volume(s) > 0.95 * 4.0 / 3.0 * std::numbers::pi);
  CHECK(surface_area(s) < 4.0 * std::numbers::pi);
  // Refinement tightens the approximation.
  CHECK(volume(icosphere(3)) > volume(s));
}
