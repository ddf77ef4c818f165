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

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("shoelace area on reference shapes") {
  CHECK(area(unit_square()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(area(ConvexPolygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}})) ==
        doctest::Approx(0.5).epsilon(1e-15));

  // Regular hexagon, circumradius 1: analytic (3 sqrt 3)/2, cross-checked by
  // Monte Carlo point counting.
  ConvexPolygon hex = regular_polygon(6, 1.0);
  CHECK(std::abs(area(hex) - 2.598076211353316) < 1e-12);
  CHECK(std::abs(mc_area(hex, 1000000, 7) - area(hex)) < 0.02);
}

TEST_CASE("perimeter on reference shapes") {
  CHECK(perimeter(unit_square()) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(perimeter(ConvexPolygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}})) -
                 3.414213562373095) < 1e-12);  // 2 + sqrt 2
  // Regular 64-gon, circumradius 1: 2 * 64 * sin(pi/64).
  CHECK(std::abs(perimeter(regular_polygon(64, 1.0)) -
                 2.0 * 64.0 * std::sin(kPi / 64.0)) < 1e-12);
}

TEST_CASE("degenerate bodies are representable but measureless") {
  ConvexPolygon point({Vec2{0.25, 0.5}});
  ConvexPolygon segment({Vec2{0, 0}, Vec2{1, 1}});
  CHECK(point.degenerate());
  CHECK(segment.degenerate());
  CHECK_THROWS_AS((void)area(segment), DegenerateShape);
  CHECK_THROWS_AS((void)perimeter(segment), DegenerateShape);
  CHECK_THROWS_AS((void)area(point), DegenerateShape);

  // Support and rotation still work.
  CHECK(support(segment, Vec2{1, 0}) == doctest::Approx(1.0));
  ConvexPolygon seg_rot = rotated(segment, Rotation::planar(kPi / 2.0));
  CHECK(support(seg_rot, Vec2{0, 1}) == doctest::Approx(1.0));

  // Collinear input collapses to a segment.
  ConvexPolygon collapsed({Vec2{0, 0}, Vec2{0.3, 0.3}, Vec2{1, 1}});
  CHECK(collapsed.size() == 2);
}

TEST_CASE("constructor rejects junk, cleans collinear vertices") {
  CHECK_THROWS_AS(
      ConvexPolygon({Vec2{0, 0}, Vec2{1, 1}, Vec2{1, 0}, Vec2{0, 1}}),
      InvalidParameter);  // self-crossing order
  ConvexPolygon with_mid({Vec2{0, 0}, Vec2{0.5, 0}, Vec2{1, 0}, Vec2{1, 1},
                          Vec2{0, 1}});
  CHECK(with_mid.size() == 4);  // edge midpoint dropped
  CHECK(area(with_mid) == doctest::Approx(1.0));
}

TEST_CASE("support function on squares and balls") {
  CHECK(support(unit_square(), Vec2{1, 0}) == doctest::Approx(1.0));
  CHECK(support(unit_square(), Vec2{1, 1}) == doctest::Approx(2.0));
  Ball b(Vector{0.5, 0.5}, 0.5);
  CHECK(support(b, Vector{0, 1}) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)support(unit_square(), Vec2{0, 0}), InvalidDirection);
  CHECK_THROWS_AS((void)support(b, Vector{0, 0}), InvalidDirection);
}

TEST_CASE("rotation preserves orientation and matches expected vertices") {
  ConvexPolygon sq = rotated(unit_square(), Rotation::planar(kPi / 2.0));
  ConvexPolygon expected({Vec2{0, 0}, Vec2{0, 1}, Vec2{-1, 1}, Vec2{-1, 0}});
  CHECK(cyclic_vertex_distance(sq, expected) < 1e-12);

  ConvexPolygon same = rotated(unit_square(), Rotation::planar(0.0));
  CHECK(cyclic_vertex_distance(same, unit_square()) == 0.0);

  CHECK_THROWS_AS(rotated(unit_square(), Rotation::identity(3)),
                  DimensionMismatch);
}

TEST_CASE("containment margins") {
  Shape sq{unit_square()};
  ConvexPolygon inner({Vec2{0.25, 0.25}, Vec2{0.75, 0.25}, Vec2{0.75, 0.75},
                       Vec2{0.25, 0.75}});
  Containment c = contains(sq, Shape{inner});
  CHECK(c.contained);
  CHECK(c.margin == doctest::Approx(0.25).epsilon(1e-12));

  Containment tangent = contains(sq, Shape{Ball(Vector{0.5, 0.5}, 0.5)});
  CHECK(tangent.contained);
  CHECK(tangent.margin == doctest::Approx(0.0));

  Containment over = contains(sq, Shape{Ball(Vector{0.5, 0.5}, 0.6)});
  CHECK_FALSE(over.contained);
  CHECK(over.margin == doctest::Approx(-0.1).epsilon(1e-12));
}

TEST_CASE("area and perimeter are rigid-motion invariant and homogeneous") {
  for (int t = 0; t < 50; ++t) {
    ConvexPolygon p = random_convex_polygon(4 + t % 13, 1000 + t);
    double a0 = area(p), l0 = perimeter(p);

    Rng rng(77 + t);
    Rotation rho = Rotation::planar(rng.uniform(0.0, 2.0 * kPi));
    Vec2 shift{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    ConvexPolygon moved = translated(rotated(p, rho), shift);
    CHECK(std::abs(area(moved) - a0) <= 1e-12 * a0 + 1e-15);
    CHECK(std::abs(perimeter(moved) - l0) <= 1e-12 * l0 + 1e-15);

    double alpha = rng.uniform(0.1, 4.0);
    CHECK(area(scaled(p, alpha)) ==
          doctest::Approx(alpha * alpha * a0).epsilon(1e-12));
    CHECK(perimeter(scaled(p, alpha)) ==
          doctest::Approx(alpha * l0).epsilon(1e-12));
  }
}

TEST_CASE("support is sublinear on random direction pairs") {
  for (int t = 0; t < 50; ++t) {
    ConvexPolygon p = random_convex_polygon(4 + t % 9, 2000 + t);
    Rng rng(31 + t);
    Vec2 u{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Vec2 v{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (norm(u) == 0.0 || norm(v) == 0.0 || norm(u + v) == 0.0) continue;
    CHECK(support(p, u + v) <= support(p, u) + support(p, v) + 1e-12);
  }
}

TEST_CASE("nonnegative containment margin covers sampled boundary points") {
  for (int t = 0; t < 20; ++t) {
    ConvexPolygon q = scaled(random_convex_polygon(10, 3000 + t), 2.0);
    ConvexPolygon p = random_convex_polygon(8, 4000 + t);
    Containment c = contains(Shape{q}, Shape{p});
    if (c.margin < 0.0) continue;
    const auto& v = p.vertices();
    Rng rng(5000 + t);
    for (int s = 0; s < 200; ++s) {
      std::size_t i = static_cast<std::size_t>(rng.uniform_int(
          0, static_cast<int>(v.size()) - 1));
      double w = rng.uniform();
      Vec2 pt = v[i] + (v[(i + 1) % v.size()] - v[i]) * w;
      Containment cp = contains(Shape{q}, Shape{Ball(to_vector(pt), 0.0)});
      CHECK(cp.margin >= -1e-12);
    }
  }
}

TEST_CASE("hull of random disk points stays in the disk") {
  ConvexPolygon p = random_convex_polygon(100, 7);
  CHECK(area(p) < kPi);
  CHECK(random_convex_polygon(3, 1).size() >= 3);
  // Determinism.
  ConvexPolygon a = random_convex_polygon(12, 99);
  ConvexPolygon b = random_convex_polygon(12, 99);
  CHECK(cyclic_vertex_distance(a, b) == 0.0);
}

TEST_CASE("quaternion rotations act as expected") {
  Rotation r = Rotation::quaternion(std::cos(kPi / 4.0), 0.0, 0.0,
                                    std::sin(kPi / 4.0));  // 90 deg about z
  Vec3 v = r.apply(Vec3{1, 0, 0});
  CHECK(norm(v - Vec3{0, 1, 0}) < 1e-12);
  CHECK_THROWS_AS(Rotation::quaternion(2.0, 0.0, 0.0, 0.0), InvalidParameter);

  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    Rotation q = rng.unit_quaternion();
    Vec3 x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    CHECK(std::abs(norm(q.apply(x)) - norm(x)) < 1e-12);  // isometry
    CHECK(norm(q.inverse().apply(q.apply(x)) - x) < 1e-12);
  }
}
