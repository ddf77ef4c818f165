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

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "kakeya/rotation.hpp"
#include "kakeya/vec.hpp"

namespace kakeya {

/// Default seed of the 3D orientation sampler.
inline constexpr std::uint64_t kDefaultQuatSeed = 0x6B616B65ULL;

/// Default master seed of the experiment suites.
inline constexpr std::uint64_t kDefaultSeed = 42ULL;

/// SplitMix64 step, used to derive independent per-trial seeds from a master
/// seed so that results do not depend on evaluation order.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic random source.  Doubles are produced from the raw 64-bit
/// output, not from std::uniform_real_distribution, so identical seeds give
/// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Vec2 in_unit_disk() {
    for (;;) {
      Vec2 p{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
      if (norm_sq(p) <= 1.0) return p;
    }
  }

  Vec3 on_unit_sphere() {
    for (;;) {
      Vec3 p{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
      double n2 = norm_sq(p);
      if (n2 > 1e-12 && n2 <= 1.0) return p * (1.0 / std::sqrt(n2));
    }
  }

  /// Uniform rotation in SO(3) (subgroup-algorithm quaternion).
  Rotation unit_quaternion() {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = uniform();
    double b = uniform() * two_pi;
    double c = uniform() * two_pi;
    double s1 = std::sqrt(1.0 - a), s2 = std::sqrt(a);
    return Rotation::quaternion(s1 * std::sin(b), s1 * std::cos(b),
                                s2 * std::sin(c), s2 * std::cos(c));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace kakeya
