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

#include <benchmark/benchmark.h>

#include "kakeya/kakeya.hpp"

namespace {

using namespace kakeya;

ConvexPolygon unit_square_poly() {
  return ConvexPolygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}});
}

void BM_MinkowskiSum2(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ConvexPolygon p = regular_polygon(n, 1.0);
  ConvexPolygon r = regular_polygon(n, 0.7, 0.3);
  for (auto _ : state) {
    ConvexPolygon s = minkowski_sum(p, r);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MinkowskiSum2)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_ChebyshevCenter(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HPolytope q = to_hpolytope(regular_polygon(n, 1.0));
  for (auto _ : state) {
    ChebyshevResult c = chebyshev_lp(q);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ChebyshevCenter)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_Hull3(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back(rng.on_unit_sphere());
  for (auto _ : state) {
    VPolytope3 hull = VPolytope3::hull(pts);
    benchmark::DoNotOptimize(hull);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Hull3)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_SweepFit(benchmark::State& state) {
  int samples = static_cast<int>(state.range(0));
  HPolytope q = to_hpolytope(unit_square_poly());
  ConvexPolygon p = scaled(regular_polygon(24, 1.0), 0.3);
  for (auto _ : state) {
    SweepReport rep = sweep_fit(Shape{p}, q, samples, false);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_SweepFit)->RangeMultiplier(4)->Range(16, 1024);

void BM_MaxScale(benchmark::State& state) {
  HPolytope q = to_hpolytope(unit_square_poly());
  ConvexPolygon p = regular_polygon(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    double alpha = max_scale(Shape{p}, q, 90);
    benchmark::DoNotOptimize(alpha);
  }
}
BENCHMARK(BM_MaxScale)->Arg(8)->Arg(64)->Arg(256);

void BM_MuAverage(benchmark::State& state) {
  int mu = static_cast<int>(state.range(0));
  ConvexPolygon rect({Vec2{0, 0}, Vec2{2, 0}, Vec2{2, 1}, Vec2{0, 1}});
  for (auto _ : state) {
    ConvexPolygon avg = mu_average(rect, mu);
    benchmark::DoNotOptimize(avg);
  }
}
BENCHMARK(BM_MuAverage)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
