/* Copyright 2026 The unitconv Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "unitconv/design.hpp"
#include "unitconv/distance.hpp"
#include "unitconv/duality.hpp"
#include "unitconv/groupring.hpp"

namespace {

using namespace unitconv;

void BM_FieldMul(benchmark::State& state, std::uint32_t p, std::uint32_t m) {
  const Field f = make_field(p, m);
  const auto q = static_cast<Elem>(std::min<std::uint64_t>(f.cardinality(), 1u << 20));
  Elem a = 1, acc = 0;
  for (auto _ : state) {
    a = a + 1 < q ? a + 1 : 1;
    acc = f.add(acc, f.mul(a, a));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK_CAPTURE(BM_FieldMul, gf11, 11, 1);
BENCHMARK_CAPTURE(BM_FieldMul, gf3_6, 3, 6);
BENCHMARK_CAPTURE(BM_FieldMul, gf2_12, 2, 12);

void BM_FieldMulReference(benchmark::State& state) {
  const Field f = make_field(3, 6);
  Elem a = 1, acc = 0;
  for (auto _ : state) {
    a = a + 1 < 729 ? a + 1 : 1;
    acc = f.add_reference(acc, f.mul_reference(a, a));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMulReference);

void BM_Chebotarev(benchmark::State& state, std::uint32_t p, std::uint32_t m, std::size_t n) {
  const Matrix U = fourier_matrix(make_field(p, m), n).U;
  for (auto _ : state) benchmark::DoNotOptimize(chebotarev_check(U).holds);
}
BENCHMARK_CAPTURE(BM_Chebotarev, f5_gf11, 11, 1, 5);
BENCHMARK_CAPTURE(BM_Chebotarev, f7_gf3_6, 3, 6, 7)->Unit(benchmark::kMillisecond);

void BM_LinearMinDistance(benchmark::State& state) {
  const Matrix U = fourier_matrix(make_field(23), 11).U;
  std::vector<std::size_t> rows(static_cast<std::size_t>(state.range(0)));
  std::iota(rows.begin(), rows.end(), 0);
  const Matrix g = U.select_rows(rows);
  for (auto _ : state) benchmark::DoNotOptimize(linear_min_distance(g));
}
BENCHMARK(BM_LinearMinDistance)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_TrellisFourier(benchmark::State& state) {
  const UnitScheme u = UnitScheme::fourier(make_field(11), 5);
  const ConvCode code = build_generator(u, SelectionScheme({{0, 1}, {2, 3}}));
  for (auto _ : state) benchmark::DoNotOptimize(free_distance_exact(code).upper);
}
BENCHMARK(BM_TrellisFourier)->Unit(benchmark::kMicrosecond);

void BM_TrellisBinary(benchmark::State& state) {
  const GroupSpec g = GroupSpec::cyclic(16);
  GroupRingElement u(make_field(2), g);
  for (int e : {1, 7, 8, 9, 15}) u.add_term(g.element(e), 1);
  const ConvCode code = build_dual_containing(to_matrix(u), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(free_distance_exact(code).upper);
}
BENCHMARK(BM_TrellisBinary)->Unit(benchmark::kMillisecond);

void BM_BoundsLengthEleven(benchmark::State& state) {
  const UnitScheme u = UnitScheme::fourier(make_field(23), 11);
  const ConvCode code = build_generator(u, SelectionScheme({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
  for (auto _ : state) benchmark::DoNotOptimize(free_distance_bounds(code, &u).upper);
}
BENCHMARK(BM_BoundsLengthEleven)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
