/* Copyright 2026 The Weilv Authors.

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

#include <cstdint>
#include <vector>

#include "weilv/charsum.hpp"
#include "weilv/counting.hpp"
#include "weilv/ffield.hpp"
#include "weilv/fixtures.hpp"
#include "weilv/zeta.hpp"

namespace {

using weilv::CountOptions;
using weilv::FieldCtx;
using weilv::FieldCtxPtr;
using weilv::FieldElement;
using weilv::Fixture;
using weilv::Int;

const Fixture& fixture(const char* label) {
  static const auto cat = weilv::catalog();
  return weilv::fixture_by_label(cat, label);
}

// Field-element multiplication in a mid-sized extension, the inner loop
// of all point counting.
void BM_FieldMul(benchmark::State& state) {
  const FieldCtxPtr ctx =
      FieldCtx::make(5, static_cast<int>(state.range(0)));
  FieldElement a = FieldElement::generator(ctx);
  FieldElement b = a * a + FieldElement::one(ctx);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(4)->Arg(12)->Arg(24);

void BM_FieldInverse(benchmark::State& state) {
  const FieldCtxPtr ctx =
      FieldCtx::make(5, static_cast<int>(state.range(0)));
  FieldElement a = FieldElement::generator(ctx);
  for (auto _ : state) {
    FieldElement inv = a.inverse();
    benchmark::DoNotOptimize(inv);
    a = a + FieldElement::one(ctx);
    if (a.is_zero()) a = FieldElement::one(ctx);
  }
}
BENCHMARK(BM_FieldInverse)->Arg(1)->Arg(4)->Arg(12);

// Brute-force point counts: a plane cubic over F_{5^n}.
void BM_CountCurve(benchmark::State& state) {
  const auto& f = fixture("elliptic-5a");
  const int n = static_cast<int>(state.range(0));
  CountOptions options;
  options.budget = std::uint64_t{1} << 32;
  for (auto _ : state) {
    Int count = weilv::count_points(f.variety, n, options);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() *
                          weilv::enumeration_cost(f.variety, n).get_ui());
}
BENCHMARK(BM_CountCurve)->Arg(1)->Arg(2)->Arg(3)->Arg(4)
    ->Unit(benchmark::kMillisecond);

// The same count split across worker threads.
void BM_CountCurveThreaded(benchmark::State& state) {
  const auto& f = fixture("elliptic-5a");
  CountOptions options;
  options.budget = std::uint64_t{1} << 32;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Int count = weilv::count_points(f.variety, 4, options);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() *
                          weilv::enumeration_cost(f.variety, 4).get_ui());
}
BENCHMARK(BM_CountCurveThreaded)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

// Zeta bookkeeping: series from counts plus rational reconstruction.
void BM_ZetaReconstruct(benchmark::State& state) {
  const auto& f = fixture("elliptic-5a");
  const weilv::CountTable table =
      weilv::count_table(f.variety, 4, {std::uint64_t{1} << 28, 1});
  for (auto _ : state) {
    const weilv::TruncatedSeries series = weilv::zeta_series(table, 4);
    weilv::RationalFn z = weilv::reconstruct_rational(series, 2, 2);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_ZetaReconstruct);

void BM_KloostermanSweep(benchmark::State& state) {
  const FieldCtxPtr ctx =
      FieldCtx::make(static_cast<std::uint64_t>(state.range(0)), 1);
  for (auto _ : state) {
    weilv::CharacterSumResult res = weilv::kloosterman(ctx, 1);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_KloostermanSweep)->Arg(101)->Arg(1009)->Arg(10007);

void BM_RamanujanTau(benchmark::State& state) {
  const int limit = static_cast<int>(state.range(0));
  for (auto _ : state) {
    weilv::TauReport report = weilv::ramanujan_tau(limit);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_RamanujanTau)->Arg(100)->Arg(1000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
