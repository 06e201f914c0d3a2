// Copyright 2026 The catsheaf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "catsheaf/sieve.hpp"
#include "catsheaf/yoneda.hpp"
#include "support/fixtures.hpp"

namespace catsheaf {
namespace {

AmbientPtr ob(FiniteCategory base) {
  return std::make_shared<const AmbientCategory>(
      build_ob({std::move(base), AmbientMode::kInclusionsOnly, {}, kDefaultCap}));
}

void BM_EnumerateFunctorsS3(benchmark::State& state) {
  auto s3 = share(fixtures::s3());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_functors(s3, s3, kDefaultCap));
}
BENCHMARK(BM_EnumerateFunctorsS3);

void BM_FunctorCategoryArrowWalk3(benchmark::State& state) {
  auto a = share(fixtures::arrow());
  auto w = share(fixtures::walk3());
  for (auto _ : state) benchmark::DoNotOptimize(build_functor_category(a, w, kDefaultCap));
}
BENCHMARK(BM_FunctorCategoryArrowWalk3);

void BM_HomTableObSquare(benchmark::State& state) {
  AmbientPtr amb = ob(fixtures::square());
  for (auto _ : state) {
    HomTable t(amb, kDefaultCap);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_HomTableObSquare)->Unit(benchmark::kMillisecond);

void BM_EmbeddingObArrow(benchmark::State& state) {
  HomTable t(ob(fixtures::arrow()), kDefaultCap);
  for (auto _ : state) benchmark::DoNotOptimize(check_embedding(t, kDefaultCap));
}
BENCHMARK(BM_EmbeddingObArrow)->Unit(benchmark::kMillisecond);

void BM_EnumerateSievesObWalk3(benchmark::State& state) {
  auto t = std::make_shared<const HomTable>(ob(fixtures::walk3()), kDefaultCap);
  const Obj u = *t->ambient().find_object(fixtures::walk3());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sieves(t, u, kDefaultCap));
}
BENCHMARK(BM_EnumerateSievesObWalk3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace catsheaf

BENCHMARK_MAIN();
