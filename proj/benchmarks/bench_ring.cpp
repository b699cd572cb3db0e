// Copyright 2026 The seclogit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "seclogit/prng.hpp"
#include "seclogit/ring.hpp"

namespace {

using namespace seclogit;

void BM_EncodeDecode(benchmark::State& state) {
  const FixedPointCodec codec;
  Prng rng(1);
  double x = rng.unit() * 100.0;
  for (auto _ : state) {
    const RingElem e = codec.encode(x);
    benchmark::DoNotOptimize(codec.decode(e));
  }
}
BENCHMARK(BM_EncodeDecode);

void BM_MulTruncate(benchmark::State& state) {
  const FixedPointCodec codec;
  Prng rng(2);
  const RingElem a = codec.encode(3.25);
  const RingElem b = codec.encode(-7.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(codec.truncate(codec.mul(a, b), codec.frac_bits()));
  }
}
BENCHMARK(BM_MulTruncate);

void BM_RingUniform(benchmark::State& state) {
  const FixedPointCodec codec;
  Prng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng.ring_uniform(codec));
  }
}
BENCHMARK(BM_RingUniform);

}  // namespace
