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

#include "seclogit/primitives.hpp"
#include "seclogit/secure_ops.hpp"

namespace {

using namespace seclogit;

void BM_MulShares(benchmark::State& state) {
  const int parties = static_cast<int>(state.range(0));
  Engine eng(FixedPointCodec{}, parties, 1);
  eng.transcript().set_recording(false);
  Prng rng(1);
  const auto a = split_vector(Eigen::VectorXd::Constant(1, 3.25), eng.codec(), parties, rng);
  const auto b = split_vector(Eigen::VectorXd::Constant(1, -1.5), eng.codec(), parties, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul_shares(a, b, eng));
  }
}
BENCHMARK(BM_MulShares)->Arg(2)->Arg(3)->Arg(5);

void BM_MatMul(benchmark::State& state) {
  const auto d = state.range(0);
  Engine eng(FixedPointCodec{}, 2, 2);
  eng.transcript().set_recording(false);
  Prng rng(2);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d) * 1.5;
  const auto a = split_matrix(m, eng.codec(), 2, rng);
  const auto b = split_matrix(m, eng.codec(), 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matmul(a, b, eng));
  }
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(8);

void BM_GtXor(benchmark::State& state) {
  Engine eng(FixedPointCodec{}, 2, 3);
  eng.transcript().set_recording(false);
  const RingElem u = eng.codec().encode(1.25);
  const RingElem v = eng.codec().encode(0.75);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gt_xor(0, u, 1, v, Tag::kGt, eng));
  }
}
BENCHMARK(BM_GtXor);

void BM_TruncateShares(benchmark::State& state) {
  Engine eng(FixedPointCodec{}, 2, 4);
  eng.transcript().set_recording(false);
  Prng rng(4);
  const auto raw = product_raw(
      split_vector(Eigen::VectorXd::Constant(1, 2.5), eng.codec(), 2, rng),
      split_vector(Eigen::VectorXd::Constant(1, -4.0), eng.codec(), 2, rng), eng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncate_shares(raw, eng.codec().frac_bits(), eng));
  }
}
BENCHMARK(BM_TruncateShares);

}  // namespace
